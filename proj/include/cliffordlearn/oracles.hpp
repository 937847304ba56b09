// Copyright 2026 The cliffordlearn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "cliffordlearn/distribution.hpp"
#include "cliffordlearn/tableau.hpp"

namespace cliffordlearn {

// SAMPLE oracle: i.i.d. draws from a distribution or from computational-
// basis measurements of a stabilizer state. Every draw bumps the counter.
class SampleOracle {
  public:
    SampleOracle(BornDistribution source, std::mt19937_64 rng);
    SampleOracle(StabilizerTableau source, std::mt19937_64 rng);

    BitVec sample();
    size_t num_bits() const;
    uint64_t query_count() const { return query_count_; }

  private:
    std::variant<BornDistribution, StabilizerTableau> source_;
    std::mt19937_64 rng_;
    uint64_t query_count_ = 0;
};

enum class SQMode { Exact, GridRounded, Empirical };

std::string to_string(SQMode mode);
SQMode sq_mode_from_string(const std::string& s);

// Statistical query oracle with tolerance tau on a declared codomain.
// Exact answers P[phi]; GridRounded answers P[phi] snapped to the nearest
// multiple of tau with ties toward zero; Empirical answers a Hoeffding-sized
// sample mean and honors the tolerance with probability >= 1 - delta_prime
// per query.
class SQOracle {
  public:
    SQOracle(BornDistribution target, double tau, SQMode mode, double lo = -1.0,
             double hi = 1.0, double delta_prime = 0.01,
             std::mt19937_64 rng = std::mt19937_64(0));

    double query(const StatQuery& phi);

    double tau() const { return tau_; }
    double lo() const { return lo_; }
    double hi() const { return hi_; }
    SQMode mode() const { return mode_; }
    const BornDistribution& target() const { return target_; }
    uint64_t query_count() const { return query_count_; }

  private:
    BornDistribution target_;
    double tau_;
    SQMode mode_;
    double lo_;
    double hi_;
    double delta_prime_;
    std::mt19937_64 rng_;
    uint64_t query_count_ = 0;
};

// Sample-mean SQ simulation: consumes the Hoeffding number of draws for a
// codomain-(phi) query at tolerance tau and failure budget delta_prime.
double simulate_sq_from_samples(SampleOracle& oracle, const StatQuery& phi, double tau,
                                double delta_prime);

// Generalized-codomain query through a [-1,1] oracle via tolerance
// rescaling: queries the rescaled phi and maps the answer back. With inner
// tolerance 2*tau/(hi-lo) the answer is within tau of P[phi].
double generalized_sq(SQOracle& inner, const StatQuery& phi);

// Average of SQ responses to the kernel sections K(x_i, .): one query per
// model sample.
double mmd_sq_estimate(const std::vector<BitVec>& model_samples, const GaussianKernel& kernel,
                       SQOracle& sq);

}  // namespace cliffordlearn
