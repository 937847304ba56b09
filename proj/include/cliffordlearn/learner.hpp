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

#include <random>

#include "cliffordlearn/affine.hpp"
#include "cliffordlearn/distribution.hpp"
#include "cliffordlearn/oracles.hpp"

namespace cliffordlearn {

struct LearnerConfig {
    size_t n;
    double delta;  // failure probability, in (0, 1)
};

// Exact model of an affine-uniform distribution: the evaluator returns the
// dyadic probability 2^-m on the subspace and 0 off it; the generator draws
// uniform coefficients and maps them through the basis.
class LearnedModel {
  public:
    explicit LearnedModel(AffineSubspace subspace) : subspace_(std::move(subspace)) {}

    const AffineSubspace& subspace() const { return subspace_; }

    Dyadic evaluate(const BitVec& x) const;
    BitVec generate(std::mt19937_64& rng) const;

    BornDistribution distribution() const { return BornDistribution::affine(subspace_); }

  private:
    AffineSubspace subspace_;
};

// Number of samples the recovery algorithm consumes: n + ceil(log2(1/delta)).
size_t recovery_sample_count(size_t n, double delta);

// Affine subspace recovery from samples of an affine-uniform source: draw
// k samples, difference against the first, keep a maximal independent
// subset as the basis, and use the first sample as the offset. Succeeds
// (canonical form equal to the true support) with probability >= 1 - delta.
AffineSubspace recover_affine(SampleOracle& oracle, const LearnerConfig& config);

LearnedModel pac_learn(SampleOracle& oracle, const LearnerConfig& config);

}  // namespace cliffordlearn
