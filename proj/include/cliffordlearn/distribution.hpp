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
#include <string>
#include <variant>
#include <vector>

#include "cliffordlearn/affine.hpp"
#include "cliffordlearn/stat_query.hpp"

namespace cliffordlearn {

// A probability that is exactly zero or an exact power of two. Affine
// uniform distributions never touch floating point for event probabilities.
struct Dyadic {
    bool zero = true;
    size_t neg_exponent = 0;  // value 2^-neg_exponent when zero is false

    static Dyadic zero_value() { return {}; }
    static Dyadic pow2(size_t neg_exponent) { return {false, neg_exponent}; }

    double value() const { return zero ? 0.0 : std::ldexp(1.0, -static_cast<int>(neg_exponent)); }

    bool operator==(const Dyadic& other) const {
        return zero == other.zero && (zero || neg_exponent == other.neg_exponent);
    }
    bool operator!=(const Dyadic& other) const { return !(*this == other); }
};

// Born distribution of a stabilizer state (uniform over an affine subspace,
// probabilities dyadic) or an explicit probability table for small n.
class BornDistribution {
  public:
    struct Dense {
        size_t n;
        std::vector<double> table;  // indexed by BitVec::to_index_msb0
    };

    static BornDistribution affine(AffineSubspace support);
    static BornDistribution dense(size_t n, std::vector<double> table);
    static BornDistribution uniform(size_t n);

    // Uniform over the strings whose final n-k bits are all zero.
    static BornDistribution embedded_uniform(size_t k, size_t n);

    size_t num_bits() const;
    bool is_affine() const { return std::holds_alternative<AffineSubspace>(repr_); }
    const AffineSubspace& support() const;
    const Dense& dense_table() const;

    double prob(const BitVec& x) const;
    Dyadic prob_dyadic(const BitVec& x) const;  // affine form only

    BitVec sample(std::mt19937_64& rng) const;

    std::string to_json_string() const;
    static BornDistribution from_json_string(const std::string& text);

  private:
    explicit BornDistribution(std::variant<AffineSubspace, Dense> repr)
        : repr_(std::move(repr)) {}

    std::variant<AffineSubspace, Dense> repr_;
};

// (1/2) sum_x |P(x) - Q(x)|. Affine/affine pairs use an exact closed form
// through the intersection subspace; anything dense enumerates (n <= 20).
double tv_distance(const BornDistribution& p, const BornDistribution& q);

// Exact P[phi] by summation over the support. Affine supports above
// dimension 30 are refused.
double expectation(const BornDistribution& p, const StatQuery& phi);

// Closed form for U_A[chi_s]: (-1)^(s.t) when s annihilates the direction
// space of A, else 0.
double parity_expectation(const AffineSubspace& a, const BitVec& s);

}  // namespace cliffordlearn
