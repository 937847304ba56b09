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

#include "cliffordlearn/learner.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "cliffordlearn/rng.hpp"

namespace cliffordlearn {

Dyadic LearnedModel::evaluate(const BitVec& x) const {
    if (x.size() != subspace_.ambient_dim()) {
        throw std::invalid_argument("event length mismatch");
    }
    return subspace_.member(x) ? Dyadic::pow2(subspace_.dim()) : Dyadic::zero_value();
}

BitVec LearnedModel::generate(std::mt19937_64& rng) const {
    BitVec b = BitVec::random(subspace_.dim(), rng);
    return subspace_.basis().mul_vec(b) ^ subspace_.offset();
}

size_t recovery_sample_count(size_t n, double delta) {
    if (!(delta > 0.0 && delta < 1.0)) {
        throw std::invalid_argument("delta must lie in (0, 1)");
    }
    // Base-2 logarithm: the success bound 2^(n-k) <= delta needs
    // k >= n + log2(1/delta). The epsilon guards exact powers of two.
    double extra = std::ceil(std::log2(1.0 / delta) - 1e-12);
    return n + static_cast<size_t>(extra);
}

AffineSubspace recover_affine(SampleOracle& oracle, const LearnerConfig& config) {
    size_t k = recovery_sample_count(config.n, config.delta);
    std::vector<BitVec> samples;
    samples.reserve(k);
    for (size_t i = 0; i < k; i++) {
        samples.push_back(oracle.sample());
    }
    std::vector<BitVec> differenced;
    differenced.reserve(k);
    for (const auto& x : samples) {
        differenced.push_back(x ^ samples[0]);
    }
    return AffineSubspace(config.n, independent_subset(differenced), samples[0]);
}

LearnedModel pac_learn(SampleOracle& oracle, const LearnerConfig& config) {
    return LearnedModel(recover_affine(oracle, config));
}

}  // namespace cliffordlearn
