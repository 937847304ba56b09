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

#include "cliffordlearn/oracles.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "cliffordlearn/stats.hpp"

namespace cliffordlearn {

SampleOracle::SampleOracle(BornDistribution source, std::mt19937_64 rng)
    : source_(std::move(source)), rng_(rng) {}

SampleOracle::SampleOracle(StabilizerTableau source, std::mt19937_64 rng)
    : source_(std::move(source)), rng_(rng) {}

BitVec SampleOracle::sample() {
    query_count_++;
    if (std::holds_alternative<BornDistribution>(source_)) {
        return std::get<BornDistribution>(source_).sample(rng_);
    }
    return std::get<StabilizerTableau>(source_).measure_all(rng_);
}

size_t SampleOracle::num_bits() const {
    if (std::holds_alternative<BornDistribution>(source_)) {
        return std::get<BornDistribution>(source_).num_bits();
    }
    return std::get<StabilizerTableau>(source_).num_qubits();
}

std::string to_string(SQMode mode) {
    switch (mode) {
        case SQMode::Exact:
            return "Exact";
        case SQMode::GridRounded:
            return "GridRounded";
        case SQMode::Empirical:
            return "Empirical";
    }
    return "unknown";
}

SQMode sq_mode_from_string(const std::string& s) {
    if (s == "Exact" || s == "exact") {
        return SQMode::Exact;
    }
    if (s == "GridRounded" || s == "grid") {
        return SQMode::GridRounded;
    }
    if (s == "Empirical" || s == "empirical") {
        return SQMode::Empirical;
    }
    throw std::invalid_argument("unknown SQ mode: " + s);
}

namespace {

// Nearest multiple of tau, ties toward zero.
double round_to_grid(double v, double tau) {
    double q = v / tau;
    double f = std::floor(q);
    double r = q - f;
    double k;
    if (r > 0.5) {
        k = f + 1.0;
    } else if (r < 0.5) {
        k = f;
    } else {
        k = q > 0.0 ? f : f + 1.0;
    }
    return k * tau;
}

}  // namespace

SQOracle::SQOracle(BornDistribution target, double tau, SQMode mode, double lo, double hi,
                   double delta_prime, std::mt19937_64 rng)
    : target_(std::move(target)),
      tau_(tau),
      mode_(mode),
      lo_(lo),
      hi_(hi),
      delta_prime_(delta_prime),
      rng_(rng) {
    if (!(tau_ > 0.0 && tau_ <= 1.0)) {
        throw std::invalid_argument("tolerance must lie in (0, 1]");
    }
    if (!(lo_ < hi_)) {
        throw std::invalid_argument("oracle codomain must satisfy lo < hi");
    }
    if (mode_ == SQMode::Empirical && !(delta_prime_ > 0.0 && delta_prime_ < 1.0)) {
        throw std::invalid_argument("failure budget must lie in (0, 1)");
    }
}

double SQOracle::query(const StatQuery& phi) {
    if (phi.lo() < lo_ || phi.hi() > hi_) {
        throw std::invalid_argument("query codomain exceeds the oracle codomain");
    }
    query_count_++;
    if (mode_ == SQMode::Empirical) {
        size_t m = hoeffding_sample_count(lo_, hi_, tau_, delta_prime_);
        double sum = 0.0;
        for (size_t i = 0; i < m; i++) {
            sum += phi.eval(target_.sample(rng_));
        }
        return sum / static_cast<double>(m);
    }
    double exact = expectation(target_, phi);
    if (mode_ == SQMode::Exact) {
        return exact;
    }
    return round_to_grid(exact, tau_);
}

double simulate_sq_from_samples(SampleOracle& oracle, const StatQuery& phi, double tau,
                                double delta_prime) {
    size_t m = hoeffding_sample_count(phi.lo(), phi.hi(), tau, delta_prime);
    double sum = 0.0;
    for (size_t i = 0; i < m; i++) {
        sum += phi.eval(oracle.sample());
    }
    return sum / static_cast<double>(m);
}

double generalized_sq(SQOracle& inner, const StatQuery& phi) {
    if (phi.lo() == phi.hi()) {
        throw std::invalid_argument("degenerate query codomain");
    }
    if (inner.lo() != -1.0 || inner.hi() != 1.0) {
        throw std::invalid_argument("inner oracle must have codomain [-1, 1]");
    }
    double mid = (phi.lo() + phi.hi()) / 2.0;
    double half = (phi.hi() - phi.lo()) / 2.0;
    double v = inner.query(phi.rescaled_to_unit());
    return v * half + mid;
}

double mmd_sq_estimate(const std::vector<BitVec>& model_samples, const GaussianKernel& kernel,
                       SQOracle& sq) {
    if (model_samples.empty()) {
        throw std::invalid_argument("mmd estimate needs at least one model sample");
    }
    double sum = 0.0;
    for (const auto& x : model_samples) {
        sum += sq.query(StatQuery::kernel_section(kernel, x));
    }
    return sum / static_cast<double>(model_samples.size());
}

}  // namespace cliffordlearn
