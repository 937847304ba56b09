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
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cliffordlearn/distribution.hpp"
#include "cliffordlearn/oracles.hpp"

namespace cliffordlearn {

enum class Ensemble { GlobalClifford, Brickwork };

std::string to_string(Ensemble e);

struct ExperimentConfig {
    size_t n = 2;
    Ensemble ensemble = Ensemble::GlobalClifford;
    size_t depth = 0;  // brickwork only
    std::optional<size_t> restrict_k;
    size_t trials = 1000;
    double tau = 0.25;
    double epsilon = 0.1;
    double delta = 0.05;
    uint64_t seed = 0;
    SQMode sq_mode = SQMode::Exact;
    std::string phi = "parity:random";
    size_t threads = 1;

    nlohmann::json to_json() const;
};

// One verification result. pass is always derived from estimate, std_error
// and bound by the uniform three-sigma rule named in bound_kind:
//   upper:     estimate <= bound + 3 se
//   lower:     estimate >= bound - 3 se
//   two_sided: |estimate - bound| <= 3 se
//   exact:     estimate == bound
struct ExperimentRecord {
    std::string experiment;
    nlohmann::json config;
    double estimate = 0.0;
    double std_error = 0.0;
    double bound = 0.0;
    std::string bound_kind = "upper";
    bool pass = false;
    double wall_time_ms = 0.0;
    nlohmann::json queries = nlohmann::json::object();
    nlohmann::json details = nlohmann::json::object();

    nlohmann::json to_json(bool include_timing = false) const;
    static std::string csv_header();
    std::string to_csv_row() const;
};

bool apply_sigma_rule(const std::string& bound_kind, double estimate, double std_error,
                      double bound);

struct RationalValue {
    int64_t num = 0;
    int64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Exact average |P(0) - P(1)| over the six single-qubit stabilizer states.
RationalValue single_qubit_bias_exact();
ExperimentRecord single_qubit_experiment();

// First and second Born-probability moments over uniform global Cliffords,
// against the exact design formulas. Requires n <= 12.
std::vector<ExperimentRecord> moment_experiment(const ExperimentConfig& cfg);

// Second-moment upper bound (and exact first moment) for random brickwork
// circuits. d = 0 is recorded but not asserted.
std::vector<ExperimentRecord> brickwork_moment_experiment(const ExperimentConfig& cfg);

// Fraction of draws with d_TV(P_U, uniform) >= epsilon, against the
// far-fraction lower bound (1/6 - eps)/(1 - eps). Needs epsilon in [0, 1/6].
ExperimentRecord tv_far_fraction_experiment(const ExperimentConfig& cfg);

// Mean exact TV distance to uniform, against the 1/6 lower bound.
ExperimentRecord expected_tv_experiment(const ExperimentConfig& cfg);

// Distinguishing probability Pr[|P_U[phi] - U[phi]| > tau] against the
// Chebyshev bound in explicit variance form.
ExperimentRecord chebyshev_numerator_experiment(const ExperimentConfig& cfg);

// Distinguishing fraction over the post-selected far-from-D0 ensemble, plus
// the acceptance-rate record. Aborts if the acceptance rate drops under 1e-3.
std::vector<ExperimentRecord> frac_experiment(const ExperimentConfig& cfg,
                                              const BornDistribution& d0,
                                              const std::string& phi_descriptor);

// End-to-end learner success rate against simulator ground truth.
std::vector<ExperimentRecord> learner_success_experiment(const ExperimentConfig& cfg);

// Monte Carlo check of the span-probability product formula.
ExperimentRecord span_probability_experiment(size_t k, size_t n, size_t trials, uint64_t seed,
                                             size_t threads = 1);

struct MmdDemoConfig {
    size_t n = 6;
    size_t target_depth = 6;
    size_t model_depth = 2;
    size_t model_samples = 20;
    std::vector<double> bandwidths = {0.5, 1.0, 2.0};
    double tau = 0.1;
    double delta_prime = 1e-4;
    SQMode sq_mode = SQMode::GridRounded;
    uint64_t seed = 0;
};

// MMD estimator through SQ queries versus the exact plug-in estimator.
ExperimentRecord mmd_demo_experiment(const MmdDemoConfig& cfg);

// Query descriptor parser: "parity:<bits>", "parity:zero", "parity:random"
// (nonzero, drawn from the seed). Returns the query and the parity vector.
std::pair<StatQuery, BitVec> parse_parity_descriptor(const std::string& descriptor, size_t n,
                                                     uint64_t seed);

}  // namespace cliffordlearn
