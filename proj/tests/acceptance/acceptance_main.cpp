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

// Acceptance suite: one pass/fail line per criterion, exit code equals the
// number of failures. Every tolerance is pinned here, in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cliffordlearn/circuit.hpp"
#include "cliffordlearn/experiments.hpp"
#include "cliffordlearn/learner.hpp"
#include "cliffordlearn/rng.hpp"
#include "cliffordlearn/stats.hpp"
#include "cliffordlearn/tableau.hpp"
#include "support/statevector.hpp"

using namespace cliffordlearn;
namespace ts = cliffordlearn::testsupport;

namespace {

constexpr uint64_t kSeed = 20260810;

int g_failures = 0;

void criterion(int number, const std::string& name, double time_limit_s,
               const std::function<bool(std::string&)>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (time_limit_s > 0.0 && secs > time_limit_s) {
        ok = false;
        detail += " [exceeded " + std::to_string(time_limit_s) + " s limit]";
    }
    std::printf("[%s] criterion %02d: %s (%s) [%.2f s]\n", ok ? "PASS" : "FAIL", number,
                name.c_str(), detail.c_str(), secs);
    if (!ok) {
        g_failures++;
    }
}

// Parity-check representation of an affine subspace for fast membership.
struct SupportChecker {
    std::vector<BitVec> checks;
    std::vector<bool> rhs;
    size_t dim;

    explicit SupportChecker(const AffineSubspace& a) : dim(a.dim()) {
        F2Matrix comp = orthogonal_complement(a.basis());
        for (size_t c = 0; c < comp.cols(); c++) {
            checks.push_back(comp.col(c));
            rhs.push_back(checks.back().dot(a.offset()));
        }
    }

    bool member(const BitVec& x) const {
        for (size_t i = 0; i < checks.size(); i++) {
            if (checks[i].dot(x) != rhs[i]) {
                return false;
            }
        }
        return true;
    }
};

ExperimentConfig config(size_t n, Ensemble ensemble, size_t depth, size_t trials,
                        uint64_t salt) {
    ExperimentConfig cfg;
    cfg.n = n;
    cfg.ensemble = ensemble;
    cfg.depth = depth;
    cfg.trials = trials;
    cfg.seed = splitmix64(kSeed + salt);
    return cfg;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

int main() {
    criterion(1, "single-qubit bias average is exactly 1/3", 1.0, [](std::string& detail) {
        auto r = single_qubit_bias_exact();
        auto rec = single_qubit_experiment();
        detail = std::to_string(r.num) + "/" + std::to_string(r.den) + " = " +
                 fmt(rec.estimate);
        return r.num == 1 && r.den == 3 && rec.pass;
    });

    criterion(2, "global Clifford moments at n=2 and n=3", 30.0, [](std::string& detail) {
        auto cfg2 = config(2, Ensemble::GlobalClifford, 0, 50000, 2);
        auto recs2 = moment_experiment(cfg2);
        auto cfg3 = config(3, Ensemble::GlobalClifford, 0, 50000, 3);
        auto recs3 = moment_experiment(cfg3);
        detail = "E[P^2]=" + fmt(recs2[1].estimate) + " vs 0.1, E[PxPy]=" +
                 fmt(recs2[2].estimate) + " vs 0.05, E[P]@n3=" + fmt(recs3[0].estimate) +
                 " vs 0.125";
        return recs2[1].pass && recs2[2].pass && recs3[0].pass && recs2[0].pass &&
               recs3[1].pass && recs3[2].pass;
    });

    criterion(3, "brickwork second-moment bound at n=8, d in {8,12,16}", 120.0,
              [](std::string& detail) {
                  bool ok = true;
                  for (size_t d : {8u, 12u, 16u}) {
                      auto cfg = config(8, Ensemble::Brickwork, d, 10000, 30 + d);
                      auto recs = brickwork_moment_experiment(cfg);
                      detail += "d=" + std::to_string(d) + ": " + fmt(recs[1].estimate) +
                                " <= " + fmt(recs[1].bound) + "; ";
                      ok = ok && recs[1].pass && recs[0].pass;
                  }
                  return ok;
              });

    criterion(4, "TV far-fraction and expected TV at n in {4,6,8}", 60.0,
              [](std::string& detail) {
                  bool ok = true;
                  size_t runs = 0;
                  for (size_t n : {4u, 6u, 8u}) {
                      struct Ens {
                          Ensemble kind;
                          size_t depth;
                      };
                      for (auto ens : {Ens{Ensemble::GlobalClifford, 0},
                                       Ens{Ensemble::Brickwork, 2},
                                       Ens{Ensemble::Brickwork, n}}) {
                          auto cfg = config(n, ens.kind, ens.depth, 5000,
                                            40 + 10 * n + ens.depth);
                          cfg.epsilon = 0.1;
                          auto far = tv_far_fraction_experiment(cfg);
                          auto etv = expected_tv_experiment(cfg);
                          ok = ok && far.pass && etv.pass;
                          runs++;
                      }
                  }
                  detail = std::to_string(runs) +
                           " ensemble runs vs 0.0740741 far bound and 1/6 mean bound";
                  return ok;
              });

    criterion(5, "Chebyshev distinguishing-probability bounds", 60.0,
              [](std::string& detail) {
                  auto global = config(8, Ensemble::GlobalClifford, 0, 20000, 5);
                  global.tau = 0.5;
                  global.phi = "parity:random";
                  auto g = chebyshev_numerator_experiment(global);

                  auto brick = config(6, Ensemble::Brickwork, 12, 20000, 6);
                  brick.tau = 0.25;
                  brick.phi = "parity:random";
                  auto b = chebyshev_numerator_experiment(brick);

                  detail = "global " + fmt(g.estimate) + " <= 0.015625; brickwork " +
                           fmt(b.estimate) + " <= " + fmt(b.bound);
                  return g.pass && g.bound == 0.015625 && b.pass;
              });

    criterion(6, "span probability: formula vs Monte Carlo", 30.0, [](std::string& detail) {
        auto headline = span_probability_experiment(5, 3, 100000, splitmix64(kSeed + 60));
        bool ok = headline.bound == 0.794677734375 &&
                  std::fabs(headline.estimate - headline.bound) <= 0.01;
        size_t cells = 0;
        for (size_t n = 1; n <= 6; n++) {
            for (size_t k = 1; k <= 10; k++) {
                auto rec = span_probability_experiment(k, n, 100000,
                                                       splitmix64(kSeed + 600 + 16 * n + k));
                ok = ok && rec.pass;
                cells++;
            }
        }
        detail = "P(5,3): |" + fmt(headline.estimate) + " - 0.794677734375| <= 0.01, grid of " +
                 std::to_string(cells) + " cells within 3 sigma";
        return ok;
    });

    criterion(7, "learner: exact recovery at n=12, d=24, delta=0.05", 60.0,
              [](std::string& detail) {
                  const size_t n = 12, d = 24, trials = 500;
                  const double delta = 0.05;
                  const size_t k = recovery_sample_count(n, delta);
                  size_t hits = 0;
                  bool samples_exact = true, eval_matches = true, tv_zero = true;
                  for (size_t t = 0; t < trials; t++) {
                      auto rng = make_trial_rng(splitmix64(kSeed + 7), t);
                      auto tableau = run_circuit(random_brickwork(n, d, rng));
                      auto truth = tableau.affine_support();
                      SampleOracle oracle(tableau, rng);
                      auto model = pac_learn(oracle, {n, delta});
                      samples_exact = samples_exact && oracle.query_count() == k;
                      if (model.subspace() != truth) {
                          continue;
                      }
                      hits++;
                      tv_zero = tv_zero && tv_distance(model.distribution(),
                                                       BornDistribution::affine(truth)) == 0.0;
                      SupportChecker learned(model.subspace());
                      SupportChecker want(truth);
                      for (uint64_t i = 0; i < (uint64_t{1} << n); i++) {
                          BitVec x = BitVec::from_index_msb0(n, i);
                          Dyadic got = learned.member(x) ? Dyadic::pow2(learned.dim)
                                                         : Dyadic::zero_value();
                          Dyadic expect = want.member(x) ? Dyadic::pow2(want.dim)
                                                         : Dyadic::zero_value();
                          if (got != expect || got != model.evaluate(x)) {
                              eval_matches = false;
                          }
                      }
                  }
                  double rate = static_cast<double>(hits) / trials;
                  double threshold = 0.95 - 3.0 * binomial_std_error(rate, trials);
                  detail = "rate " + fmt(rate) + " >= " + fmt(threshold) + ", " +
                           std::to_string(k) + " samples/trial, pointwise dyadic equality";
                  return rate >= threshold && samples_exact && eval_matches && tv_zero && k == 17;
              });

    criterion(8, "oracle tolerance contracts", 60.0, [](std::string& detail) {
        auto rng = make_trial_rng(splitmix64(kSeed + 8), 0);
        // Exact and GridRounded: never violate.
        size_t deterministic_violations = 0;
        for (size_t t = 0; t < 1000; t++) {
            size_t n = 2 + uniform_below(rng, 5);
            auto target = BornDistribution::affine(
                run_circuit(random_brickwork(n, 2 + uniform_below(rng, 10), rng))
                    .affine_support());
            double tau = 0.01 + 0.99 * random_unit_double(rng);
            StatQuery phi = (t % 3 == 0)
                                ? StatQuery::indicator(
                                      n,
                                      [bit = uniform_below(rng, n)](const BitVec& x) {
                                          return x.get(bit);
                                      },
                                      false)
                                : StatQuery::parity(BitVec::random(n, rng));
            double exact = expectation(target, phi);
            SQOracle e(target, tau, SQMode::Exact);
            SQOracle g(target, tau, SQMode::GridRounded);
            if (std::fabs(e.query(phi) - exact) > tau ||
                std::fabs(g.query(phi) - exact) > tau) {
                deterministic_violations++;
            }
        }
        // Empirical: violations within delta' + 3 sigma.
        const double tau = 0.05, delta_prime = 0.01;
        size_t empirical_violations = 0;
        const size_t empirical_trials = 1000;
        auto target = BornDistribution::affine(
            run_circuit(random_brickwork(4, 6, rng)).affine_support());
        auto phi = StatQuery::parity(BitVec::random(4, rng));
        double exact = expectation(target, phi);
        for (size_t t = 0; t < empirical_trials; t++) {
            SQOracle oracle(target, tau, SQMode::Empirical, -1.0, 1.0, delta_prime,
                            make_trial_rng(splitmix64(kSeed + 88), t));
            if (std::fabs(oracle.query(phi) - exact) > tau) {
                empirical_violations++;
            }
        }
        double emp_rate = static_cast<double>(empirical_violations) / empirical_trials;
        bool empirical_ok =
            emp_rate <= delta_prime +
                            3.0 * binomial_std_error(delta_prime, empirical_trials);
        // Generalized SQ over random codomains in [-10, 10].
        size_t generalized_violations = 0;
        for (size_t t = 0; t < 1000; t++) {
            size_t n = 2 + uniform_below(rng, 4);
            auto dist = BornDistribution::affine(
                run_circuit(random_brickwork(n, 4, rng)).affine_support());
            double a = -10.0 + 15.0 * random_unit_double(rng);
            double b = a + 0.5 + (10.0 - a - 0.5) * random_unit_double(rng);
            double half = (b - a) / 2.0;
            double tau_out = half * (0.05 + 0.45 * random_unit_double(rng));
            std::vector<double> values(size_t{1} << n);
            for (auto& v : values) {
                v = a + (b - a) * random_unit_double(rng);
            }
            auto query = StatQuery::table(n, values, a, b);
            SQOracle inner(dist, 2.0 * tau_out / (b - a), SQMode::GridRounded);
            if (std::fabs(generalized_sq(inner, query) - expectation(dist, query)) >
                tau_out + 1e-9) {
                generalized_violations++;
            }
        }
        detail = "0 deterministic violations expected, got " +
                 std::to_string(deterministic_violations) + "; empirical rate " +
                 fmt(emp_rate) + " vs 0.01; generalized violations " +
                 std::to_string(generalized_violations);
        return deterministic_violations == 0 && empirical_ok && generalized_violations == 0;
    });

    criterion(9, "MMD-via-SQ vs plug-in on 100 random instances", 60.0,
              [](std::string& detail) {
                  auto rng = make_trial_rng(splitmix64(kSeed + 9), 0);
                  size_t violations = 0;
                  double worst = 0.0;
                  for (size_t t = 0; t < 100; t++) {
                      size_t n = 3 + uniform_below(rng, 4);
                      auto target = BornDistribution::affine(
                          run_circuit(random_brickwork(n, 2 + uniform_below(rng, 8), rng))
                              .affine_support());
                      auto model = BornDistribution::affine(
                          run_circuit(random_brickwork(n, 2 + uniform_below(rng, 8), rng))
                              .affine_support());
                      size_t m = 5 + uniform_below(rng, 26);
                      std::vector<BitVec> samples;
                      for (size_t i = 0; i < m; i++) {
                          samples.push_back(model.sample(rng));
                      }
                      std::vector<double> bandwidths;
                      size_t nb = 1 + uniform_below(rng, 3);
                      for (size_t i = 0; i < nb; i++) {
                          bandwidths.push_back(0.3 + 2.7 * random_unit_double(rng));
                      }
                      GaussianKernel kernel{bandwidths};
                      double tau = 0.02 + 0.28 * random_unit_double(rng);
                      SQOracle sq(target, tau, t % 2 ? SQMode::GridRounded : SQMode::Exact,
                                  0.0, 1.0);
                      double est = mmd_sq_estimate(samples, kernel, sq);
                      double plug_in = 0.0;
                      for (const auto& x : samples) {
                          plug_in += expectation(target, StatQuery::kernel_section(kernel, x));
                      }
                      plug_in /= static_cast<double>(m);
                      worst = std::max(worst, std::fabs(est - plug_in) / tau);
                      if (std::fabs(est - plug_in) > tau) {
                          violations++;
                      }
                  }
                  detail = std::to_string(violations) + " violations, worst |diff|/tau " +
                           fmt(worst);
                  return violations == 0;
              });

    criterion(10, "simulator ground truth for n <= 4", 0.0, [](std::string& detail) {
        auto rng = make_trial_rng(splitmix64(kSeed + 10), 0);
        double worst = 0.0;
        size_t circuits = 0;
        bool sampling_ok = true;
        for (size_t n : {2u, 3u, 4u}) {
            for (size_t d : {0u, 1u, 2u, 3u, 6u, 9u}) {
                for (int rep = 0; rep < 5; rep++) {
                    auto circuit = random_brickwork(n, d, rng);
                    auto support = run_circuit(circuit).affine_support();
                    auto dense = ts::born_probabilities(ts::run_circuit_dense(circuit));
                    for (uint64_t i = 0; i < (uint64_t{1} << n); i++) {
                        BitVec x = BitVec::from_index_msb0(n, i);
                        double exact =
                            support.member(x)
                                ? std::ldexp(1.0, -static_cast<int>(support.dim()))
                                : 0.0;
                        worst = std::max(worst, std::fabs(exact - dense[i]));
                    }
                    circuits++;
                }
            }
        }
        for (int rep = 0; rep < 4; rep++) {
            auto circuit = random_brickwork(4, 3 + rep, rng);
            auto tableau = run_circuit(circuit);
            auto dense = ts::born_probabilities(ts::run_circuit_dense(circuit));
            const size_t draws = 10000;
            std::vector<uint64_t> counts(16, 0);
            for (size_t i = 0; i < draws; i++) {
                counts[tableau.measure_all(rng).to_index_msb0()]++;
            }
            std::vector<uint64_t> observed;
            std::vector<double> expected;
            for (size_t i = 0; i < 16; i++) {
                if (dense[i] > 1e-9) {
                    observed.push_back(counts[i]);
                    expected.push_back(dense[i] * draws);
                } else if (counts[i] != 0) {
                    sampling_ok = false;
                }
            }
            if (observed.size() > 1) {
                double p = chi_square_pvalue(chi_square_stat(observed, expected),
                                             observed.size() - 1);
                sampling_ok = sampling_ok && p > 0.001;
            }
        }
        detail = std::to_string(circuits) + " circuits, worst per-outcome gap " + fmt(worst) +
                 " <= 1e-12, chi-square sampling ok";
        return worst <= 1e-12 && sampling_ok;
    });

    std::printf("%d of 10 criteria failed\n", g_failures);
    return g_failures;
}
