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

#include <doctest.h>

#include <cmath>
#include <map>

#include "cliffordlearn/circuit.hpp"
#include "cliffordlearn/oracles.hpp"
#include "cliffordlearn/rng.hpp"
#include "cliffordlearn/stats.hpp"

using namespace cliffordlearn;

namespace {

BornDistribution random_affine_distribution(size_t n, std::mt19937_64& rng) {
    return BornDistribution::affine(
        run_circuit(random_brickwork(n, 2 + uniform_below(rng, 8), rng)).affine_support());
}

}  // namespace

TEST_CASE("sample oracle counts queries and respects the source") {
    auto rng = make_trial_rng(51, 0);
    SUBCASE("point source always yields the same string") {
        SampleOracle oracle(
            BornDistribution::affine(AffineSubspace::point(BitVec::from_string("000"))),
            make_trial_rng(51, 1));
        for (int i = 0; i < 20; i++) {
            CHECK(oracle.sample().none());
        }
        CHECK(oracle.query_count() == 20);
    }
    SUBCASE("tableau-backed draws match the exact distribution") {
        auto circuit = random_brickwork(3, 4, rng);
        auto tableau = run_circuit(circuit);
        auto support = tableau.affine_support();
        SampleOracle oracle(tableau, make_trial_rng(51, 2));
        const size_t draws = 10000;
        std::map<uint64_t, uint64_t> counts;
        for (size_t i = 0; i < draws; i++) {
            counts[oracle.sample().to_index_msb0()]++;
        }
        CHECK(oracle.query_count() == draws);
        auto elements = support.enumerate();
        std::vector<uint64_t> observed;
        std::vector<double> expected;
        for (const auto& x : elements) {
            observed.push_back(counts[x.to_index_msb0()]);
            expected.push_back(static_cast<double>(draws) / elements.size());
        }
        if (elements.size() > 1) {
            CHECK(chi_square_pvalue(chi_square_stat(observed, expected),
                                    elements.size() - 1) > 0.001);
        }
    }
}

TEST_CASE("exact and grid-rounded oracles never violate the tolerance") {
    auto rng = make_trial_rng(53, 0);
    for (int trial = 0; trial < 1000; trial++) {
        size_t n = 2 + uniform_below(rng, 5);
        auto target = random_affine_distribution(n, rng);
        double tau = 0.01 + 0.99 * random_unit_double(rng);
        auto phi = StatQuery::parity(BitVec::random(n, rng));
        double exact = expectation(target, phi);

        SQOracle exact_oracle(target, tau, SQMode::Exact);
        CHECK(std::fabs(exact_oracle.query(phi) - exact) <= tau);

        SQOracle grid_oracle(target, tau, SQMode::GridRounded);
        double v = grid_oracle.query(phi);
        CHECK(std::fabs(v - exact) <= tau);
        // grid responses are multiples of tau
        double q = v / tau;
        CHECK(std::fabs(q - std::round(q)) < 1e-9);
        CHECK(exact_oracle.query_count() == 1);
        CHECK(grid_oracle.query_count() == 1);
    }
}

TEST_CASE("grid rounding arithmetic") {
    auto target = BornDistribution::dense(
        2, {0.137 + 0.25, 0.25 - 0.137, 0.25, 0.25});  // P[phi] = 0.137 for phi below
    auto phi = StatQuery::table(2, {1.0, -1.0, 1.0, -1.0}, -1.0, 1.0);
    CHECK(expectation(target, phi) == doctest::Approx(0.137 * 2.0).epsilon(1e-12));

    // true value 0.137 rounds to 0.1 on the tau = 0.1 grid
    auto half = StatQuery::table(2, {1.0, 0.0, 1.0, 0.0}, 0.0, 1.0);
    SQOracle oracle(target, 0.1, SQMode::GridRounded, 0.0, 1.0);
    double truth = expectation(target, half);
    CHECK(truth == doctest::Approx(0.637));
    CHECK(oracle.query(half) == doctest::Approx(0.6));

    // the response is a function of the exact value alone
    SQOracle again(target, 0.1, SQMode::GridRounded, 0.0, 1.0);
    CHECK(again.query(half) == oracle.query(half));

    // constant 0.137 at tau = 0.1 snaps to 0.1
    auto c137 = StatQuery::table(2, std::vector<double>(4, 0.137), 0.0, 1.0);
    SQOracle c_oracle(target, 0.1, SQMode::GridRounded, 0.0, 1.0);
    CHECK(c_oracle.query(c137) == doctest::Approx(0.1));

    // exact halfway points round toward zero on both sides (0.375 and the
    // 0.25 grid are both exactly representable)
    auto plus_tie = StatQuery::table(2, std::vector<double>(4, 0.375), -1.0, 1.0);
    auto minus_tie = StatQuery::table(2, std::vector<double>(4, -0.375), -1.0, 1.0);
    SQOracle tie_oracle(target, 0.25, SQMode::GridRounded);
    CHECK(tie_oracle.query(plus_tie) == doctest::Approx(0.25));
    CHECK(tie_oracle.query(minus_tie) == doctest::Approx(-0.25));
}

TEST_CASE("empirical oracle honors the tolerance with the promised rate") {
    auto rng = make_trial_rng(59, 0);
    const double tau = 0.05, delta_prime = 0.01;
    const size_t trials = 1000;
    auto target = random_affine_distribution(4, rng);
    auto phi = StatQuery::parity(BitVec::random(4, rng));
    double exact = expectation(target, phi);
    size_t violations = 0;
    for (size_t i = 0; i < trials; i++) {
        SQOracle oracle(target, tau, SQMode::Empirical, -1.0, 1.0, delta_prime,
                        make_trial_rng(59, i + 1));
        if (std::fabs(oracle.query(phi) - exact) > tau) {
            violations++;
        }
    }
    double rate = static_cast<double>(violations) / trials;
    CHECK(rate <= delta_prime + 3.0 * binomial_std_error(std::max(rate, delta_prime), trials));
    // coverage: at least 98% of responses within tau (spec example level)
    CHECK(rate <= 0.02);
}

TEST_CASE("sample-mean SQ simulation consumes the hoeffding budget") {
    auto rng = make_trial_rng(61, 0);
    auto target = random_affine_distribution(4, rng);
    SampleOracle oracle(target, make_trial_rng(61, 1));
    auto phi = StatQuery::parity(BitVec::random(4, rng));
    double tau = 0.1, delta_prime = 0.05;
    double v = simulate_sq_from_samples(oracle, phi, tau, delta_prime);
    CHECK(oracle.query_count() == hoeffding_sample_count(-1.0, 1.0, tau, delta_prime));
    CHECK(std::fabs(v - expectation(target, phi)) <= tau);  // seeded; holds w.h.p.

    SUBCASE("point source gives the query value exactly") {
        SampleOracle point(
            BornDistribution::affine(AffineSubspace::point(BitVec::from_string("0110"))),
            make_trial_rng(61, 2));
        auto x0 = BitVec::from_string("0110");
        double got = simulate_sq_from_samples(point, phi, 0.2, 0.1);
        CHECK(got == phi.eval(x0));
    }
}

TEST_CASE("uniform target keeps parity sample means near zero") {
    const double tau = 0.1, delta_prime = 0.05;
    const size_t trials = 400;
    auto target = BornDistribution::uniform(5);
    auto phi = StatQuery::parity(BitVec::from_string("10110"));
    size_t ok = 0;
    for (size_t i = 0; i < trials; i++) {
        SampleOracle oracle(target, make_trial_rng(67, i));
        if (std::fabs(simulate_sq_from_samples(oracle, phi, tau, delta_prime)) <= tau) {
            ok++;
        }
    }
    double rate = static_cast<double>(ok) / trials;
    CHECK(rate >= 1.0 - delta_prime - 3.0 * binomial_std_error(rate, trials));
}

TEST_CASE("generalized SQ pass-through and rescaling") {
    auto rng = make_trial_rng(71, 0);
    SUBCASE("identity on [-1,1]") {
        auto target = random_affine_distribution(3, rng);
        auto phi = StatQuery::parity(BitVec::random(3, rng));
        SQOracle inner(target, 0.25, SQMode::Exact);
        CHECK(generalized_sq(inner, phi) == doctest::Approx(expectation(target, phi)));
    }
    SUBCASE("[0,1] queries through a grid-rounded inner oracle") {
        // Outer tolerance tau needs inner tolerance 2 tau / (b - a) = 2 tau.
        double tau = 0.1;
        auto target = random_affine_distribution(4, rng);
        GaussianKernel kernel{{1.0}};
        auto phi = StatQuery::kernel_section(kernel, BitVec::random(4, rng));
        SQOracle inner(target, 2.0 * tau, SQMode::GridRounded);
        double got = generalized_sq(inner, phi);
        CHECK(std::fabs(got - expectation(target, phi)) <= tau + 1e-12);
    }
    SUBCASE("constant queries come back within tolerance") {
        auto target = BornDistribution::uniform(3);
        auto phi = StatQuery::table(3, std::vector<double>(8, 4.25), 2.0, 5.0);
        SQOracle inner(target, 2.0 * 0.3 / 3.0, SQMode::GridRounded);
        CHECK(std::fabs(generalized_sq(inner, phi) - 4.25) <= 0.3);
    }
    SUBCASE("random codomains honor the rescaled tolerance") {
        for (int trial = 0; trial < 1000; trial++) {
            size_t n = 2 + uniform_below(rng, 4);
            auto target = random_affine_distribution(n, rng);
            double a = -10.0 + 15.0 * random_unit_double(rng);
            double b = a + 0.5 + (10.0 - a - 0.5) * random_unit_double(rng);
            double tau = 0.02 + 0.3 * random_unit_double(rng);
            std::vector<double> values(size_t{1} << n);
            for (auto& v : values) {
                v = a + (b - a) * random_unit_double(rng);
            }
            auto phi = StatQuery::table(n, values, a, b);
            double inner_tau = std::min(1.0, 2.0 * tau / (b - a));
            SQOracle inner(target, inner_tau, SQMode::GridRounded);
            double got = generalized_sq(inner, phi);
            double want = expectation(target, phi);
            CHECK(std::fabs(got - want) <= inner_tau * (b - a) / 2.0 + 1e-9);
        }
    }
    SUBCASE("degenerate codomain rejected") {
        auto target = BornDistribution::uniform(2);
        auto phi = StatQuery::table(2, std::vector<double>(4, 1.0), 1.0, 1.0);
        SQOracle inner(target, 0.5, SQMode::Exact);
        CHECK_THROWS_AS(generalized_sq(inner, phi), std::invalid_argument);
    }
}

TEST_CASE("oracle rejects queries outside its codomain") {
    auto target = BornDistribution::uniform(2);
    SQOracle oracle(target, 0.5, SQMode::Exact);  // codomain [-1, 1]
    auto phi = StatQuery::table(2, std::vector<double>(4, 1.5), 0.0, 2.0);
    CHECK_THROWS_AS(oracle.query(phi), std::invalid_argument);
}

TEST_CASE("mmd estimator equals the plug-in under exact responses") {
    auto rng = make_trial_rng(73, 0);
    for (int trial = 0; trial < 20; trial++) {
        size_t n = 3 + uniform_below(rng, 3);
        auto target = random_affine_distribution(n, rng);
        auto model = random_affine_distribution(n, rng);
        GaussianKernel kernel{{0.5, 1.0, 2.0}};
        size_t m = 3 + uniform_below(rng, 20);
        std::vector<BitVec> samples;
        for (size_t i = 0; i < m; i++) {
            samples.push_back(model.sample(rng));
        }
        SQOracle sq(target, 0.1, SQMode::Exact, 0.0, 1.0);
        double est = mmd_sq_estimate(samples, kernel, sq);
        double plug_in = 0.0;
        for (const auto& x : samples) {
            plug_in += expectation(target, StatQuery::kernel_section(kernel, x));
        }
        plug_in /= static_cast<double>(m);
        CHECK(est == doctest::Approx(plug_in).epsilon(1e-12));
        CHECK(sq.query_count() == m);
    }
}

TEST_CASE("mmd estimator stays within tau for tolerance-honoring modes") {
    auto rng = make_trial_rng(79, 0);
    for (int trial = 0; trial < 50; trial++) {
        size_t n = 3 + uniform_below(rng, 3);
        auto target = random_affine_distribution(n, rng);
        auto model = random_affine_distribution(n, rng);
        GaussianKernel kernel{{1.0}};
        size_t m = 2 + uniform_below(rng, 15);
        std::vector<BitVec> samples;
        for (size_t i = 0; i < m; i++) {
            samples.push_back(model.sample(rng));
        }
        double tau = 0.05 + 0.2 * random_unit_double(rng);
        SQOracle sq(target, tau, SQMode::GridRounded, 0.0, 1.0);
        double est = mmd_sq_estimate(samples, kernel, sq);
        double plug_in = 0.0;
        for (const auto& x : samples) {
            plug_in += expectation(target, StatQuery::kernel_section(kernel, x));
        }
        plug_in /= static_cast<double>(m);
        CHECK(std::fabs(est - plug_in) <= tau + 1e-12);
    }
}
