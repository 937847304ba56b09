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

#include "cliffordlearn/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cliffordlearn/circuit.hpp"
#include "cliffordlearn/experiments.hpp"
#include "cliffordlearn/learner.hpp"
#include "cliffordlearn/rng.hpp"

namespace cliffordlearn::cli {

namespace {

using json = nlohmann::json;

struct GlobalOptions {
    uint64_t seed = 12345;
    std::string output = "-";
    std::string format = "jsonl";
    size_t threads = 1;
    bool timing = false;
};

class OutputWriter {
  public:
    OutputWriter(const GlobalOptions& opts) : opts_(opts) {
        if (opts_.output != "-") {
            file_.open(opts_.output);
            if (!file_) {
                throw std::runtime_error("cannot open output file: " + opts_.output);
            }
        }
    }

    std::ostream& stream() { return opts_.output == "-" ? std::cout : file_; }

    void write_record(const ExperimentRecord& rec) {
        if (opts_.format == "csv") {
            if (!csv_header_done_) {
                stream() << ExperimentRecord::csv_header() << "\n";
                csv_header_done_ = true;
            }
            stream() << rec.to_csv_row() << "\n";
        } else {
            stream() << rec.to_json(opts_.timing).dump() << "\n";
        }
        if (opts_.timing) {
            std::cerr << rec.experiment << ": " << rec.wall_time_ms << " ms\n";
        }
        any_fail_ = any_fail_ || !rec.pass;
    }

    void write_records(const std::vector<ExperimentRecord>& recs) {
        for (const auto& r : recs) {
            write_record(r);
        }
    }

    void write_raw(const std::string& text) { stream() << text; }

    bool any_fail() const { return any_fail_; }

  private:
    GlobalOptions opts_;
    std::ofstream file_;
    bool csv_header_done_ = false;
    bool any_fail_ = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

BornDistribution parse_d0(const std::string& spec, size_t n) {
    if (spec == "uniform") {
        return BornDistribution::uniform(n);
    }
    const std::string prefix = "embedded:";
    if (spec.rfind(prefix, 0) == 0) {
        size_t k = std::stoul(spec.substr(prefix.size()));
        return BornDistribution::embedded_uniform(k, n);
    }
    throw std::runtime_error("unknown reference distribution: " + spec);
}

std::vector<double> parse_bandwidths(const std::string& spec) {
    std::vector<double> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(std::stod(item));
    }
    if (out.empty()) {
        throw std::runtime_error("bandwidth list is empty");
    }
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"Clifford Born-distribution learner and verification harness"};
    app.require_subcommand(1);
    app.fallthrough(true);  // global flags may follow the subcommand

    GlobalOptions global;
    app.add_option("--seed", global.seed, "master seed; trial streams derive from it");
    app.add_option("--output", global.output, "output path, '-' for stdout");
    app.add_option("--format", global.format, "jsonl or csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));
    app.add_option("--threads", global.threads, "worker threads for trials")
        ->check(CLI::PositiveNumber);
    app.add_flag("--timing", global.timing, "include wall-clock times in records");

    // gen-circuit
    auto* gen = app.add_subcommand("gen-circuit", "emit a random brickwork circuit file");
    size_t gen_n = 8, gen_d = 12;
    std::optional<size_t> gen_restrict;
    gen->add_option("--n", gen_n, "qubits")->check(CLI::Range(size_t{2}, size_t{1} << 20));
    gen->add_option("--depth", gen_d, "layers");
    gen->add_option("--restrict-k", gen_restrict, "act nontrivially on the first k qubits only");

    // sample
    auto* sample = app.add_subcommand("sample", "emit measurement samples from a circuit");
    std::string sample_circuit;
    size_t sample_num = 10;
    sample->add_option("--circuit", sample_circuit, "circuit file")->required();
    sample->add_option("--num", sample_num, "number of samples");

    // learn
    auto* learn = app.add_subcommand("learn", "recover the support of a circuit's distribution");
    std::string learn_circuit;
    size_t learn_n = 12, learn_d = 24;
    double learn_delta = 0.05;
    learn->add_option("--circuit", learn_circuit, "circuit file (otherwise drawn from seed)");
    learn->add_option("--n", learn_n, "qubits when drawing a target");
    learn->add_option("--depth", learn_d, "depth when drawing a target");
    learn->add_option("--delta", learn_delta, "failure probability")
        ->check(CLI::Range(1e-9, 1.0 - 1e-9));

    // verify-single-qubit
    app.add_subcommand("verify-single-qubit", "exact single-qubit bias average");

    // verify-moments
    auto* moments = app.add_subcommand("verify-moments", "global Clifford probability moments");
    size_t mom_n = 2, mom_trials = 50000;
    moments->add_option("--n", mom_n, "qubits");
    moments->add_option("--trials", mom_trials, "draws");

    // verify-brickwork-moments
    auto* bmoments =
        app.add_subcommand("verify-brickwork-moments", "brickwork second-moment bound");
    size_t bm_n = 8, bm_d = 12, bm_trials = 10000;
    bmoments->add_option("--n", bm_n, "qubits");
    bmoments->add_option("--depth", bm_d, "layers");
    bmoments->add_option("--trials", bm_trials, "draws");

    // verify-tv
    auto* tv = app.add_subcommand("verify-tv", "far-from-uniform fraction bound");
    size_t tv_n = 6, tv_d = 6, tv_trials = 10000;
    double tv_eps = 0.1;
    std::string tv_ensemble = "global";
    tv->add_option("--n", tv_n, "qubits");
    tv->add_option("--ensemble", tv_ensemble, "global or brickwork")
        ->check(CLI::IsMember({"global", "brickwork"}));
    tv->add_option("--depth", tv_d, "layers (brickwork)");
    tv->add_option("--epsilon", tv_eps, "distance threshold");
    tv->add_option("--trials", tv_trials, "draws");

    // verify-expected-tv
    auto* etv = app.add_subcommand("verify-expected-tv", "expected TV distance bound");
    size_t etv_n = 6, etv_d = 6, etv_trials = 10000;
    std::string etv_ensemble = "global";
    etv->add_option("--n", etv_n, "qubits");
    etv->add_option("--ensemble", etv_ensemble, "global or brickwork")
        ->check(CLI::IsMember({"global", "brickwork"}));
    etv->add_option("--depth", etv_d, "layers (brickwork)");
    etv->add_option("--trials", etv_trials, "draws");

    // verify-chebyshev
    auto* cheb = app.add_subcommand("verify-chebyshev", "distinguishing-probability bound");
    size_t cheb_n = 8, cheb_d = 12, cheb_trials = 20000;
    double cheb_tau = 0.5;
    std::string cheb_ensemble = "global", cheb_phi = "parity:random";
    cheb->add_option("--n", cheb_n, "qubits");
    cheb->add_option("--ensemble", cheb_ensemble, "global or brickwork")
        ->check(CLI::IsMember({"global", "brickwork"}));
    cheb->add_option("--depth", cheb_d, "layers (brickwork)");
    cheb->add_option("--tau", cheb_tau, "query tolerance");
    cheb->add_option("--trials", cheb_trials, "draws");
    cheb->add_option("--phi", cheb_phi, "query descriptor (parity:...)");

    // verify-span
    auto* span = app.add_subcommand("verify-span", "span-probability formula vs Monte Carlo");
    size_t span_k = 5, span_n = 3, span_trials = 100000;
    bool span_grid = false;
    span->add_option("--k", span_k, "vectors drawn");
    span->add_option("--n", span_n, "dimension");
    span->add_option("--trials", span_trials, "trials per point");
    span->add_flag("--grid", span_grid, "run the full grid n <= 6, k <= 10");

    // verify-frac
    auto* frac = app.add_subcommand("verify-frac", "post-selected distinguishing fraction");
    size_t frac_n = 6, frac_d = 6, frac_trials = 2000;
    double frac_eps = 0.1, frac_tau = 0.25;
    std::string frac_ensemble = "global", frac_phi = "parity:random", frac_d0 = "uniform";
    frac->add_option("--n", frac_n, "qubits");
    frac->add_option("--ensemble", frac_ensemble, "global or brickwork")
        ->check(CLI::IsMember({"global", "brickwork"}));
    frac->add_option("--depth", frac_d, "layers (brickwork)");
    frac->add_option("--epsilon", frac_eps, "far threshold");
    frac->add_option("--tau", frac_tau, "query tolerance");
    frac->add_option("--trials", frac_trials, "accepted draws");
    frac->add_option("--phi", frac_phi, "query descriptor (parity:...)");
    frac->add_option("--d0", frac_d0, "reference: uniform or embedded:<k>");

    // verify-learner
    auto* vlearn = app.add_subcommand("verify-learner", "learner success-rate bound");
    size_t vl_n = 12, vl_d = 24, vl_trials = 500;
    double vl_delta = 0.05;
    vlearn->add_option("--n", vl_n, "qubits");
    vlearn->add_option("--depth", vl_d, "layers");
    vlearn->add_option("--delta", vl_delta, "failure probability")
        ->check(CLI::Range(1e-9, 1.0 - 1e-9));
    vlearn->add_option("--trials", vl_trials, "independent targets");

    // mmd-demo
    auto* mmd = app.add_subcommand("mmd-demo", "MMD estimator through SQ queries");
    MmdDemoConfig mmd_cfg;
    std::string mmd_bw = "0.5,1.0,2.0", mmd_mode = "GridRounded";
    mmd->add_option("--n", mmd_cfg.n, "qubits");
    mmd->add_option("--target-depth", mmd_cfg.target_depth, "target circuit depth");
    mmd->add_option("--model-depth", mmd_cfg.model_depth, "model circuit depth");
    mmd->add_option("--samples", mmd_cfg.model_samples, "model samples");
    mmd->add_option("--bandwidths", mmd_bw, "comma-separated kernel bandwidths");
    mmd->add_option("--tau", mmd_cfg.tau, "SQ tolerance");
    mmd->add_option("--delta-prime", mmd_cfg.delta_prime, "empirical failure budget");
    mmd->add_option("--mode", mmd_mode, "Exact, GridRounded or Empirical");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        OutputWriter writer(global);
        auto base_cfg = [&](size_t n, const std::string& ensemble, size_t depth,
                            size_t trials) {
            ExperimentConfig cfg;
            cfg.n = n;
            cfg.ensemble = ensemble == "global" ? Ensemble::GlobalClifford : Ensemble::Brickwork;
            cfg.depth = cfg.ensemble == Ensemble::Brickwork ? depth : 0;
            cfg.trials = trials;
            cfg.seed = global.seed;
            cfg.threads = global.threads;
            return cfg;
        };

        if (gen->parsed()) {
            auto rng = make_trial_rng(global.seed, 0);
            auto circuit = random_brickwork(gen_n, gen_d, rng, gen_restrict);
            writer.write_raw(circuit.to_json_string() + "\n");
        } else if (sample->parsed()) {
            auto circuit = BrickworkCircuit::from_json_string(read_file(sample_circuit));
            auto tableau = run_circuit(circuit);
            auto rng = make_trial_rng(global.seed, 0);
            if (global.format == "csv") {
                writer.write_raw("x\n");
            }
            for (size_t i = 0; i < sample_num; i++) {
                std::string x = tableau.measure_all(rng).to_string();
                if (global.format == "csv") {
                    writer.write_raw(x + "\n");
                } else {
                    writer.write_raw(json{{"x", x}}.dump() + "\n");
                }
            }
        } else if (learn->parsed()) {
            StabilizerTableau tableau = [&] {
                if (!learn_circuit.empty()) {
                    auto circuit = BrickworkCircuit::from_json_string(read_file(learn_circuit));
                    return run_circuit(circuit);
                }
                auto rng = make_trial_rng(global.seed, 0);
                return run_circuit(random_brickwork(learn_n, learn_d, rng));
            }();
            size_t n = tableau.num_qubits();
            AffineSubspace truth = tableau.affine_support();
            SampleOracle oracle(tableau, make_trial_rng(global.seed, 1));
            LearnedModel model = pac_learn(oracle, {n, learn_delta});
            const auto& sub = model.subspace();
            json rec;
            rec["experiment"] = "learn";
            rec["n"] = n;
            rec["delta"] = learn_delta;
            rec["seed"] = global.seed;
            rec["basis"] = sub.basis().to_row_strings();
            rec["offset"] = sub.offset().to_string();
            rec["m"] = sub.dim();
            rec["samples_used"] = oracle.query_count();
            rec["matched_ground_truth"] = sub == truth;
            if (global.format == "csv") {
                std::string basis_join;
                for (const auto& row : sub.basis().to_row_strings()) {
                    basis_join += (basis_join.empty() ? "" : ";") + row;
                }
                writer.write_raw("n,m,offset,basis,samples_used,matched_ground_truth,seed\n");
                writer.write_raw(std::to_string(n) + "," + std::to_string(sub.dim()) + "," +
                                 sub.offset().to_string() + "," + basis_join + "," +
                                 std::to_string(oracle.query_count()) + "," +
                                 (sub == truth ? "true" : "false") + "," +
                                 std::to_string(global.seed) + "\n");
            } else {
                writer.write_raw(rec.dump() + "\n");
            }
        } else if (app.got_subcommand("verify-single-qubit")) {
            writer.write_record(single_qubit_experiment());
        } else if (moments->parsed()) {
            writer.write_records(moment_experiment(base_cfg(mom_n, "global", 0, mom_trials)));
        } else if (bmoments->parsed()) {
            writer.write_records(
                brickwork_moment_experiment(base_cfg(bm_n, "brickwork", bm_d, bm_trials)));
        } else if (tv->parsed()) {
            auto cfg = base_cfg(tv_n, tv_ensemble, tv_d, tv_trials);
            cfg.epsilon = tv_eps;
            writer.write_record(tv_far_fraction_experiment(cfg));
        } else if (etv->parsed()) {
            writer.write_record(
                expected_tv_experiment(base_cfg(etv_n, etv_ensemble, etv_d, etv_trials)));
        } else if (cheb->parsed()) {
            auto cfg = base_cfg(cheb_n, cheb_ensemble, cheb_d, cheb_trials);
            cfg.tau = cheb_tau;
            cfg.phi = cheb_phi;
            writer.write_record(chebyshev_numerator_experiment(cfg));
        } else if (span->parsed()) {
            if (span_grid) {
                for (size_t n = 1; n <= 6; n++) {
                    for (size_t k = 1; k <= 10; k++) {
                        writer.write_record(span_probability_experiment(
                            k, n, span_trials, splitmix64(global.seed) + 16 * n + k,
                            global.threads));
                    }
                }
            } else {
                writer.write_record(span_probability_experiment(span_k, span_n, span_trials,
                                                                global.seed, global.threads));
            }
        } else if (frac->parsed()) {
            auto cfg = base_cfg(frac_n, frac_ensemble, frac_d, frac_trials);
            cfg.epsilon = frac_eps;
            cfg.tau = frac_tau;
            cfg.phi = frac_phi;
            if (frac_d0.rfind("embedded:", 0) == 0) {
                cfg.restrict_k = std::stoul(frac_d0.substr(9));
            }
            writer.write_records(frac_experiment(cfg, parse_d0(frac_d0, frac_n), frac_phi));
        } else if (vlearn->parsed()) {
            auto cfg = base_cfg(vl_n, "brickwork", vl_d, vl_trials);
            cfg.delta = vl_delta;
            writer.write_records(learner_success_experiment(cfg));
        } else if (mmd->parsed()) {
            mmd_cfg.bandwidths = parse_bandwidths(mmd_bw);
            mmd_cfg.sq_mode = sq_mode_from_string(mmd_mode);
            mmd_cfg.seed = global.seed;
            writer.write_record(mmd_demo_experiment(mmd_cfg));
        }
        return writer.any_fail() ? 1 : 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; i++) {
        args.emplace_back(argv[i]);
    }
    return run(args);
}

}  // namespace cliffordlearn::cli
