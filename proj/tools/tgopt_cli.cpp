// Copyright 2026 The tgopt Authors

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// tgopt run     --cost <spec> --layers L --optimizer NAME [--strategy NAME]
//               --iterations I --runs R --seed S [--shots N] --out DIR
// tgopt run     --config cfg.json [overrides...] --out DIR
// tgopt compare --inputs DIR... --out report.json
//
// Exit codes: 0 ok, 2 configuration error, 3 capacity error, 1 other.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tgopt/errors.hpp"
#include "tgopt/experiment.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitCapacity = 3;

struct RunArgs {
    std::string config;
    std::string cost;
    std::size_t layers = 0;
    std::string optimizer;
    std::string strategy;
    std::size_t iterations = 0;
    std::size_t runs = 0;
    std::uint64_t seed = 0;
    std::uint32_t shots = 0;
    std::string out;
};

tgopt::ExperimentConfig build_config(const RunArgs &a, const CLI::App &run) {
    tgopt::ExperimentConfig cfg;
    if (!a.config.empty()) {
        cfg = tgopt::ExperimentConfig::load(a.config);
    } else if (a.cost.empty() || a.optimizer.empty()) {
        throw tgopt::ConfigError("run needs --cost and --optimizer, or --config");
    }
    if (run.count("--cost") > 0) {
        cfg.cost = tgopt::CostSpec::parse(a.cost);
    }
    if (run.count("--optimizer") > 0) {
        cfg.optimizer = tgopt::parse_optimizer(a.optimizer);
    }
    if (run.count("--strategy") > 0) {
        cfg.strategy = tgopt::parse_strategy(a.strategy);
    }
    if (run.count("--layers") > 0) {
        cfg.layers = a.layers;
    }
    if (run.count("--iterations") > 0) {
        cfg.iterations = a.iterations;
    }
    if (run.count("--runs") > 0) {
        cfg.runs = a.runs;
    }
    if (run.count("--seed") > 0) {
        cfg.base_seed = a.seed;
    }
    if (run.count("--shots") > 0) {
        cfg.shots = a.shots;
    }
    cfg.validate();
    return cfg;
}

int do_run(const RunArgs &a, const CLI::App &run) {
    const tgopt::ExperimentConfig cfg = build_config(a, run);
    const std::filesystem::path out(a.out);
    std::error_code ec;
    std::filesystem::create_directories(out, ec);
    if (ec) {
        throw tgopt::IoError("cannot create '" + out.string() + "': " + ec.message());
    }
    const tgopt::ExperimentResult result = tgopt::run_experiment(cfg);
    tgopt::emit_csv(result, out / "trace.csv");
    tgopt::emit_json(result, out / "summary.json");
    std::printf("%s %s%s%s: mean final %s %.6e +/- %.2e over %zu runs\n",
                cfg.cost.str().c_str(), std::string(tgopt::to_string(cfg.optimizer)).c_str(),
                tgopt::gates_per_update(cfg.optimizer) == 2 ? "/" : "",
                tgopt::gates_per_update(cfg.optimizer) == 2
                    ? std::string(tgopt::to_string(cfg.strategy)).c_str()
                    : "",
                cfg.cost.is_fidelity() ? "infidelity" : "relative error",
                result.summary.final_relative_error.mean,
                result.summary.final_relative_error.standard_error, cfg.runs);
    return 0;
}

int do_compare(const std::vector<std::string> &inputs, const std::string &out) {
    std::vector<tgopt::ReportInput> loaded;
    for (const std::string &path : inputs) {
        loaded.push_back(tgopt::ReportInput::load(path));
    }
    const nlohmann::json report = tgopt::compare_report(loaded);
    std::ofstream file(out);
    if (!file) {
        throw tgopt::IoError("cannot write '" + out + "'");
    }
    file << report.dump(2) << '\n';
    for (const auto &[kind, best] : report["best"].items()) {
        std::printf("%s: best strategy %s, %.1f%% below %s (%.3e -> %.3e)\n", kind.c_str(),
                    best["strategy"].is_null()
                        ? "-"
                        : best["strategy"].get<std::string>().c_str(),
                    best["improvement_percent"].get<double>(),
                    best["baseline"].get<std::string>().c_str(),
                    best["baseline_value"].get<double>(),
                    best["candidate_value"].get<double>());
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Sequential one- and two-gate circuit optimizers"};
    app.require_subcommand(1);

    RunArgs run_args;
    CLI::App *run = app.add_subcommand("run", "run an experiment");
    run->add_option("--config", run_args.config, "JSON experiment config");
    run->add_option("--cost", run_args.cost,
                    "tfim:<n>:<J>:<h> | fh:<t>:<U> | file:<path> | fidelity:<n>:<seed>");
    run->add_option("--layers", run_args.layers, "ansatz layers L");
    run->add_option("--optimizer", run_args.optimizer, "fraxis | fqs | tgf | tgfqs");
    run->add_option("--strategy", run_args.strategy,
                    "linear | random | opposite | half_shifted");
    run->add_option("--iterations", run_args.iterations, "sweeps per run");
    run->add_option("--runs", run_args.runs, "independent runs");
    run->add_option("--seed", run_args.seed, "base seed; run i uses seed + i");
    run->add_option("--shots", run_args.shots, "shots per Pauli term (default: exact)");
    run->add_option("--out", run_args.out, "output directory")->required();

    std::vector<std::string> inputs;
    std::string report_out;
    CLI::App *compare = app.add_subcommand("compare", "compare finished experiments");
    compare->add_option("--inputs", inputs, "experiment directories or summary files")
        ->required();
    compare->add_option("--out", report_out, "report JSON path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (*run) {
            return do_run(run_args, *run);
        }
        return do_compare(inputs, report_out);
    } catch (const tgopt::CapacityError &e) {
        std::fprintf(stderr, "capacity error: %s\n", e.what());
        return kExitCapacity;
    } catch (const tgopt::ConfigError &e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return kExitConfig;
    } catch (const tgopt::ParseError &e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
