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
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "tgopt/cost.hpp"
#include "tgopt/models.hpp"
#include "tgopt/trace.hpp"
#include "tgopt/two_gate.hpp"

namespace tgopt {

/**
 * Cost selector, written on the command line as one of
 *
 *     tfim:<n>:<J>:<h>
 *     fh:<t>:<U>
 *     file:<path>
 *     fidelity:<n>:<seed>
 */
struct CostSpec {
    enum class Kind { Tfim, FermiHubbard, File, Fidelity };

    Kind kind = Kind::FermiHubbard;
    TfimParams tfim;
    FermiHubbardParams hubbard;
    std::filesystem::path file;
    std::size_t fidelity_qubits = 0;
    std::uint64_t fidelity_seed = 0;

    /// Throws ConfigError on malformed input.
    static CostSpec parse(std::string_view text);
    [[nodiscard]] std::string str() const;
    [[nodiscard]] bool is_fidelity() const noexcept { return kind == Kind::Fidelity; }
};

struct ExperimentConfig {
    CostSpec cost;
    std::size_t layers = 4;
    OptimizerKind optimizer = OptimizerKind::Fqs;
    PairingStrategy strategy = PairingStrategy::Random; ///< two-gate optimizers only
    std::size_t iterations = 50;
    std::size_t runs = 20;
    std::uint64_t base_seed = 0;
    std::optional<std::uint32_t> shots; ///< empty = exact
    MinimizerOptions minimizer;

    /// Throws ConfigError for inconsistent settings.
    void validate() const;

    [[nodiscard]] nlohmann::json to_json() const;
    /// Missing keys keep their defaults; "cost" and "optimizer" are required.
    static ExperimentConfig from_json(const nlohmann::json &j);
    static ExperimentConfig load(const std::filesystem::path &path);
};

/// Evaluated cost plus everything needed to score it.
struct Problem {
    CostFunction cost;
    std::size_t num_qubits;
    std::optional<double> ground_energy; ///< empty for fidelity tasks
};

/**
 * Builds the cost of run `run_id`. The ground energy comes from a dense
 * solve, or for files from a sibling `<stem>.meta.json` "ground_energy"
 * entry when present. Fidelity targets are drawn per run from
 * fidelity_seed + run_id. Throws CapacityError when a dense solve is
 * needed above kMaxDenseQubits.
 */
[[nodiscard]] Problem make_problem(const CostSpec &spec, std::size_t run_id);

/// |E - E_g| / |E_g|, or the cost itself when there is no ground energy.
[[nodiscard]] double relative_error(double cost, const std::optional<double> &ground);

struct RunResult {
    std::size_t run_id = 0;
    RunTrace trace;
    std::vector<double> relative_errors; ///< one per record, from the exact cost
};

struct MeanWithError {
    double mean = 0.0;
    double standard_error = 0.0; ///< sample std / sqrt(runs); 0 for one run
};

[[nodiscard]] MeanWithError mean_with_error(const std::vector<double> &values);

struct ExperimentSummary {
    std::vector<MeanWithError> per_update;     ///< relative error by update index
    std::vector<std::size_t> cumulative_evals; ///< by update index (run 0)
    std::vector<MeanWithError> per_iteration;  ///< relative error after each sweep
    MeanWithError final_relative_error;
    std::vector<double> final_relative_errors; ///< by run
};

struct ExperimentResult {
    ExperimentConfig config;
    std::optional<double> ground_energy;
    std::vector<RunResult> runs;
    ExperimentSummary summary;
};

/**
 * Executes `runs` independent optimizations. Run i uses seed base_seed + i,
 * split into parameter-init, pairing, shot and minimizer streams. Runs are
 * spread over OpenMP threads; results do not depend on the thread count.
 */
[[nodiscard]] ExperimentResult run_experiment(const ExperimentConfig &cfg);

/// A single optimization, as performed for one run of an experiment.
[[nodiscard]] RunResult run_single(const ExperimentConfig &cfg, std::size_t run_id);

[[nodiscard]] ExperimentSummary summarize(const std::vector<RunResult> &runs);

/// One CSV data row.
struct CsvRow {
    std::size_t run_id = 0;
    std::size_t update_index = 0;
    std::size_t cumulative_evals = 0;
    double cost = 0.0;
    double relative_error = 0.0;
    bool accepted = false;

    bool operator==(const CsvRow &) const = default;
};

inline constexpr std::string_view kCsvHeader =
    "run_id,update_index,cumulative_evals,cost,relative_error,accepted";

[[nodiscard]] std::vector<CsvRow> to_rows(const std::vector<RunResult> &runs);

/// Doubles are written with 17 significant digits, so a re-read is exact.
void write_csv(std::ostream &out, const std::vector<RunResult> &runs);
/// Throws ParseError with the line number on malformed input.
[[nodiscard]] std::vector<CsvRow> read_csv(std::istream &in);

/// Throws IoError naming the path.
void emit_csv(const ExperimentResult &result, const std::filesystem::path &path);
void emit_json(const ExperimentResult &result, const std::filesystem::path &path);

[[nodiscard]] nlohmann::json summary_json(const ExperimentResult &result);

/// (baseline - candidate) / baseline in percent.
[[nodiscard]] double relative_improvement_percent(double baseline, double candidate);

/// What compare_report needs from one finished experiment.
struct ReportInput {
    std::string cost;
    std::size_t layers = 0;
    OptimizerKind optimizer = OptimizerKind::Fqs;
    std::optional<PairingStrategy> strategy;
    std::optional<std::uint32_t> shots;
    double mean_final_relative_error = 0.0;
    double standard_error = 0.0;

    static ReportInput from_summary(const nlohmann::json &summary);
    /// Accepts a summary.json file or a directory holding one.
    static ReportInput load(const std::filesystem::path &path);
};

/**
 * Table of baselines (fraxis for tgf, fqs for tgfqs), every candidate's
 * improvement over its baseline and the best strategy per two-gate
 * optimizer. Throws ConfigError if inputs differ in cost, layer count or
 * shot setting.
 */
[[nodiscard]] nlohmann::json compare_report(const std::vector<ReportInput> &inputs);

} // namespace tgopt
