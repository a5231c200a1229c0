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
#include "tgopt/experiment.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <exception>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "tgopt/errors.hpp"
#include "tgopt/single_gate.hpp"

namespace tgopt {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

template <typename T>
bool parse_number(std::string_view s, T &out) {
    const char *end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc() && ptr == end && !s.empty();
}

template <typename T>
T cost_field(std::string_view text, std::string_view field, const char *what) {
    T value{};
    if (!parse_number(field, value)) {
        throw ConfigError("cost '" + std::string(text) + "': bad " + what + " '" +
                          std::string(field) + "'");
    }
    return value;
}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::filesystem::path meta_path(const std::filesystem::path &file) {
    std::filesystem::path meta = file;
    meta.replace_extension(".meta.json");
    return meta;
}

} // namespace

CostSpec CostSpec::parse(std::string_view text) {
    const std::vector<std::string_view> f = split(text, ':');
    CostSpec spec;
    const std::string_view head = f[0];
    if (head == "tfim") {
        if (f.size() != 4) {
            throw ConfigError("expected tfim:<n>:<J>:<h>, got '" + std::string(text) + "'");
        }
        spec.kind = Kind::Tfim;
        spec.tfim.n = cost_field<std::size_t>(text, f[1], "qubit count");
        spec.tfim.J = cost_field<double>(text, f[2], "coupling");
        spec.tfim.h = cost_field<double>(text, f[3], "field");
    } else if (head == "fh" || head == "fermi_hubbard") {
        if (f.size() != 3) {
            throw ConfigError("expected fh:<t>:<U>, got '" + std::string(text) + "'");
        }
        spec.kind = Kind::FermiHubbard;
        spec.hubbard.t = cost_field<double>(text, f[1], "hopping");
        spec.hubbard.U = cost_field<double>(text, f[2], "interaction");
    } else if (head == "file") {
        const std::string_view rest = f.size() < 2 ? "" : text.substr(5);
        if (rest.empty()) {
            throw ConfigError("expected file:<path>, got '" + std::string(text) + "'");
        }
        spec.kind = Kind::File;
        spec.file = std::string(rest);
    } else if (head == "fidelity") {
        if (f.size() != 3) {
            throw ConfigError("expected fidelity:<n>:<seed>, got '" + std::string(text) +
                              "'");
        }
        spec.kind = Kind::Fidelity;
        spec.fidelity_qubits = cost_field<std::size_t>(text, f[1], "qubit count");
        spec.fidelity_seed = cost_field<std::uint64_t>(text, f[2], "seed");
    } else {
        throw ConfigError("unknown cost '" + std::string(text) + "'");
    }
    return spec;
}

std::string CostSpec::str() const {
    switch (kind) {
    case Kind::Tfim:
        return "tfim:" + std::to_string(tfim.n) + ":" + format_double(tfim.J) + ":" +
               format_double(tfim.h);
    case Kind::FermiHubbard:
        return "fh:" + format_double(hubbard.t) + ":" + format_double(hubbard.U);
    case Kind::File:
        return "file:" + file.string();
    case Kind::Fidelity:
        return "fidelity:" + std::to_string(fidelity_qubits) + ":" +
               std::to_string(fidelity_seed);
    }
    return "?";
}

void ExperimentConfig::validate() const {
    if (iterations > 1'000'000) {
        throw ConfigError("iteration count is unreasonably large");
    }
    if (runs < 1) {
        throw ConfigError("runs must be >= 1");
    }
    if (layers < 1) {
        throw ConfigError("layers must be >= 1");
    }
    if (shots && (*shots < 1 || *shots > 0x7fffffffU)) {
        throw ConfigError("shots must be in 1..2^31-1");
    }
    if (shots && cost.is_fidelity()) {
        throw ConfigError("the infidelity cost is exact-mode only");
    }
    if (minimizer.starts < 1) {
        throw ConfigError("minimizer needs at least one start");
    }
    std::size_t n = 0;
    switch (cost.kind) {
    case CostSpec::Kind::Tfim:
        n = cost.tfim.n;
        if (!std::isfinite(cost.tfim.J) || !std::isfinite(cost.tfim.h)) {
            throw ConfigError("TFIM couplings must be finite");
        }
        break;
    case CostSpec::Kind::FermiHubbard:
        n = kHubbardQubits;
        if (!std::isfinite(cost.hubbard.t) || !std::isfinite(cost.hubbard.U)) {
            throw ConfigError("Hubbard parameters must be finite");
        }
        break;
    case CostSpec::Kind::Fidelity:
        n = cost.fidelity_qubits;
        break;
    case CostSpec::Kind::File:
        return; // checked once the file is read
    }
    if (n < 2 || n > kMaxQubits) {
        throw ConfigError("qubit count must be in 2.." + std::to_string(kMaxQubits));
    }
    if ((n * layers) % 2 != 0) {
        throw ConfigError("layers * qubits must be even for pairing");
    }
}

nlohmann::json ExperimentConfig::to_json() const {
    nlohmann::json j;
    j["cost"] = cost.str();
    j["layers"] = layers;
    j["optimizer"] = std::string(to_string(optimizer));
    if (gates_per_update(optimizer) == 2) {
        j["strategy"] = std::string(to_string(strategy));
    } else {
        j["strategy"] = nullptr;
    }
    j["iterations"] = iterations;
    j["runs"] = runs;
    j["seed"] = base_seed;
    j["shots"] = shots ? nlohmann::json(*shots) : nlohmann::json(nullptr);
    j["minimizer"] = {{"starts", minimizer.starts},
                      {"max_iterations", minimizer.max_iterations},
                      {"gradient_tolerance", minimizer.gradient_tolerance},
                      {"max_block_sweeps", minimizer.max_block_sweeps}};
    return j;
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json &j) {
    try {
        ExperimentConfig cfg;
        if (!j.is_object() || !j.contains("cost") || !j.contains("optimizer")) {
            throw ConfigError("config needs at least \"cost\" and \"optimizer\"");
        }
        cfg.cost = CostSpec::parse(j.at("cost").get<std::string>());
        cfg.optimizer = parse_optimizer(j.at("optimizer").get<std::string>());
        if (j.contains("strategy") && !j["strategy"].is_null()) {
            cfg.strategy = parse_strategy(j["strategy"].get<std::string>());
        }
        cfg.layers = j.value("layers", cfg.layers);
        cfg.iterations = j.value("iterations", cfg.iterations);
        cfg.runs = j.value("runs", cfg.runs);
        cfg.base_seed = j.value("seed", cfg.base_seed);
        if (j.contains("shots") && !j["shots"].is_null()) {
            const auto s = j["shots"].get<std::int64_t>();
            if (s < 1 || s > 0x7fffffff) {
                throw ConfigError("shots must be in 1..2^31-1");
            }
            cfg.shots = static_cast<std::uint32_t>(s);
        }
        if (j.contains("minimizer")) {
            const nlohmann::json &m = j["minimizer"];
            cfg.minimizer.starts = m.value("starts", cfg.minimizer.starts);
            cfg.minimizer.max_iterations =
                m.value("max_iterations", cfg.minimizer.max_iterations);
            cfg.minimizer.gradient_tolerance =
                m.value("gradient_tolerance", cfg.minimizer.gradient_tolerance);
            cfg.minimizer.max_block_sweeps =
                m.value("max_block_sweeps", cfg.minimizer.max_block_sweeps);
        }
        return cfg;
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError(std::string("bad config: ") + e.what());
    }
}

ExperimentConfig ExperimentConfig::load(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config '" + path.string() + "'");
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
    ExperimentConfig cfg = from_json(j);
    // Relative Hamiltonian paths resolve against the config's directory.
    if (cfg.cost.kind == CostSpec::Kind::File && cfg.cost.file.is_relative() &&
        !std::filesystem::exists(cfg.cost.file)) {
        cfg.cost.file = path.parent_path() / cfg.cost.file;
    }
    return cfg;
}

Problem make_problem(const CostSpec &spec, std::size_t run_id) {
    switch (spec.kind) {
    case CostSpec::Kind::Tfim: {
        PauliObservable obs = tfim_hamiltonian(spec.tfim);
        const double e = ground_energy(obs);
        return {CostFunction(std::move(obs)), spec.tfim.n, e};
    }
    case CostSpec::Kind::FermiHubbard: {
        PauliObservable obs = fermi_hubbard_hamiltonian(spec.hubbard);
        const double e = ground_energy(obs);
        return {CostFunction(std::move(obs)), kHubbardQubits, e};
    }
    case CostSpec::Kind::File: {
        PauliObservable obs = load_hamiltonian_file(spec.file);
        const std::size_t n = obs.num_qubits();
        std::optional<double> e;
        const std::filesystem::path meta = meta_path(spec.file);
        if (std::filesystem::exists(meta)) {
            std::ifstream in(meta);
            try {
                const nlohmann::json j = nlohmann::json::parse(in);
                if (j.contains("ground_energy")) {
                    e = j["ground_energy"].get<double>();
                }
            } catch (const nlohmann::json::exception &ex) {
                throw ConfigError(meta.string() + ": " + ex.what());
            }
        }
        if (!e) {
            e = ground_energy(obs);
        }
        return {CostFunction(std::move(obs)), n, e};
    }
    case CostSpec::Kind::Fidelity: {
        StateVector target =
            make_target_state(spec.fidelity_qubits, spec.fidelity_seed + run_id);
        return {infidelity_observable(std::move(target)), spec.fidelity_qubits,
                std::nullopt};
    }
    }
    throw ConfigError("unhandled cost kind");
}

double relative_error(double cost, const std::optional<double> &ground) {
    if (!ground) {
        return cost;
    }
    return std::abs(cost - *ground) / std::abs(*ground);
}

namespace {

RunResult optimize(const ExperimentConfig &cfg, const Problem &problem,
                   std::size_t run_id) {
    const std::uint64_t seed = cfg.base_seed + run_id;
    const Ansatz ansatz(problem.num_qubits, cfg.layers);
    const ShotConfig shots = cfg.shots
                                 ? ShotConfig::with_shots(
                                       *cfg.shots, derive_seed(seed, static_cast<std::uint64_t>(
                                                                         Stream::Shots)))
                                 : ShotConfig::exact();
    Evaluator eval(problem.cost, shots);

    Rng init_rng(seed, Stream::ParameterInit);
    ParameterSet initial = random_parameters(ansatz, is_axis_only(cfg.optimizer), init_rng);
    RunState run = start_run(cfg.optimizer, ansatz, std::move(initial), eval);

    Rng pairing_rng(seed, Stream::Pairing);
    Rng minimizer_rng(seed, Stream::Minimizer);
    for (std::size_t it = 0; it < cfg.iterations; ++it) {
        if (gates_per_update(cfg.optimizer) == 1) {
            single_gate_sweep(cfg.optimizer, ansatz, run, eval);
        } else {
            two_gate_sweep(cfg.optimizer, cfg.strategy, ansatz, run, eval, pairing_rng,
                           minimizer_rng, cfg.minimizer);
        }
    }

    RunResult result;
    result.run_id = run_id;
    result.trace = std::move(run.trace);
    result.relative_errors.reserve(result.trace.records.size());
    for (const UpdateRecord &r : result.trace.records) {
        result.relative_errors.push_back(relative_error(r.exact_cost, problem.ground_energy));
    }
    return result;
}

} // namespace

RunResult run_single(const ExperimentConfig &cfg, std::size_t run_id) {
    cfg.validate();
    const Problem problem = make_problem(cfg.cost, run_id);
    return optimize(cfg, problem, run_id);
}

MeanWithError mean_with_error(const std::vector<double> &values) {
    MeanWithError out;
    if (values.empty()) {
        out.mean = std::numeric_limits<double>::quiet_NaN();
        return out;
    }
    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    const auto count = static_cast<double>(values.size());
    out.mean = sum / count;
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) {
            ss += (v - out.mean) * (v - out.mean);
        }
        out.standard_error = std::sqrt(ss / (count - 1.0)) / std::sqrt(count);
    }
    return out;
}

ExperimentSummary summarize(const std::vector<RunResult> &runs) {
    ExperimentSummary s;
    if (runs.empty()) {
        return s;
    }
    const std::size_t updates = runs.front().relative_errors.size();
    std::vector<double> column(runs.size());
    for (std::size_t u = 0; u < updates; ++u) {
        for (std::size_t r = 0; r < runs.size(); ++r) {
            column[r] = runs[r].relative_errors.at(u);
        }
        s.per_update.push_back(mean_with_error(column));
        s.cumulative_evals.push_back(runs.front().trace.records[u].cumulative_evals);
    }
    // Iteration boundaries: record 0, then every D or D/2 updates.
    const std::size_t iterations = runs.front().trace.iteration_costs.size();
    const std::size_t per_iteration = iterations > 1 ? (updates - 1) / (iterations - 1) : 0;
    for (std::size_t it = 0; it < iterations; ++it) {
        for (std::size_t r = 0; r < runs.size(); ++r) {
            column[r] = runs[r].relative_errors.at(it * per_iteration);
        }
        s.per_iteration.push_back(mean_with_error(column));
    }
    for (const RunResult &r : runs) {
        s.final_relative_errors.push_back(r.relative_errors.back());
    }
    s.final_relative_error = mean_with_error(s.final_relative_errors);
    return s;
}

ExperimentResult run_experiment(const ExperimentConfig &cfg) {
    cfg.validate();
    ExperimentResult result;
    result.config = cfg;

    // Shared problem for everything but per-run fidelity targets.
    const Problem shared = make_problem(cfg.cost, 0);
    if (cfg.cost.kind == CostSpec::Kind::File) {
        const std::size_t n = shared.num_qubits;
        if ((n * cfg.layers) % 2 != 0) {
            throw ConfigError("layers * qubits must be even for pairing");
        }
        if (n < 2 || n > kMaxQubits) {
            throw ConfigError("qubit count must be in 2.." + std::to_string(kMaxQubits));
        }
    }
    result.ground_energy = shared.ground_energy;
    result.runs.resize(cfg.runs);

    std::exception_ptr failure;
    const auto runs = static_cast<std::int64_t>(cfg.runs);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < runs; ++i) {
        try {
            const auto id = static_cast<std::size_t>(i);
            if (cfg.cost.is_fidelity()) {
                result.runs[id] = optimize(cfg, make_problem(cfg.cost, id), id);
            } else {
                result.runs[id] = optimize(cfg, shared, id);
            }
        } catch (...) {
#pragma omp critical(tgopt_run_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    result.summary = summarize(result.runs);
    return result;
}

std::vector<CsvRow> to_rows(const std::vector<RunResult> &runs) {
    std::vector<CsvRow> rows;
    for (const RunResult &run : runs) {
        for (std::size_t u = 0; u < run.trace.records.size(); ++u) {
            const UpdateRecord &rec = run.trace.records[u];
            rows.push_back({run.run_id, rec.update_index, rec.cumulative_evals, rec.cost,
                            run.relative_errors[u], rec.accepted});
        }
    }
    return rows;
}

void write_csv(std::ostream &out, const std::vector<RunResult> &runs) {
    out << kCsvHeader << '\n';
    for (const CsvRow &r : to_rows(runs)) {
        out << r.run_id << ',' << r.update_index << ',' << r.cumulative_evals << ','
            << format_double(r.cost) << ',' << format_double(r.relative_error) << ','
            << (r.accepted ? 1 : 0) << '\n';
    }
}

std::vector<CsvRow> read_csv(std::istream &in) {
    std::vector<CsvRow> rows;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (!header_seen) {
            if (line != kCsvHeader) {
                throw ParseError(line_no, "unexpected CSV header '" + line + "'");
            }
            header_seen = true;
            continue;
        }
        const std::vector<std::string_view> f = split(line, ',');
        if (f.size() != 6) {
            throw ParseError(line_no, "expected 6 fields, got " + std::to_string(f.size()));
        }
        CsvRow r;
        int accepted = 0;
        // from_chars for doubles does not accept every spelling strtod does,
        // but it reads %.17g output exactly.
        if (!parse_number(f[0], r.run_id) || !parse_number(f[1], r.update_index) ||
            !parse_number(f[2], r.cumulative_evals) || !parse_number(f[3], r.cost) ||
            !parse_number(f[4], r.relative_error) || !parse_number(f[5], accepted) ||
            (accepted != 0 && accepted != 1)) {
            throw ParseError(line_no, "malformed row '" + line + "'");
        }
        r.accepted = accepted == 1;
        rows.push_back(r);
    }
    if (!header_seen) {
        throw ParseError(line_no, "missing CSV header");
    }
    return rows;
}

void emit_csv(const ExperimentResult &result, const std::filesystem::path &path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write '" + path.string() + "'");
    }
    write_csv(out, result.runs);
    if (!out) {
        throw IoError("write failed for '" + path.string() + "'");
    }
}

nlohmann::json summary_json(const ExperimentResult &result) {
    nlohmann::json j;
    j["config"] = result.config.to_json();
    j["ground_energy"] = result.ground_energy ? nlohmann::json(*result.ground_energy)
                                              : nlohmann::json(nullptr);
    j["metric"] = result.config.cost.is_fidelity() ? "infidelity"
                                                   : "relative_error |E-E_g|/|E_g|";
    j["interval"] = "mean +/- standard error across runs (68%)";
    j["mean_final_relative_error"] = result.summary.final_relative_error.mean;
    j["stderr_final_relative_error"] = result.summary.final_relative_error.standard_error;
    j["final_relative_errors"] = result.summary.final_relative_errors;

    nlohmann::json per_update = nlohmann::json::array();
    for (std::size_t u = 0; u < result.summary.per_update.size(); ++u) {
        per_update.push_back({{"update_index", u},
                              {"cumulative_evals", result.summary.cumulative_evals[u]},
                              {"mean", result.summary.per_update[u].mean},
                              {"stderr", result.summary.per_update[u].standard_error}});
    }
    j["per_update"] = std::move(per_update);
    nlohmann::json per_iteration = nlohmann::json::array();
    for (std::size_t it = 0; it < result.summary.per_iteration.size(); ++it) {
        per_iteration.push_back({{"iteration", it},
                                 {"mean", result.summary.per_iteration[it].mean},
                                 {"stderr", result.summary.per_iteration[it].standard_error}});
    }
    j["per_iteration"] = std::move(per_iteration);
    if (!result.runs.empty()) {
        const EvalAudit audit = eval_count_audit(result.runs.front().trace);
        j["evaluations"] = {{"tomography_per_update", audit.tomography_per_update},
                            {"tomography_per_gate", audit.tomography_per_gate},
                            {"total_per_run", audit.total}};
    }
    const std::time_t now =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    j["metadata"] = {{"generated_at", stamp}};
    return j;
}

void emit_json(const ExperimentResult &result, const std::filesystem::path &path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write '" + path.string() + "'");
    }
    out << summary_json(result).dump(2) << '\n';
    if (!out) {
        throw IoError("write failed for '" + path.string() + "'");
    }
}

double relative_improvement_percent(double baseline, double candidate) {
    return 100.0 * (baseline - candidate) / baseline;
}

ReportInput ReportInput::from_summary(const nlohmann::json &summary) {
    try {
        const nlohmann::json &cfg = summary.at("config");
        ReportInput in;
        in.cost = cfg.at("cost").get<std::string>();
        in.layers = cfg.at("layers").get<std::size_t>();
        in.optimizer = parse_optimizer(cfg.at("optimizer").get<std::string>());
        if (cfg.contains("strategy") && !cfg["strategy"].is_null()) {
            in.strategy = parse_strategy(cfg["strategy"].get<std::string>());
        }
        if (cfg.contains("shots") && !cfg["shots"].is_null()) {
            in.shots = cfg["shots"].get<std::uint32_t>();
        }
        in.mean_final_relative_error = summary.at("mean_final_relative_error").get<double>();
        in.standard_error = summary.value("stderr_final_relative_error", 0.0);
        return in;
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError(std::string("bad summary: ") + e.what());
    }
}

ReportInput ReportInput::load(const std::filesystem::path &path) {
    std::filesystem::path file = path;
    if (std::filesystem::is_directory(file)) {
        file /= "summary.json";
    }
    std::ifstream in(file);
    if (!in) {
        throw IoError("cannot open '" + file.string() + "'");
    }
    try {
        return from_summary(nlohmann::json::parse(in));
    } catch (const nlohmann::json::parse_error &e) {
        throw ConfigError(file.string() + ": " + e.what());
    }
}

nlohmann::json compare_report(const std::vector<ReportInput> &inputs) {
    if (inputs.empty()) {
        throw ConfigError("compare needs at least one input");
    }
    const ReportInput &first = inputs.front();
    for (const ReportInput &in : inputs) {
        if (in.cost != first.cost) {
            throw ConfigError("inputs use different costs: '" + first.cost + "' vs '" +
                              in.cost + "'");
        }
        if (in.layers != first.layers) {
            throw ConfigError("inputs use different layer counts");
        }
        if (in.shots != first.shots) {
            throw ConfigError("inputs use different shot settings");
        }
    }

    const auto baseline_of = [&](OptimizerKind kind) -> const ReportInput * {
        for (const ReportInput &in : inputs) {
            if (in.optimizer == kind) {
                return &in;
            }
        }
        return nullptr;
    };

    nlohmann::json report;
    report["cost"] = first.cost;
    report["layers"] = first.layers;
    report["shots"] = first.shots ? nlohmann::json(*first.shots) : nlohmann::json(nullptr);
    nlohmann::json baselines = nlohmann::json::object();
    for (OptimizerKind kind : {OptimizerKind::Fraxis, OptimizerKind::Fqs}) {
        if (const ReportInput *b = baseline_of(kind)) {
            baselines[std::string(to_string(kind))] = b->mean_final_relative_error;
        }
    }
    report["baselines"] = baselines;

    nlohmann::json entries = nlohmann::json::array();
    nlohmann::json best = nlohmann::json::object();
    for (const ReportInput &in : inputs) {
        nlohmann::json e;
        e["optimizer"] = std::string(to_string(in.optimizer));
        e["strategy"] = in.strategy ? nlohmann::json(std::string(to_string(*in.strategy)))
                                    : nlohmann::json(nullptr);
        e["mean_final_relative_error"] = in.mean_final_relative_error;
        e["stderr_final_relative_error"] = in.standard_error;
        if (gates_per_update(in.optimizer) == 2) {
            const OptimizerKind base_kind = in.optimizer == OptimizerKind::Tgf
                                                ? OptimizerKind::Fraxis
                                                : OptimizerKind::Fqs;
            if (const ReportInput *b = baseline_of(base_kind)) {
                const double imp = relative_improvement_percent(
                    b->mean_final_relative_error, in.mean_final_relative_error);
                e["baseline"] = std::string(to_string(base_kind));
                e["improvement_percent"] = imp;
                const std::string key(to_string(in.optimizer));
                if (!best.contains(key) ||
                    imp > best[key]["improvement_percent"].get<double>()) {
                    best[key] = {{"strategy", e["strategy"]},
                                 {"baseline", std::string(to_string(base_kind))},
                                 {"baseline_value", b->mean_final_relative_error},
                                 {"candidate_value", in.mean_final_relative_error},
                                 {"improvement_percent", imp}};
                }
            }
        }
        entries.push_back(std::move(e));
    }
    report["entries"] = std::move(entries);
    report["best"] = std::move(best);
    return report;
}

} // namespace tgopt
