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
#include <string>
#include <string_view>
#include <vector>

#include "tgopt/ansatz.hpp"
#include "tgopt/cost.hpp"

namespace tgopt {

enum class OptimizerKind { Fraxis, Fqs, Tgf, Tgfqs };

[[nodiscard]] std::string_view to_string(OptimizerKind kind);
/// Throws ConfigError for unknown names.
[[nodiscard]] OptimizerKind parse_optimizer(std::string_view name);

/// Circuit evaluations needed to build one local model: 6, 10, 36, 100.
[[nodiscard]] constexpr std::size_t tomography_evals_per_update(OptimizerKind kind) {
    switch (kind) {
    case OptimizerKind::Fraxis:
        return 6;
    case OptimizerKind::Fqs:
        return 10;
    case OptimizerKind::Tgf:
        return 36;
    case OptimizerKind::Tgfqs:
        return 100;
    }
    return 0;
}

[[nodiscard]] constexpr std::size_t gates_per_update(OptimizerKind kind) {
    return kind == OptimizerKind::Tgf || kind == OptimizerKind::Tgfqs ? 2 : 1;
}

[[nodiscard]] constexpr bool is_axis_only(OptimizerKind kind) {
    return kind == OptimizerKind::Fraxis || kind == OptimizerKind::Tgf;
}

/// One local update. Record 0 of a trace is the initial point.
struct UpdateRecord {
    std::size_t update_index = 0;
    std::size_t gate_d = 0; ///< updated gate (single-gate) or later gate of the pair
    std::size_t gate_k = 0; ///< earlier gate of the pair, 0 for single-gate updates
    double cost = 0.0;       ///< tracked (possibly shot-noisy) value after the update
    double exact_cost = 0.0; ///< noiseless value at the current parameters
    bool accepted = false;
    std::size_t tomography_evals = 0;
    std::size_t tracking_evals = 0;
    std::size_t cumulative_evals = 0;
};

struct RunTrace {
    OptimizerKind optimizer = OptimizerKind::Fqs;
    std::vector<UpdateRecord> records;
    /// Exact cost after each completed iteration; entry 0 is the initial cost.
    std::vector<double> iteration_costs;

    [[nodiscard]] double final_cost() const { return records.back().exact_cost; }
};

/// State carried through the sweeps of one optimization run.
struct RunState {
    ParameterSet params;
    double tracked_cost = 0.0;
    RunTrace trace;
};

/// Measures the initial cost (one tracking evaluation) and opens the trace.
[[nodiscard]] RunState start_run(OptimizerKind kind, const Ansatz &ansatz,
                                 ParameterSet initial, Evaluator &eval);

/**
 * Accept-if-improved step shared by all optimizers: measures the candidate
 * (one tracking evaluation), adopts it when strictly below the tracked
 * cost, and appends the record.
 */
void commit_update(const Ansatz &ansatz, RunState &run, Evaluator &eval,
                   ParameterSet candidate, std::size_t gate_d, std::size_t gate_k,
                   std::size_t tomography_evals);

struct EvalAudit {
    std::size_t updates = 0;
    std::size_t tomography_total = 0;
    std::size_t tracking_total = 0;
    std::size_t total = 0;
    double tomography_per_update = 0.0;
    double tomography_per_gate = 0.0;
    /// Every update used exactly tomography_evals_per_update(optimizer).
    bool matches_table = false;
};

[[nodiscard]] EvalAudit eval_count_audit(const RunTrace &trace);

} // namespace tgopt
