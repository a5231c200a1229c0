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
#include "tgopt/trace.hpp"

#include "tgopt/errors.hpp"

namespace tgopt {

std::string_view to_string(OptimizerKind kind) {
    switch (kind) {
    case OptimizerKind::Fraxis:
        return "fraxis";
    case OptimizerKind::Fqs:
        return "fqs";
    case OptimizerKind::Tgf:
        return "tgf";
    case OptimizerKind::Tgfqs:
        return "tgfqs";
    }
    return "?";
}

OptimizerKind parse_optimizer(std::string_view name) {
    for (OptimizerKind k : {OptimizerKind::Fraxis, OptimizerKind::Fqs,
                            OptimizerKind::Tgf, OptimizerKind::Tgfqs}) {
        if (to_string(k) == name) {
            return k;
        }
    }
    throw ConfigError("unknown optimizer '" + std::string(name) + "'");
}

RunState start_run(OptimizerKind kind, const Ansatz &ansatz, ParameterSet initial,
                   Evaluator &eval) {
    ansatz.check_params(initial);
    RunState run;
    run.params = std::move(initial);
    run.trace.optimizer = kind;
    const StateVector state = ansatz.run(run.params);
    const std::size_t before = eval.count();
    run.tracked_cost = eval.measure(state);
    UpdateRecord first;
    first.cost = run.tracked_cost;
    first.exact_cost = eval.exact(state);
    first.accepted = true;
    first.tracking_evals = eval.count() - before;
    first.cumulative_evals = first.tracking_evals;
    run.trace.records.push_back(first);
    run.trace.iteration_costs.push_back(first.exact_cost);
    return run;
}

void commit_update(const Ansatz &ansatz, RunState &run, Evaluator &eval,
                   ParameterSet candidate, std::size_t gate_d, std::size_t gate_k,
                   std::size_t tomography_evals) {
    const StateVector state = ansatz.run(candidate);
    const std::size_t before = eval.count();
    const double measured = eval.measure(state);
    UpdateRecord rec;
    rec.update_index = run.trace.records.size();
    rec.gate_d = gate_d;
    rec.gate_k = gate_k;
    rec.tomography_evals = tomography_evals;
    rec.tracking_evals = eval.count() - before;
    rec.cumulative_evals = run.trace.records.back().cumulative_evals +
                           rec.tomography_evals + rec.tracking_evals;
    rec.accepted = measured < run.tracked_cost;
    if (rec.accepted) {
        run.params = std::move(candidate);
        run.tracked_cost = measured;
        rec.exact_cost = eval.exact(state);
    } else {
        rec.exact_cost = run.trace.records.back().exact_cost;
    }
    rec.cost = run.tracked_cost;
    run.trace.records.push_back(rec);
}

EvalAudit eval_count_audit(const RunTrace &trace) {
    EvalAudit audit;
    audit.matches_table = true;
    const std::size_t expected = tomography_evals_per_update(trace.optimizer);
    for (std::size_t i = 0; i < trace.records.size(); ++i) {
        const UpdateRecord &r = trace.records[i];
        audit.tracking_total += r.tracking_evals;
        if (i == 0) {
            continue;
        }
        ++audit.updates;
        audit.tomography_total += r.tomography_evals;
        audit.matches_table = audit.matches_table && r.tomography_evals == expected;
    }
    audit.total = audit.tomography_total + audit.tracking_total;
    if (audit.updates > 0) {
        audit.tomography_per_update = static_cast<double>(audit.tomography_total) /
                                      static_cast<double>(audit.updates);
        audit.tomography_per_gate =
            audit.tomography_per_update /
            static_cast<double>(gates_per_update(trace.optimizer));
    }
    return audit;
}

} // namespace tgopt
