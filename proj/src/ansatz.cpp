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
#include "tgopt/ansatz.hpp"

#include <string>

#include "tgopt/errors.hpp"

namespace tgopt {

Ansatz::Ansatz(std::size_t num_qubits, std::size_t num_layers)
    : num_qubits_(num_qubits), num_layers_(num_layers) {
    if (num_qubits < 2 || num_qubits > kMaxQubits) {
        throw ConfigError("ansatz needs 2.." + std::to_string(kMaxQubits) +
                          " qubits, got " + std::to_string(num_qubits));
    }
    if (num_layers < 1) {
        throw ConfigError("ansatz needs at least one layer");
    }
    if ((num_qubits * num_layers) % 2 != 0) {
        throw ConfigError("gate count D = L*n = " +
                          std::to_string(num_qubits * num_layers) +
                          " must be even");
    }
    gate_step_.resize(num_gates());
    for (std::size_t layer = 0; layer < num_layers; ++layer) {
        for (std::size_t q = 0; q < num_qubits; ++q) {
            const std::size_t index = layer * num_qubits + q + 1;
            gate_step_[index - 1] = steps_.size();
            steps_.push_back({true, index, 0});
        }
        for (std::size_t start : {std::size_t{0}, std::size_t{1}}) {
            for (std::size_t q = start; q + 1 < num_qubits; q += 2) {
                steps_.push_back({false, q, q + 1});
            }
        }
    }
}

GateSite Ansatz::site(std::size_t index) const {
    if (index < 1 || index > num_gates()) {
        throw IndexError("gate index " + std::to_string(index) + " outside [1, " +
                         std::to_string(num_gates()) + "]");
    }
    return {index, (index - 1) / num_qubits_ + 1, (index - 1) % num_qubits_};
}

void Ansatz::check_params(const ParameterSet &params) const {
    if (params.size() != num_gates()) {
        throw ShapeError("parameter set has " + std::to_string(params.size()) +
                         " entries, ansatz has " + std::to_string(num_gates()) +
                         " gates");
    }
}

void Ansatz::apply_steps(StateVector &state, const ParameterSet &params,
                         std::size_t first, std::size_t last) const {
    for (std::size_t s = first; s < last; ++s) {
        const Step &step = steps_[s];
        if (step.is_gate) {
            state.apply_1q(gate_from_quaternion(params[step.a - 1]),
                           (step.a - 1) % num_qubits_);
        } else {
            state.apply_cz(step.a, step.b);
        }
    }
}

StateVector Ansatz::run(const ParameterSet &params) const {
    check_params(params);
    StateVector state = StateVector::zero(num_qubits_);
    apply_steps(state, params, 0, steps_.size());
    return state;
}

StateVector
Ansatz::run_with_replacements(const ParameterSet &params,
                              std::span<const Replacement> replacements) const {
    check_params(params);
    std::vector<const Mat2 *> custom(num_gates(), nullptr);
    for (const Replacement &r : replacements) {
        (void)site(r.gate_index);
        if (custom[r.gate_index - 1] != nullptr) {
            throw ParameterError("gate " + std::to_string(r.gate_index) +
                                 " replaced twice");
        }
        custom[r.gate_index - 1] = &r.op;
    }
    StateVector state = StateVector::zero(num_qubits_);
    for (const Step &step : steps_) {
        if (!step.is_gate) {
            state.apply_cz(step.a, step.b);
            continue;
        }
        const Mat2 *op = custom[step.a - 1];
        state.apply_1q(op != nullptr ? *op : gate_from_quaternion(params[step.a - 1]),
                       (step.a - 1) % num_qubits_);
    }
    return state;
}

std::vector<double> Ansatz::tomography_single(const ParameterSet &params,
                                              std::size_t index,
                                              std::span<const Mat2> ops,
                                              Evaluator &eval) const {
    check_params(params);
    const GateSite g = site(index);
    StateVector prefix = StateVector::zero(num_qubits_);
    apply_steps(prefix, params, 0, step_of(index));
    std::vector<double> values;
    values.reserve(ops.size());
    for (const Mat2 &op : ops) {
        StateVector s = prefix;
        s.apply_1q(op, g.qubit);
        apply_steps(s, params, step_of(index) + 1, steps_.size());
        values.push_back(eval.measure(s));
    }
    return values;
}

std::vector<double> Ansatz::tomography_pair(const ParameterSet &params,
                                            std::size_t later,
                                            std::span<const Mat2> ops_later,
                                            std::size_t earlier,
                                            std::span<const Mat2> ops_earlier,
                                            Evaluator &eval) const {
    check_params(params);
    const GateSite g_late = site(later);
    const GateSite g_early = site(earlier);
    if (later <= earlier) {
        throw ParameterError("tomography_pair expects later > earlier, got " +
                             std::to_string(later) + " and " +
                             std::to_string(earlier));
    }
    StateVector prefix = StateVector::zero(num_qubits_);
    apply_steps(prefix, params, 0, step_of(earlier));

    // States just before the later gate, one per earlier-gate insertion.
    std::vector<StateVector> middle;
    middle.reserve(ops_earlier.size());
    for (const Mat2 &op : ops_earlier) {
        StateVector s = prefix;
        s.apply_1q(op, g_early.qubit);
        apply_steps(s, params, step_of(earlier) + 1, step_of(later));
        middle.push_back(std::move(s));
    }

    std::vector<double> values;
    values.reserve(ops_later.size() * ops_earlier.size());
    for (const Mat2 &op : ops_later) {
        for (const StateVector &mid : middle) {
            StateVector s = mid;
            s.apply_1q(op, g_late.qubit);
            apply_steps(s, params, step_of(later) + 1, steps_.size());
            values.push_back(eval.measure(s));
        }
    }
    return values;
}

ParameterSet random_parameters(const Ansatz &ansatz, bool axis_only, Rng &rng) {
    ParameterSet params;
    params.reserve(ansatz.num_gates());
    for (std::size_t i = 0; i < ansatz.num_gates(); ++i) {
        params.push_back(axis_only ? random_axis(rng).as_quaternion()
                                   : random_quaternion(rng));
    }
    return params;
}

} // namespace tgopt
