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
#include "tgopt/cost.hpp"

#include "tgopt/errors.hpp"

namespace tgopt {

std::size_t CostFunction::num_qubits() const {
    return std::visit(
        [](const auto &c) -> std::size_t {
            if constexpr (std::is_same_v<std::decay_t<decltype(c)>, PauliObservable>) {
                return c.num_qubits();
            } else {
                return c.target.num_qubits();
            }
        },
        impl_);
}

double CostFunction::exact(const StateVector &state) const {
    if (const auto *obs = std::get_if<PauliObservable>(&impl_)) {
        return expectation_exact(*obs, state);
    }
    const auto &target = std::get<InfidelityCost>(impl_).target;
    if (target.num_qubits() != state.num_qubits()) {
        throw ShapeError("infidelity target and state differ in qubit count");
    }
    // <psi|(I - |t><t|)|psi>; reduces to 1 - |<t|psi>|^2 for unit psi.
    return state.norm_squared() - std::norm(inner_product(target, state));
}

double CostFunction::sampled(const StateVector &state, std::uint32_t shots,
                             Rng &rng) const {
    const auto *obs = std::get_if<PauliObservable>(&impl_);
    if (obs == nullptr) {
        throw ConfigError("infidelity cost supports exact mode only");
    }
    return expectation_shots(*obs, state, shots, rng);
}

CostFunction infidelity_observable(StateVector target) {
    const double n2 = target.norm_squared();
    if (std::abs(n2 - 1.0) > 1e-10) {
        throw ParameterError("infidelity target must be a unit vector");
    }
    return CostFunction(InfidelityCost{std::move(target)});
}

Evaluator::Evaluator(const CostFunction &cost, ShotConfig shots)
    : cost_(&cost), shots_(shots) {
    if (!shots_.is_exact() && !cost.supports_shots()) {
        throw ConfigError("shot mode requested for a cost without a shot model");
    }
}

double Evaluator::measure(const StateVector &state) {
    const std::size_t id = count_++;
    if (shots_.is_exact()) {
        return cost_->exact(state);
    }
    Rng rng(shots_.rng_seed, Stream::Shots, id);
    return cost_->sampled(state, *shots_.shots_per_term, rng);
}

} // namespace tgopt
