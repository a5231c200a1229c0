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
#include <variant>

#include "tgopt/pauli.hpp"
#include "tgopt/statevector.hpp"

namespace tgopt {

/// Projector cost M = I - |target><target|, i.e. the infidelity.
struct InfidelityCost {
    StateVector target;
};

/**
 * Anything the optimizers can minimize: the expectation <psi|M|psi> of a
 * Hermitian M on a (possibly unnormalized) state.
 */
class CostFunction {
  public:
    explicit CostFunction(PauliObservable obs) : impl_(std::move(obs)) {}
    explicit CostFunction(InfidelityCost infidelity)
        : impl_(std::move(infidelity)) {}

    [[nodiscard]] std::size_t num_qubits() const;
    [[nodiscard]] bool supports_shots() const noexcept {
        return std::holds_alternative<PauliObservable>(impl_);
    }

    [[nodiscard]] double exact(const StateVector &state) const;

    /// Throws ConfigError for costs without a shot model.
    [[nodiscard]] double sampled(const StateVector &state, std::uint32_t shots,
                                 Rng &rng) const;

    [[nodiscard]] const PauliObservable *observable() const noexcept {
        return std::get_if<PauliObservable>(&impl_);
    }

  private:
    std::variant<PauliObservable, InfidelityCost> impl_;
};

[[nodiscard]] CostFunction infidelity_observable(StateVector target);

/**
 * Counts circuit evaluations and applies the shot model. In shot mode,
 * evaluation number k draws from its own stream derived from
 * (rng_seed, k), so results do not depend on evaluation scheduling.
 */
class Evaluator {
  public:
    /// Throws ConfigError if shots are requested for a cost without a shot model.
    Evaluator(const CostFunction &cost, ShotConfig shots);

    /// One counted circuit evaluation.
    double measure(const StateVector &state);

    /// Uncounted exact value, for bookkeeping only.
    [[nodiscard]] double exact(const StateVector &state) const {
        return cost_->exact(state);
    }

    [[nodiscard]] std::size_t count() const noexcept { return count_; }
    [[nodiscard]] const CostFunction &cost() const noexcept { return *cost_; }
    [[nodiscard]] const ShotConfig &shots() const noexcept { return shots_; }

  private:
    const CostFunction *cost_;
    ShotConfig shots_;
    std::size_t count_ = 0;
};

} // namespace tgopt
