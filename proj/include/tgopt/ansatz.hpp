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
#include <span>
#include <vector>

#include "tgopt/cost.hpp"
#include "tgopt/gates.hpp"
#include "tgopt/statevector.hpp"

namespace tgopt {

/// One quaternion per parameterized gate, indexed 0..D-1 for gates 1..D.
using ParameterSet = std::vector<UnitQuaternion>;

/// A parameterized gate position. `index` is 1-based in layer-major,
/// top-to-bottom order.
struct GateSite {
    std::size_t index;
    std::size_t layer; ///< 1-based
    std::size_t qubit; ///< 0-based
};

/// Operator substituted for a parameterized gate.
struct Replacement {
    std::size_t gate_index; ///< 1-based
    Mat2 op;
};

/**
 * Hardware-efficient ansatz: each of L layers applies one parameterized
 * gate per qubit followed by an open CZ chain, issued as CZ(0,1), CZ(2,3),
 * ... then CZ(1,2), CZ(3,4), ...
 */
class Ansatz {
  public:
    /// Throws ConfigError unless n >= 2, L >= 1 and n*L is even.
    Ansatz(std::size_t num_qubits, std::size_t num_layers);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t num_layers() const noexcept { return num_layers_; }
    [[nodiscard]] std::size_t num_gates() const noexcept {
        return num_qubits_ * num_layers_;
    }

    /// Throws IndexError unless 1 <= index <= D.
    [[nodiscard]] GateSite site(std::size_t index) const;

    [[nodiscard]] StateVector run(const ParameterSet &params) const;

    /// As `run`, with the listed gates replaced. Throws ParameterError for
    /// duplicate sites.
    [[nodiscard]] StateVector
    run_with_replacements(const ParameterSet &params,
                          std::span<const Replacement> replacements) const;

    /**
     * Evaluates the cost with gate `index` replaced by each of `ops`; the
     * circuit prefix is simulated once. Counts ops.size() evaluations.
     */
    [[nodiscard]] std::vector<double>
    tomography_single(const ParameterSet &params, std::size_t index,
                      std::span<const Mat2> ops, Evaluator &eval) const;

    /**
     * Evaluates the cost for every combination of an operator at gate
     * `later` (from `ops_later`) and one at gate `earlier` (from
     * `ops_earlier`). Result is row-major [i_later][i_earlier]. Counts
     * ops_later.size() * ops_earlier.size() evaluations.
     */
    [[nodiscard]] std::vector<double>
    tomography_pair(const ParameterSet &params, std::size_t later,
                    std::span<const Mat2> ops_later, std::size_t earlier,
                    std::span<const Mat2> ops_earlier, Evaluator &eval) const;

    void check_params(const ParameterSet &params) const;

  private:
    struct Step {
        bool is_gate;
        std::size_t a; ///< gate index (1-based) or CZ qubit
        std::size_t b; ///< CZ second qubit
    };

    // Applies steps [first, last) with the gates taken from `params`.
    void apply_steps(StateVector &state, const ParameterSet &params,
                     std::size_t first, std::size_t last) const;
    [[nodiscard]] std::size_t step_of(std::size_t gate_index) const {
        return gate_step_[gate_index - 1];
    }

    std::size_t num_qubits_;
    std::size_t num_layers_;
    std::vector<Step> steps_;
    std::vector<std::size_t> gate_step_;
};

/// Uniformly random parameters: quaternions on S^3, or (0, n) with n on S^2
/// when `axis_only`.
[[nodiscard]] ParameterSet random_parameters(const Ansatz &ansatz, bool axis_only,
                                             Rng &rng);

} // namespace tgopt
