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

#include <array>
#include <cstddef>
#include <span>

#include "tgopt/ansatz.hpp"
#include "tgopt/cost.hpp"
#include "tgopt/trace.hpp"

namespace tgopt {

/**
 * Real symmetric local model v^T S v with dim 3 (axis, basis indices 1..3)
 * or 4 (quaternion, indices 0..3). Entries are stored row-major with
 * stride `dim`.
 */
struct QuadraticForm {
    std::size_t dim = 4;
    std::array<double, 16> entries{};

    [[nodiscard]] double at(std::size_t i, std::size_t j) const {
        return entries[i * dim + j];
    }
    double &at(std::size_t i, std::size_t j) { return entries[i * dim + j]; }

    [[nodiscard]] double evaluate(std::span<const double> v) const;
};

struct EigenPair {
    double value = 0.0;
    std::array<double, 4> vector{}; ///< first `dim` entries used
};

/**
 * Lowest eigenpair of a symmetric 3x3 or 4x4 matrix by cyclic Jacobi
 * rotations. Degenerate minima resolve to the lowest-index eigenvector of
 * the sorted decomposition; the vector's first nonzero entry is positive.
 */
[[nodiscard]] EigenPair min_eigvec(const QuadraticForm &form);

/// All eigenpairs, ascending.
[[nodiscard]] std::array<EigenPair, 4> symmetric_eigen(const QuadraticForm &form);

/// Axis model of gate `index`: 3 basis + 3 pair insertions, 6 evaluations.
[[nodiscard]] QuadraticForm build_fraxis_matrix(const Ansatz &ansatz,
                                                const ParameterSet &params,
                                                std::size_t index, Evaluator &eval);

/// Quaternion model of gate `index`: 4 basis + 6 pair insertions, 10 evaluations.
[[nodiscard]] QuadraticForm build_fqs_matrix(const Ansatz &ansatz,
                                             const ParameterSet &params,
                                             std::size_t index, Evaluator &eval);

/// One pass over gates 1..D, each replaced by the minimizing eigenvector
/// when that lowers the tracked cost.
void single_gate_sweep(OptimizerKind kind, const Ansatz &ansatz, RunState &run,
                       Evaluator &eval);

} // namespace tgopt
