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

#include "tgopt/rng.hpp"
#include "tgopt/types.hpp"

namespace tgopt {

inline constexpr std::size_t kMaxQubits = 20;

/**
 * Dense pure state over `num_qubits` qubits, 2^n complex amplitudes.
 * Qubit 0 is the most significant bit of the basis index.
 *
 * Gate application is in place on an exclusively owned value; the free
 * functions below take and return by value for callers that want the
 * functional form. Non-unitary 2x2 operators are accepted, in which case
 * the norm is whatever the operator makes it.
 */
class StateVector {
  public:
    /// |0...0>. Throws ConfigError unless 1 <= n <= kMaxQubits.
    static StateVector zero(std::size_t num_qubits);

    /// Throws ShapeError if amplitudes.size() != 2^num_qubits.
    StateVector(std::size_t num_qubits, std::vector<Complex> amplitudes);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] std::span<Complex> amplitudes() noexcept { return amps_; }
    [[nodiscard]] const Complex &operator[](std::size_t i) const { return amps_[i]; }

    void apply_1q(const Mat2 &op, std::size_t target);
    void apply_cz(std::size_t control, std::size_t target);

    [[nodiscard]] double norm_squared() const;
    [[nodiscard]] double norm() const;

  private:
    std::size_t num_qubits_;
    std::vector<Complex> amps_;
};

[[nodiscard]] StateVector init_zero(std::size_t num_qubits);
[[nodiscard]] StateVector apply_1q(StateVector state, const Mat2 &op,
                                   std::size_t target);
[[nodiscard]] StateVector apply_cz(StateVector state, std::size_t control,
                                   std::size_t target);

/// <a|b>, conjugate-linear in `a`. Throws ShapeError on size mismatch.
[[nodiscard]] Complex inner_product(const StateVector &a, const StateVector &b);

/// Haar-random pure state from normalized complex Gaussians.
[[nodiscard]] StateVector random_state(std::size_t num_qubits, Rng &rng);

} // namespace tgopt
