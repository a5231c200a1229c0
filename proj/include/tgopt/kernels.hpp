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

/**
 * @file kernels.hpp
 * Statevector kernels in two flavours with identical signatures:
 *
 *  - `serial`: straightforward loops, kept as the reference implementation
 *    for tests and benchmarks.
 *  - `omp`: the same loops under OpenMP worksharing. Regions only fork when
 *    the loop has at least `kParallelThreshold` iterations, so the small
 *    states used inside the optimizers stay on the calling thread.
 *
 * Qubit 0 is the most significant bit of the basis index.
 */

#include <cstddef>
#include <cstdint>
#include <span>

#include "tgopt/types.hpp"

namespace tgopt::kernels {

inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 13U;

/// Bit masks of a Pauli string: X/Y positions flip, Z/Y positions carry a
/// sign, and each Y contributes a factor i.
struct PauliMasks {
    std::uint64_t flip = 0;
    std::uint64_t phase = 0;
    unsigned num_y = 0;
};

[[nodiscard]] inline constexpr std::uint64_t bit_of(std::size_t num_qubits,
                                                    std::size_t qubit) {
    return std::uint64_t{1} << (num_qubits - 1 - qubit);
}

namespace serial {
void apply_1q(std::span<Complex> amps, std::size_t num_qubits,
              std::size_t target, const Mat2 &op);
void apply_cz(std::span<Complex> amps, std::size_t num_qubits,
              std::size_t control, std::size_t target);
Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);
double norm_squared(std::span<const Complex> amps);
/// <psi| P |psi> for an unnormalized psi.
Complex pauli_expectation(std::span<const Complex> amps, const PauliMasks &p);
} // namespace serial

namespace omp {
void apply_1q(std::span<Complex> amps, std::size_t num_qubits,
              std::size_t target, const Mat2 &op);
void apply_cz(std::span<Complex> amps, std::size_t num_qubits,
              std::size_t control, std::size_t target);
Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);
double norm_squared(std::span<const Complex> amps);
Complex pauli_expectation(std::span<const Complex> amps, const PauliMasks &p);
} // namespace omp

} // namespace tgopt::kernels
