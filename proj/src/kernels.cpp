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
#include "tgopt/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace tgopt::kernels {
namespace {

// Index of the i-th pair partner with a zero at bit `shift`.
inline std::size_t insert_zero(std::size_t i, std::size_t shift,
                               std::size_t low_mask) {
    return ((i >> shift) << (shift + 1)) | (i & low_mask);
}

inline Complex i_power(unsigned k) {
    switch (k % 4U) {
    case 0:
        return {1.0, 0.0};
    case 1:
        return {0.0, 1.0};
    case 2:
        return {-1.0, 0.0};
    default:
        return {0.0, -1.0};
    }
}

inline double parity_sign(std::uint64_t x) {
    return (std::popcount(x) & 1) != 0 ? -1.0 : 1.0;
}

} // namespace

namespace serial {

void apply_1q(std::span<Complex> amps, std::size_t num_qubits,
              std::size_t target, const Mat2 &op) {
    const std::size_t shift = num_qubits - 1 - target;
    const std::size_t stride = std::size_t{1} << shift;
    const std::size_t half = amps.size() / 2;
    for (std::size_t i = 0; i < half; ++i) {
        const std::size_t i0 = insert_zero(i, shift, stride - 1);
        const std::size_t i1 = i0 | stride;
        const Complex a0 = amps[i0];
        const Complex a1 = amps[i1];
        amps[i0] = op[0] * a0 + op[1] * a1;
        amps[i1] = op[2] * a0 + op[3] * a1;
    }
}

void apply_cz(std::span<Complex> amps, std::size_t num_qubits,
              std::size_t control, std::size_t target) {
    const std::uint64_t mask =
        bit_of(num_qubits, control) | bit_of(num_qubits, target);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & mask) == mask) {
            amps[i] = -amps[i];
        }
    }
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
    Complex sum{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum += std::conj(a[i]) * b[i];
    }
    return sum;
}

double norm_squared(std::span<const Complex> amps) {
    double sum = 0.0;
    for (const Complex &a : amps) {
        sum += std::norm(a);
    }
    return sum;
}

Complex pauli_expectation(std::span<const Complex> amps, const PauliMasks &p) {
    Complex sum{0.0, 0.0};
    for (std::size_t i = 0; i < amps.size(); ++i) {
        sum += std::conj(amps[i ^ p.flip]) * amps[i] * parity_sign(i & p.phase);
    }
    return i_power(p.num_y) * sum;
}

} // namespace serial

namespace omp {

void apply_1q(std::span<Complex> amps, std::size_t num_qubits,
              std::size_t target, const Mat2 &op) {
    const std::size_t shift = num_qubits - 1 - target;
    const std::size_t stride = std::size_t{1} << shift;
    const auto half = static_cast<std::int64_t>(amps.size() / 2);
    Complex *data = amps.data();
#pragma omp parallel for if (half >= static_cast <std::int64_t>(kParallelThreshold))
    for (std::int64_t i = 0; i < half; ++i) {
        const std::size_t i0 =
            insert_zero(static_cast<std::size_t>(i), shift, stride - 1);
        const std::size_t i1 = i0 | stride;
        const Complex a0 = data[i0];
        const Complex a1 = data[i1];
        data[i0] = op[0] * a0 + op[1] * a1;
        data[i1] = op[2] * a0 + op[3] * a1;
    }
}

void apply_cz(std::span<Complex> amps, std::size_t num_qubits,
              std::size_t control, std::size_t target) {
    // Only the quarter of the indices with both bits set is visited.
    const std::size_t b_hi = num_qubits - 1 - std::min(control, target);
    const std::size_t b_lo = num_qubits - 1 - std::max(control, target);
    const std::uint64_t mask = (std::uint64_t{1} << b_hi) | (std::uint64_t{1} << b_lo);
    const auto quarter = static_cast<std::int64_t>(amps.size() / 4);
    Complex *data = amps.data();
#pragma omp parallel for if (quarter >= static_cast <std::int64_t>(kParallelThreshold))
    for (std::int64_t i = 0; i < quarter; ++i) {
        std::size_t idx = insert_zero(static_cast<std::size_t>(i), b_lo,
                                      (std::size_t{1} << b_lo) - 1);
        idx = insert_zero(idx, b_hi, (std::size_t{1} << b_hi) - 1);
        idx |= mask;
        data[idx] = -data[idx];
    }
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
    double re = 0.0;
    double im = 0.0;
    const auto size = static_cast<std::int64_t>(a.size());
    const Complex *pa = a.data();
    const Complex *pb = b.data();
#pragma omp parallel for reduction(+ : re, im) if (size >= static_cast <std::int64_t>(kParallelThreshold))
    for (std::int64_t i = 0; i < size; ++i) {
        const Complex term = std::conj(pa[i]) * pb[i];
        re += term.real();
        im += term.imag();
    }
    return {re, im};
}

double norm_squared(std::span<const Complex> amps) {
    double sum = 0.0;
    const auto size = static_cast<std::int64_t>(amps.size());
    const Complex *data = amps.data();
#pragma omp parallel for reduction(+ : sum) if (size >= static_cast <std::int64_t>(kParallelThreshold))
    for (std::int64_t i = 0; i < size; ++i) {
        sum += std::norm(data[i]);
    }
    return sum;
}

Complex pauli_expectation(std::span<const Complex> amps, const PauliMasks &p) {
    double re = 0.0;
    double im = 0.0;
    const auto size = static_cast<std::int64_t>(amps.size());
    const Complex *data = amps.data();
#pragma omp parallel for reduction(+ : re, im) if (size >= static_cast <std::int64_t>(kParallelThreshold))
    for (std::int64_t i = 0; i < size; ++i) {
        const auto u = static_cast<std::uint64_t>(i);
        const Complex term =
            std::conj(data[u ^ p.flip]) * data[u] * parity_sign(u & p.phase);
        re += term.real();
        im += term.imag();
    }
    return i_power(p.num_y) * Complex{re, im};
}

} // namespace omp
} // namespace tgopt::kernels
