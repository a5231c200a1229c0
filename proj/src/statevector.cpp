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
#include "tgopt/statevector.hpp"

#include <cmath>
#include <string>

#include "tgopt/errors.hpp"
#include "tgopt/kernels.hpp"

namespace tgopt {

namespace {
void check_qubit_count(std::size_t n) {
    if (n < 1 || n > kMaxQubits) {
        throw ConfigError("qubit count " + std::to_string(n) +
                          " outside [1, " + std::to_string(kMaxQubits) + "]");
    }
}

void check_index(std::size_t q, std::size_t n) {
    if (q >= n) {
        throw IndexError("qubit index " + std::to_string(q) +
                         " out of range for " + std::to_string(n) + " qubits");
    }
}
} // namespace

StateVector StateVector::zero(std::size_t num_qubits) {
    check_qubit_count(num_qubits);
    std::vector<Complex> amps(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
    amps[0] = 1.0;
    return {num_qubits, std::move(amps)};
}

StateVector::StateVector(std::size_t num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
    check_qubit_count(num_qubits);
    if (amps_.size() != (std::size_t{1} << num_qubits)) {
        throw ShapeError("amplitude count " + std::to_string(amps_.size()) +
                         " does not match 2^" + std::to_string(num_qubits));
    }
}

void StateVector::apply_1q(const Mat2 &op, std::size_t target) {
    check_index(target, num_qubits_);
    kernels::omp::apply_1q(amps_, num_qubits_, target, op);
}

void StateVector::apply_cz(std::size_t control, std::size_t target) {
    check_index(control, num_qubits_);
    check_index(target, num_qubits_);
    if (control == target) {
        throw IndexError("CZ control and target coincide");
    }
    kernels::omp::apply_cz(amps_, num_qubits_, control, target);
}

double StateVector::norm_squared() const {
    return kernels::omp::norm_squared(amps_);
}

double StateVector::norm() const { return std::sqrt(norm_squared()); }

StateVector init_zero(std::size_t num_qubits) {
    return StateVector::zero(num_qubits);
}

StateVector apply_1q(StateVector state, const Mat2 &op, std::size_t target) {
    state.apply_1q(op, target);
    return state;
}

StateVector apply_cz(StateVector state, std::size_t control, std::size_t target) {
    state.apply_cz(control, target);
    return state;
}

Complex inner_product(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw ShapeError("inner product of " + std::to_string(a.num_qubits()) +
                         "- and " + std::to_string(b.num_qubits()) +
                         "-qubit states");
    }
    return kernels::omp::inner_product(a.amplitudes(), b.amplitudes());
}

StateVector random_state(std::size_t num_qubits, Rng &rng) {
    check_qubit_count(num_qubits);
    std::vector<Complex> amps(std::size_t{1} << num_qubits);
    double norm2 = 0.0;
    for (Complex &a : amps) {
        const double re = rng.normal();
        const double im = rng.normal();
        a = {re, im};
        norm2 += re * re + im * im;
    }
    const double scale = 1.0 / std::sqrt(norm2);
    for (Complex &a : amps) {
        a *= scale;
    }
    return {num_qubits, std::move(amps)};
}

} // namespace tgopt
