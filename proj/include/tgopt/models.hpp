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
#include <filesystem>
#include <vector>

#include <Eigen/Dense>

#include "tgopt/pauli.hpp"
#include "tgopt/statevector.hpp"
#include "tgopt/types.hpp"

namespace tgopt {

struct TfimParams {
    std::size_t n = 2;
    double J = 1.0;
    double h = 1.0;
};

/// -J sum_i Z_i Z_{i+1} - h sum_j X_j on an open chain. Throws ConfigError
/// for n < 2 or non-finite couplings.
[[nodiscard]] PauliObservable tfim_hamiltonian(const TfimParams &p);

/// Two-site Hubbard dimer; four spin orbitals.
struct FermiHubbardParams {
    double t = 1.0;
    double U = 1.0;
};

inline constexpr std::size_t kHubbardQubits = 4;

/// Qubit of spin orbital (site, spin), spin 0 = up.
[[nodiscard]] constexpr std::size_t hubbard_qubit(std::size_t site, std::size_t spin) {
    return 2 * site + spin;
}

/// -t sum_s (a+_{0s} a_{1s} + a+_{1s} a_{0s}) + U sum_i n_{i,up} n_{i,down}
/// under the Jordan-Wigner mapping, with |c| < 1e-12 terms dropped.
[[nodiscard]] PauliObservable fermi_hubbard_hamiltonian(const FermiHubbardParams &p);

namespace jw {

/// Pauli string with a complex weight, used for operator algebra before
/// the result is known to be Hermitian.
struct Term {
    std::vector<Pauli> ops;
    Complex coefficient;
};

/// Sum of terms; like words are merged by `simplify`.
struct PauliSum {
    std::size_t num_qubits = 0;
    std::vector<Term> terms;
};

[[nodiscard]] PauliSum multiply(const PauliSum &a, const PauliSum &b);
[[nodiscard]] PauliSum add(const PauliSum &a, const PauliSum &b);
[[nodiscard]] PauliSum scale(const PauliSum &a, Complex s);
/// Merges like words and drops terms with |c| < tol.
[[nodiscard]] PauliSum simplify(const PauliSum &a, double tol = 1e-12);

/// a+_j = (X_j + i Y_j)/2 prod_{r<j} Z_r; the occupied orbital is |0>.
[[nodiscard]] PauliSum creation(std::size_t mode, std::size_t num_qubits);
/// a_j = (X_j - i Y_j)/2 prod_{r<j} Z_r.
[[nodiscard]] PauliSum annihilation(std::size_t mode, std::size_t num_qubits);

/// Throws CapacityError above kMaxDenseQubits.
[[nodiscard]] Eigen::MatrixXcd to_dense(const PauliSum &sum);

/// Real observable from a sum whose coefficients are real within `tol`;
/// throws ParameterError otherwise.
[[nodiscard]] PauliObservable to_observable(const PauliSum &sum, double tol = 1e-12);

} // namespace jw

/// Reads a Hamiltonian file. Throws IoError if it cannot be opened and
/// ParseError for malformed content.
[[nodiscard]] PauliObservable load_hamiltonian_file(const std::filesystem::path &path);

/// Haar-random target for the state-preparation task.
[[nodiscard]] StateVector make_target_state(std::size_t num_qubits, std::uint64_t seed);

} // namespace tgopt
