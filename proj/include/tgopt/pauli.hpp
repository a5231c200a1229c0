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
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "tgopt/kernels.hpp"
#include "tgopt/rng.hpp"
#include "tgopt/statevector.hpp"

namespace tgopt {

enum class Pauli : std::uint8_t { I, X, Y, Z };

/// Real-weighted tensor product of single-qubit Paulis.
struct PauliString {
    std::vector<Pauli> ops;
    double coefficient = 1.0;

    /// Parses a word over {I,X,Y,Z}; throws ParameterError on other letters.
    static PauliString from_word(std::string_view word, double coefficient);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return ops.size(); }
    [[nodiscard]] std::string word() const;
    [[nodiscard]] kernels::PauliMasks masks() const;
    [[nodiscard]] bool is_identity() const;
};

/**
 * Hermitian observable sum_k c_k P_k. Terms with identical words are merged
 * on construction (first-appearance order is kept); zero-weight terms are
 * kept unless `pruned` is called.
 */
class PauliObservable {
  public:
    PauliObservable(std::size_t num_qubits, std::vector<PauliString> terms);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] const std::vector<PauliString> &terms() const noexcept {
        return terms_;
    }

    /// Copy without terms whose |coefficient| < tol.
    [[nodiscard]] PauliObservable pruned(double tol) const;

  private:
    std::size_t num_qubits_;
    std::vector<PauliString> terms_;
};

/// Exact mode or a fixed number of shots per Pauli term.
struct ShotConfig {
    std::optional<std::uint32_t> shots_per_term;
    std::uint64_t rng_seed = 0;

    static ShotConfig exact() { return {}; }
    static ShotConfig with_shots(std::uint32_t shots, std::uint64_t seed);

    [[nodiscard]] bool is_exact() const noexcept { return !shots_per_term; }
};

/// Tolerated imaginary residue of <psi|M|psi>.
inline constexpr double kImagTolerance = 1e-10;

/// sum_k c_k <psi|P_k|psi>. The state need not be normalized.
[[nodiscard]] double expectation_exact(const PauliObservable &obs,
                                       const StateVector &state);

/**
 * Finite-shot estimate. Each non-identity term is sampled independently:
 * with p = (1 + <P>/<psi|psi>)/2, `shots` +/-1 outcomes are drawn and the
 * term contributes c * <psi|psi> * mean(outcome). Identity terms are exact.
 */
[[nodiscard]] double expectation_shots(const PauliObservable &obs,
                                       const StateVector &state,
                                       std::uint32_t shots, Rng &rng);

inline constexpr std::size_t kMaxDenseQubits = 12;

/// Dense 2^n x 2^n matrix. Throws CapacityError above kMaxDenseQubits.
[[nodiscard]] Eigen::MatrixXcd to_dense(const PauliObservable &obs);

/// Lowest eigenvalue of the dense matrix. Observables whose terms all carry
/// an even number of Y factors are real symmetric and solved in real
/// arithmetic.
[[nodiscard]] double ground_energy(const PauliObservable &obs);

/**
 * Reads the text Hamiltonian format:
 *
 *     # comment
 *     qubits <n>
 *     <coefficient> <pauli-word>
 *     ...
 *
 * Blank lines and `#` lines are skipped anywhere. Duplicate words merge.
 */
[[nodiscard]] PauliObservable parse_hamiltonian(std::istream &in);

void write_hamiltonian(std::ostream &out, const PauliObservable &obs);

} // namespace tgopt
