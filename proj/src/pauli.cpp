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
#include "tgopt/pauli.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "tgopt/errors.hpp"

namespace tgopt {

namespace {

Complex i_power(unsigned k) {
    constexpr Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[k % 4U];
}

double sign_of(std::uint64_t x) { return (std::popcount(x) & 1) != 0 ? -1.0 : 1.0; }

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

} // namespace

PauliString PauliString::from_word(std::string_view word, double coefficient) {
    PauliString p;
    p.coefficient = coefficient;
    p.ops.reserve(word.size());
    for (char c : word) {
        switch (c) {
        case 'I':
            p.ops.push_back(Pauli::I);
            break;
        case 'X':
            p.ops.push_back(Pauli::X);
            break;
        case 'Y':
            p.ops.push_back(Pauli::Y);
            break;
        case 'Z':
            p.ops.push_back(Pauli::Z);
            break;
        default:
            throw ParameterError(std::string("invalid Pauli letter '") + c + "'");
        }
    }
    return p;
}

std::string PauliString::word() const {
    std::string out;
    out.reserve(ops.size());
    for (Pauli p : ops) {
        out.push_back("IXYZ"[static_cast<int>(p)]);
    }
    return out;
}

kernels::PauliMasks PauliString::masks() const {
    kernels::PauliMasks m;
    const std::size_t n = ops.size();
    for (std::size_t q = 0; q < n; ++q) {
        const std::uint64_t bit = kernels::bit_of(n, q);
        switch (ops[q]) {
        case Pauli::I:
            break;
        case Pauli::X:
            m.flip |= bit;
            break;
        case Pauli::Y:
            m.flip |= bit;
            m.phase |= bit;
            ++m.num_y;
            break;
        case Pauli::Z:
            m.phase |= bit;
            break;
        }
    }
    return m;
}

bool PauliString::is_identity() const {
    for (Pauli p : ops) {
        if (p != Pauli::I) {
            return false;
        }
    }
    return true;
}

PauliObservable::PauliObservable(std::size_t num_qubits,
                                 std::vector<PauliString> terms)
    : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw ConfigError("observable qubit count " + std::to_string(num_qubits) +
                          " out of range");
    }
    std::unordered_map<std::string, std::size_t> slot;
    for (PauliString &t : terms) {
        if (t.num_qubits() != num_qubits) {
            throw ShapeError("Pauli word '" + t.word() + "' has length " +
                             std::to_string(t.num_qubits()) + ", expected " +
                             std::to_string(num_qubits));
        }
        if (!std::isfinite(t.coefficient)) {
            throw ParameterError("non-finite coefficient on '" + t.word() + "'");
        }
        auto [it, inserted] = slot.try_emplace(t.word(), terms_.size());
        if (inserted) {
            terms_.push_back(std::move(t));
        } else {
            terms_[it->second].coefficient += t.coefficient;
        }
    }
}

PauliObservable PauliObservable::pruned(double tol) const {
    std::vector<PauliString> kept;
    for (const PauliString &t : terms_) {
        if (std::abs(t.coefficient) >= tol) {
            kept.push_back(t);
        }
    }
    return {num_qubits_, std::move(kept)};
}

ShotConfig ShotConfig::with_shots(std::uint32_t shots, std::uint64_t seed) {
    if (shots < 1 || shots >= (std::uint32_t{1} << 31U)) {
        throw ConfigError("shots per term must lie in [1, 2^31)");
    }
    return {shots, seed};
}

double expectation_exact(const PauliObservable &obs, const StateVector &state) {
    if (obs.num_qubits() != state.num_qubits()) {
        throw ShapeError("observable on " + std::to_string(obs.num_qubits()) +
                         " qubits applied to " +
                         std::to_string(state.num_qubits()) + "-qubit state");
    }
    Complex total{0.0, 0.0};
    double norm2 = -1.0;
    for (const PauliString &t : obs.terms()) {
        if (t.is_identity()) {
            if (norm2 < 0.0) {
                norm2 = state.norm_squared();
            }
            total += t.coefficient * norm2;
            continue;
        }
        total += t.coefficient *
                 kernels::omp::pauli_expectation(state.amplitudes(), t.masks());
    }
    if (std::abs(total.imag()) > kImagTolerance * std::max(1.0, std::abs(total.real()))) {
        throw std::logic_error("expectation value has imaginary part " +
                               std::to_string(total.imag()));
    }
    return total.real();
}

double expectation_shots(const PauliObservable &obs, const StateVector &state,
                         std::uint32_t shots, Rng &rng) {
    if (obs.num_qubits() != state.num_qubits()) {
        throw ShapeError("observable/state qubit count mismatch");
    }
    const double norm2 = state.norm_squared();
    double total = 0.0;
    for (const PauliString &t : obs.terms()) {
        if (t.is_identity()) {
            total += t.coefficient * norm2;
            continue;
        }
        const double exact =
            kernels::omp::pauli_expectation(state.amplitudes(), t.masks()).real() /
            norm2;
        const double p_plus = std::clamp(0.5 * (1.0 + exact), 0.0, 1.0);
        const auto plus = rng.bernoulli_count(shots, p_plus);
        const double mean =
            (2.0 * static_cast<double>(plus) - static_cast<double>(shots)) /
            static_cast<double>(shots);
        total += t.coefficient * norm2 * mean;
    }
    return total;
}

Eigen::MatrixXcd to_dense(const PauliObservable &obs) {
    const std::size_t n = obs.num_qubits();
    if (n > kMaxDenseQubits) {
        throw CapacityError("dense matrix requested for " + std::to_string(n) +
                            " qubits (limit " + std::to_string(kMaxDenseQubits) +
                            ")");
    }
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const PauliString &t : obs.terms()) {
        const auto masks = t.masks();
        const Complex phase = i_power(masks.num_y) * t.coefficient;
        for (Eigen::Index col = 0; col < dim; ++col) {
            const auto u = static_cast<std::uint64_t>(col);
            m(static_cast<Eigen::Index>(u ^ masks.flip), col) +=
                phase * sign_of(u & masks.phase);
        }
    }
    return m;
}

double ground_energy(const PauliObservable &obs) {
    const std::size_t n = obs.num_qubits();
    if (n > kMaxDenseQubits) {
        throw CapacityError("dense ground energy requested for " +
                            std::to_string(n) + " qubits (limit " +
                            std::to_string(kMaxDenseQubits) + ")");
    }
    bool real = true;
    for (const PauliString &t : obs.terms()) {
        real = real && (t.masks().num_y % 2 == 0);
    }
    if (real) {
        const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
        for (const PauliString &t : obs.terms()) {
            const auto masks = t.masks();
            const double phase = i_power(masks.num_y).real() * t.coefficient;
            for (Eigen::Index col = 0; col < dim; ++col) {
                const auto u = static_cast<std::uint64_t>(col);
                m(static_cast<Eigen::Index>(u ^ masks.flip), col) +=
                    phase * sign_of(u & masks.phase);
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
        return solver.eigenvalues().minCoeff();
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_dense(obs),
                                                           Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

PauliObservable parse_hamiltonian(std::istream &in) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::size_t> num_qubits;
    std::vector<PauliString> terms;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view body = trim(line);
        if (body.empty() || body.front() == '#') {
            continue;
        }
        std::istringstream fields{std::string(body)};
        if (!num_qubits) {
            std::string keyword;
            long long n = 0;
            if (!(fields >> keyword >> n) || keyword != "qubits") {
                throw ParseError(line_no, "expected header 'qubits <n>'");
            }
            std::string extra;
            if (fields >> extra) {
                throw ParseError(line_no, "trailing text after qubit count");
            }
            if (n < 1 || n > static_cast<long long>(kMaxQubits)) {
                throw ParseError(line_no, "qubit count out of range");
            }
            num_qubits = static_cast<std::size_t>(n);
            continue;
        }
        std::string coeff_text;
        std::string word;
        std::string extra;
        if (!(fields >> coeff_text >> word) || (fields >> extra)) {
            throw ParseError(line_no, "expected '<coefficient> <pauli-word>'");
        }
        double coeff = 0.0;
        const char *first = coeff_text.data();
        const char *last = first + coeff_text.size();
        auto [ptr, ec] = std::from_chars(first, last, coeff);
        if (ec != std::errc{} || ptr != last || !std::isfinite(coeff)) {
            throw ParseError(line_no, "bad coefficient '" + coeff_text + "'");
        }
        if (word.size() != *num_qubits) {
            throw ParseError(line_no, "Pauli word '" + word + "' has length " +
                                          std::to_string(word.size()) +
                                          ", expected " +
                                          std::to_string(*num_qubits));
        }
        try {
            terms.push_back(PauliString::from_word(word, coeff));
        } catch (const ParameterError &e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (!num_qubits) {
        throw ParseError(line_no, "missing 'qubits <n>' header");
    }
    return {*num_qubits, std::move(terms)};
}

void write_hamiltonian(std::ostream &out, const PauliObservable &obs) {
    out << "qubits " << obs.num_qubits() << '\n';
    out << std::setprecision(17);
    for (const PauliString &t : obs.terms()) {
        out << t.coefficient << ' ' << t.word() << '\n';
    }
}

} // namespace tgopt
