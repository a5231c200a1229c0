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
#include "tgopt/models.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <string>

#include "tgopt/errors.hpp"
#include "tgopt/rng.hpp"

namespace tgopt {

PauliObservable tfim_hamiltonian(const TfimParams &p) {
    if (p.n < 2) {
        throw ConfigError("TFIM needs at least 2 qubits");
    }
    if (!std::isfinite(p.J) || !std::isfinite(p.h)) {
        throw ConfigError("TFIM couplings must be finite");
    }
    std::vector<PauliString> terms;
    for (std::size_t i = 0; i + 1 < p.n; ++i) {
        PauliString s{std::vector<Pauli>(p.n, Pauli::I), -p.J};
        s.ops[i] = Pauli::Z;
        s.ops[i + 1] = Pauli::Z;
        terms.push_back(std::move(s));
    }
    for (std::size_t j = 0; j < p.n; ++j) {
        PauliString s{std::vector<Pauli>(p.n, Pauli::I), -p.h};
        s.ops[j] = Pauli::X;
        terms.push_back(std::move(s));
    }
    return PauliObservable(p.n, std::move(terms));
}

namespace jw {

namespace {

// sigma_a sigma_b = phase * sigma_c
std::pair<Complex, Pauli> single_product(Pauli a, Pauli b) {
    if (a == Pauli::I) {
        return {1.0, b};
    }
    if (b == Pauli::I) {
        return {1.0, a};
    }
    if (a == b) {
        return {1.0, Pauli::I};
    }
    const auto ia = static_cast<int>(a);
    const auto ib = static_cast<int>(b);
    const auto c = static_cast<Pauli>(6 - ia - ib);
    // X=1, Y=2, Z=3: cyclic order gives +i.
    const bool cyclic = (ib - ia + 3) % 3 == 1;
    return {cyclic ? Complex(0.0, 1.0) : Complex(0.0, -1.0), c};
}

void check_same_size(const PauliSum &a, const PauliSum &b) {
    if (a.num_qubits != b.num_qubits) {
        throw ShapeError("Pauli sums act on different qubit counts");
    }
}

PauliSum single(std::size_t num_qubits, std::size_t mode, Pauli p, Complex c) {
    if (mode >= num_qubits) {
        throw IndexError("mode " + std::to_string(mode) + " out of range");
    }
    Term t{std::vector<Pauli>(num_qubits, Pauli::I), c};
    for (std::size_t r = 0; r < mode; ++r) {
        t.ops[r] = Pauli::Z;
    }
    t.ops[mode] = p;
    return {num_qubits, {std::move(t)}};
}

} // namespace

PauliSum multiply(const PauliSum &a, const PauliSum &b) {
    check_same_size(a, b);
    PauliSum out{a.num_qubits, {}};
    out.terms.reserve(a.terms.size() * b.terms.size());
    for (const Term &x : a.terms) {
        for (const Term &y : b.terms) {
            Term t{std::vector<Pauli>(a.num_qubits), x.coefficient * y.coefficient};
            for (std::size_t q = 0; q < a.num_qubits; ++q) {
                const auto [phase, p] = single_product(x.ops[q], y.ops[q]);
                t.coefficient *= phase;
                t.ops[q] = p;
            }
            out.terms.push_back(std::move(t));
        }
    }
    return simplify(out, 0.0);
}

PauliSum add(const PauliSum &a, const PauliSum &b) {
    check_same_size(a, b);
    PauliSum out = a;
    out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
    return simplify(out, 0.0);
}

PauliSum scale(const PauliSum &a, Complex s) {
    PauliSum out = a;
    for (Term &t : out.terms) {
        t.coefficient *= s;
    }
    return out;
}

PauliSum simplify(const PauliSum &a, double tol) {
    std::map<std::vector<Pauli>, Complex> merged;
    for (const Term &t : a.terms) {
        merged[t.ops] += t.coefficient;
    }
    PauliSum out{a.num_qubits, {}};
    for (auto &[ops, c] : merged) {
        if (std::abs(c) >= tol && c != Complex(0.0)) {
            out.terms.push_back({ops, c});
        }
    }
    return out;
}

PauliSum creation(std::size_t mode, std::size_t num_qubits) {
    return add(single(num_qubits, mode, Pauli::X, 0.5),
               single(num_qubits, mode, Pauli::Y, Complex(0.0, 0.5)));
}

PauliSum annihilation(std::size_t mode, std::size_t num_qubits) {
    return add(single(num_qubits, mode, Pauli::X, 0.5),
               single(num_qubits, mode, Pauli::Y, Complex(0.0, -0.5)));
}

Eigen::MatrixXcd to_dense(const PauliSum &sum) {
    const std::size_t dim = std::size_t{1} << sum.num_qubits;
    if (sum.num_qubits > kMaxDenseQubits) {
        throw CapacityError("dense matrix limited to " +
                            std::to_string(kMaxDenseQubits) + " qubits");
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                static_cast<Eigen::Index>(dim));
    for (const Term &t : sum.terms) {
        const PauliObservable one(sum.num_qubits, {PauliString{t.ops, 1.0}});
        m += t.coefficient * tgopt::to_dense(one);
    }
    return m;
}

PauliObservable to_observable(const PauliSum &sum, double tol) {
    std::vector<PauliString> terms;
    for (const Term &t : simplify(sum, tol).terms) {
        if (std::abs(t.coefficient.imag()) > tol) {
            throw ParameterError("operator is not Hermitian: imaginary weight on " +
                                 PauliString{t.ops, 0.0}.word());
        }
        terms.push_back({t.ops, t.coefficient.real()});
    }
    return PauliObservable(sum.num_qubits, std::move(terms));
}

} // namespace jw

PauliObservable fermi_hubbard_hamiltonian(const FermiHubbardParams &p) {
    if (!std::isfinite(p.t) || !std::isfinite(p.U)) {
        throw ConfigError("Hubbard parameters must be finite");
    }
    constexpr std::size_t n = kHubbardQubits;
    jw::PauliSum h{n, {}};
    for (std::size_t spin = 0; spin < 2; ++spin) {
        const std::size_t q0 = hubbard_qubit(0, spin);
        const std::size_t q1 = hubbard_qubit(1, spin);
        const jw::PauliSum hop =
            jw::add(jw::multiply(jw::creation(q0, n), jw::annihilation(q1, n)),
                    jw::multiply(jw::creation(q1, n), jw::annihilation(q0, n)));
        h = jw::add(h, jw::scale(hop, -p.t));
    }
    for (std::size_t site = 0; site < 2; ++site) {
        const std::size_t up = hubbard_qubit(site, 0);
        const std::size_t down = hubbard_qubit(site, 1);
        const jw::PauliSum n_up = jw::multiply(jw::creation(up, n), jw::annihilation(up, n));
        const jw::PauliSum n_down =
            jw::multiply(jw::creation(down, n), jw::annihilation(down, n));
        h = jw::add(h, jw::scale(jw::multiply(n_up, n_down), p.U));
    }
    return jw::to_observable(jw::simplify(h, 1e-12));
}

PauliObservable load_hamiltonian_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open Hamiltonian file '" + path.string() + "'");
    }
    try {
        return parse_hamiltonian(in);
    } catch (const ParseError &e) {
        throw ParseError(e.line(), path.string() + ": " +
                                       std::string(e.what()).substr(
                                           std::string(e.what()).find(": ") + 2));
    }
}

StateVector make_target_state(std::size_t num_qubits, std::uint64_t seed) {
    Rng rng(seed, Stream::Target);
    return random_state(num_qubits, rng);
}

} // namespace tgopt
