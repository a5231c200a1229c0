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
#include "doctest.h"

#include <cmath>
#include <sstream>

#include "support/oracle.hpp"
#include "tgopt/errors.hpp"
#include "tgopt/models.hpp"
#include "tgopt/pauli.hpp"

using namespace tgopt;

namespace {

PauliObservable single(const std::string &word, double c = 1.0) {
    return PauliObservable(word.size(), {PauliString::from_word(word, c)});
}

oracle::Mat dense_oracle(const PauliObservable &obs) {
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << obs.num_qubits());
    oracle::Mat m = oracle::Mat::Zero(dim, dim);
    for (const PauliString &t : obs.terms()) {
        m += t.coefficient * oracle::pauli_word(t.word());
    }
    return m;
}

PauliObservable random_observable(std::size_t n, std::size_t terms, Rng &rng) {
    std::vector<PauliString> list;
    const char letters[] = {'I', 'X', 'Y', 'Z'};
    for (std::size_t k = 0; k < terms; ++k) {
        std::string w;
        for (std::size_t q = 0; q < n; ++q) {
            w += letters[rng.below(4)];
        }
        list.push_back(PauliString::from_word(w, rng.normal()));
    }
    return PauliObservable(n, std::move(list));
}

} // namespace

TEST_CASE("Pauli words") {
    const PauliString p = PauliString::from_word("XIYZ", 0.5);
    CHECK(p.word() == "XIYZ");
    CHECK(p.num_qubits() == 4);
    CHECK_FALSE(p.is_identity());
    CHECK(PauliString::from_word("II", 1.0).is_identity());
    CHECK_THROWS_AS((void)PauliString::from_word("XQ", 1.0), ParameterError);
    CHECK_THROWS_AS(PauliObservable(3, {PauliString::from_word("XX", 1.0)}), ShapeError);
    CHECK_THROWS_AS(PauliObservable(1, {PauliString::from_word("X", std::nan(""))}),
                    ParameterError);
}

TEST_CASE("duplicate words merge") {
    const PauliObservable merged(2, {PauliString::from_word("ZI", 0.25),
                                     PauliString::from_word("XX", 1.0),
                                     PauliString::from_word("ZI", 0.5)});
    REQUIRE(merged.terms().size() == 2);
    CHECK(merged.terms()[0].word() == "ZI");
    CHECK(merged.terms()[0].coefficient == doctest::Approx(0.75));

    Rng rng(2);
    const StateVector s = random_state(2, rng);
    const PauliObservable ref(2, {PauliString::from_word("ZI", 0.75),
                                  PauliString::from_word("XX", 1.0)});
    CHECK(expectation_exact(merged, s) == doctest::Approx(expectation_exact(ref, s)).epsilon(1e-14));
}

TEST_CASE("expectation_exact examples") {
    CHECK(expectation_exact(single("Z"), init_zero(1)) == 1.0);
    CHECK(expectation_exact(single("X"), init_zero(1)) == 0.0);
    const PauliObservable tfim = tfim_hamiltonian({2, 0.5, 0.5});
    CHECK(expectation_exact(tfim, init_zero(2)) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK_THROWS_AS((void)expectation_exact(tfim, init_zero(3)), ShapeError);
}

TEST_CASE("expectation_exact matches the dense oracle for n <= 4") {
    Rng rng(31);
    for (std::size_t n = 1; n <= 4; ++n) {
        for (int rep = 0; rep < 5; ++rep) {
            const PauliObservable obs = random_observable(n, 6, rng);
            const oracle::Vec psi = oracle::random_vec(n, rng);
            const double expected = oracle::expect(dense_oracle(obs), psi);
            CHECK(std::abs(expectation_exact(obs, oracle::from_vec(n, psi)) - expected) <=
                  1e-10);
            // Unnormalized states too.
            const oracle::Vec scaled = 1.7 * psi;
            CHECK(std::abs(expectation_exact(obs, oracle::from_vec(n, scaled)) -
                           oracle::expect(dense_oracle(obs), scaled)) <= 1e-10);
        }
    }
}

TEST_CASE("to_dense and ground_energy") {
    const Eigen::MatrixXcd z = to_dense(single("Z"));
    CHECK(z(0, 0) == Complex(1.0));
    CHECK(z(1, 1) == Complex(-1.0));
    CHECK(z(0, 1) == Complex(0.0));
    const Eigen::MatrixXcd x = to_dense(single("X"));
    CHECK(x(0, 1) == Complex(1.0));
    CHECK(x(1, 0) == Complex(1.0));
    CHECK(x(0, 0) == Complex(0.0));

    Rng rng(4);
    for (std::size_t n = 1; n <= 4; ++n) {
        const PauliObservable obs = random_observable(n, 8, rng);
        CHECK((to_dense(obs) - dense_oracle(obs)).cwiseAbs().maxCoeff() <= 1e-14);
    }

    CHECK(ground_energy(single("Z")) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(ground_energy(single("X", -0.5)) == doctest::Approx(-0.5).epsilon(1e-14));

    // 4x4 TFIM oracle: eigenvalues of the dense matrix by Eigen's complex solver.
    const PauliObservable tfim = tfim_hamiltonian({2, 0.5, 0.5});
    Eigen::SelfAdjointEigenSolver<oracle::Mat> es(dense_oracle(tfim));
    CHECK(ground_energy(tfim) == doctest::Approx(es.eigenvalues()(0)).epsilon(1e-13));
    // Value frozen from the oracle above.
    CHECK(ground_energy(tfim) == doctest::Approx(-1.118033988749895).epsilon(1e-13));

    // Complex-Hermitian path (odd number of Y).
    const PauliObservable y(2, {PauliString::from_word("YZ", 0.7), PauliString::from_word("XI", 0.2)});
    Eigen::SelfAdjointEigenSolver<oracle::Mat> ey(dense_oracle(y));
    CHECK(ground_energy(y) == doctest::Approx(ey.eigenvalues()(0)).epsilon(1e-13));

    const PauliObservable big(13, {PauliString{std::vector<Pauli>(13, Pauli::Z), 1.0}});
    CHECK_THROWS_AS((void)to_dense(big), CapacityError);
    CHECK_THROWS_AS((void)ground_energy(big), CapacityError);
}

TEST_CASE("shot estimator: deterministic cases and tail bound") {
    Rng rng(1);
    CHECK(expectation_shots(single("Z"), init_zero(1), 100, rng) == 1.0);
    CHECK(expectation_shots(single("I", 0.3), init_zero(1), 1, rng) == 0.3);
    // |estimate| <= 0.05 fails with probability ~ 2 exp(-2 * 16384 * 0.025^2) ~ 1e-9.
    for (int rep = 0; rep < 20; ++rep) {
        CHECK(std::abs(expectation_shots(single("X"), init_zero(1), 16384, rng)) <= 0.05);
    }
}

TEST_CASE("shot estimator variance matches the binomial formula") {
    // State with <Z> = 0.6: cos^2 - sin^2 = 0.6.
    const double c = std::sqrt(0.8);
    const double s = std::sqrt(0.2);
    const StateVector psi(1, {c, s});
    REQUIRE(expectation_exact(single("Z"), psi) == doctest::Approx(0.6).epsilon(1e-14));

    Rng rng(2024);
    const int reps = 1000;
    const std::uint32_t shots = 4096;
    double sum = 0.0;
    double sum2 = 0.0;
    for (int r = 0; r < reps; ++r) {
        const double e = expectation_shots(single("Z"), psi, shots, rng);
        sum += e;
        sum2 += e * e;
    }
    const double mean = sum / reps;
    const double sd = std::sqrt((sum2 - reps * mean * mean) / (reps - 1));
    const double expected_sd = std::sqrt((1.0 - 0.36) / shots);
    CHECK(std::abs(sd / expected_sd - 1.0) <= 0.2);
    // Unbiased within 3 standard errors.
    CHECK(std::abs(mean - 0.6) <= 3.0 * expected_sd / std::sqrt(reps));
}

TEST_CASE("shot estimator is unbiased over 10^4 repetitions") {
    Rng rng(77);
    const PauliObservable obs = random_observable(3, 5, rng);
    const StateVector psi = random_state(3, rng);
    const double exact = expectation_exact(obs, psi);
    const int reps = 10000;
    const std::uint32_t shots = 64;
    double sum = 0.0;
    double sum2 = 0.0;
    for (int r = 0; r < reps; ++r) {
        const double e = expectation_shots(obs, psi, shots, rng);
        sum += e;
        sum2 += e * e;
    }
    const double mean = sum / reps;
    const double se = std::sqrt((sum2 / reps - mean * mean) / reps);
    CHECK(std::abs(mean - exact) <= 3.0 * se);
}

TEST_CASE("ShotConfig validation") {
    CHECK(ShotConfig::exact().is_exact());
    CHECK_FALSE(ShotConfig::with_shots(10, 1).is_exact());
    CHECK_THROWS_AS((void)ShotConfig::with_shots(0, 1), ConfigError);
    CHECK_THROWS_AS((void)ShotConfig::with_shots(0x80000000U, 1), ConfigError);
}

TEST_CASE("Hamiltonian text format") {
    std::istringstream in("# comment\n\nqubits 2\n0.5 ZI\n# mid comment\n-1.25 XY\n0.5 ZI\n");
    const PauliObservable obs = parse_hamiltonian(in);
    CHECK(obs.num_qubits() == 2);
    REQUIRE(obs.terms().size() == 2);
    CHECK(obs.terms()[0].coefficient == 1.0);
    CHECK(obs.terms()[1].word() == "XY");

    std::ostringstream out;
    write_hamiltonian(out, obs);
    std::istringstream back(out.str());
    const PauliObservable again = parse_hamiltonian(back);
    REQUIRE(again.terms().size() == 2);
    CHECK(again.terms()[1].coefficient == -1.25);

    const auto fails_on_line = [](const std::string &text, std::size_t line) {
        std::istringstream s(text);
        try {
            (void)parse_hamiltonian(s);
        } catch (const ParseError &e) {
            return e.line() == line;
        }
        return false;
    };
    CHECK(fails_on_line("qubits 2\n0.5 ZIZ\n", 2));
    CHECK(fails_on_line("qubits 2\n0.5 ZQ\n", 2));
    CHECK(fails_on_line("# c\nqubits 2\nabc ZZ\n", 3));
    CHECK(fails_on_line("0.5 ZZ\n", 1));
    CHECK(fails_on_line("qubits 2\n0.5\n", 2));
}
