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

#include "support/oracle.hpp"
#include "tgopt/ansatz.hpp"
#include "tgopt/errors.hpp"
#include "tgopt/models.hpp"
#include "tgopt/trace.hpp"

using namespace tgopt;

namespace {

double max_diff(const StateVector &a, const oracle::Vec &b) {
    return (oracle::to_vec(a) - b).cwiseAbs().maxCoeff();
}

} // namespace

TEST_CASE("ansatz shape rules") {
    CHECK_THROWS_AS(Ansatz(1, 2), ConfigError);
    CHECK_THROWS_AS(Ansatz(3, 1), ConfigError);
    CHECK_THROWS_AS(Ansatz(4, 0), ConfigError);
    CHECK_NOTHROW(Ansatz(3, 2));
    const Ansatz a(4, 3);
    CHECK(a.num_gates() == 12);
    for (std::size_t i = 1; i <= a.num_gates(); ++i) {
        const GateSite s = a.site(i);
        CHECK(s.index == i);
        CHECK(s.layer == (i + 3) / 4);
        CHECK(s.qubit == (i - 1) % 4);
        CHECK((s.layer - 1) * 4 + s.qubit + 1 == i);
    }
    CHECK_THROWS_AS((void)a.site(0), IndexError);
    CHECK_THROWS_AS((void)a.site(13), IndexError);
    CHECK_THROWS_AS((void)a.run(ParameterSet(3, UnitQuaternion::identity())), ShapeError);
}

TEST_CASE("small circuits") {
    const Ansatz a(2, 1);
    const StateVector id = a.run({UnitQuaternion::identity(), UnitQuaternion::identity()});
    CHECK(id[0] == Complex(1.0));

    const UnitQuaternion x({0, 1, 0, 0});
    const StateVector s = a.run({x, x});
    // (-iX)(-iX)|00> = -|11>, then CZ flips the sign.
    CHECK(std::abs(s[3] - Complex(1.0)) <= 1e-15);
    CHECK(std::norm(s[3]) == doctest::Approx(1.0));

    Rng rng(3);
    const Ansatz b(4, 2);
    CHECK(std::abs(b.run(random_parameters(b, false, rng)).norm() - 1.0) <= 1e-12);
}

TEST_CASE("run matches the dense circuit oracle") {
    Rng rng(12);
    for (std::size_t n = 2; n <= 4; ++n) {
        for (std::size_t layers = 1; layers <= 3; ++layers) {
            if ((n * layers) % 2 != 0) {
                continue;
            }
            const Ansatz a(n, layers);
            const ParameterSet p = random_parameters(a, false, rng);
            const oracle::Vec expected =
                oracle::ansatz_operator(n, layers, oracle::gate_ops(p)) * oracle::zero_state(n);
            CHECK(max_diff(a.run(p), expected) <= 1e-12);
        }
    }
}

TEST_CASE("run is deterministic") {
    const Ansatz a(4, 2);
    Rng r1(5);
    Rng r2(5);
    const StateVector s = a.run(random_parameters(a, false, r1));
    const StateVector t = a.run(random_parameters(a, false, r2));
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        CHECK(s[i] == t[i]);
    }
}

TEST_CASE("run_with_replacements") {
    Rng rng(19);
    const Ansatz a(3, 2);
    const ParameterSet p = random_parameters(a, false, rng);

    // Own gates as replacements reproduce the circuit.
    const std::vector<Replacement> own{{2, gate_from_quaternion(p[1])},
                                       {5, gate_from_quaternion(p[4])}};
    const StateVector ref = a.run(p);
    const StateVector same = a.run_with_replacements(p, own);
    for (std::size_t i = 0; i < ref.dimension(); ++i) {
        CHECK(std::abs(ref[i] - same[i]) <= 1e-12);
    }

    // Identity insertion equals setting that gate to the identity quaternion.
    ParameterSet q = p;
    q[3] = UnitQuaternion::identity();
    const std::vector<Replacement> ident{{4, basis_op(BasisIndex(0))}};
    const StateVector r1 = a.run_with_replacements(p, ident);
    const StateVector r2 = a.run(q);
    for (std::size_t i = 0; i < r1.dimension(); ++i) {
        CHECK(std::abs(r1[i] - r2[i]) <= 1e-12);
    }

    // Two sum insertions against the dense operator chain, with the trace
    // <M> = Tr(M' O_d V O_k rho' O_k^+ V^+ O_d^+) evaluated as a vector norm.
    const Mat2 sum12 = basis_sum_op(BasisIndex(1), BasisIndex(2));
    const std::vector<Replacement> both{{6, sum12}, {2, sum12}};
    std::vector<oracle::Mat> ops = oracle::gate_ops(p);
    ops[5] = oracle::from_mat2(sum12);
    ops[1] = oracle::from_mat2(sum12);
    const oracle::Vec psi = oracle::ansatz_operator(3, 2, ops) * oracle::zero_state(3);
    CHECK(max_diff(a.run_with_replacements(p, both), psi) <= 1e-12);
    const PauliObservable h = tfim_hamiltonian({3, 0.7, 0.3});
    const oracle::Mat rho = psi * psi.adjoint();
    oracle::Mat hd = oracle::Mat::Zero(8, 8);
    for (const PauliString &t : h.terms()) {
        hd += t.coefficient * oracle::pauli_word(t.word());
    }
    CHECK(std::abs(expectation_exact(h, a.run_with_replacements(p, both)) -
                   (hd * rho).trace().real()) <= 1e-12);

    const std::vector<Replacement> dup{{2, sum12}, {2, sum12}};
    CHECK_THROWS_AS((void)a.run_with_replacements(p, dup), ParameterError);
    const std::vector<Replacement> bad{{7, sum12}};
    CHECK_THROWS_AS((void)a.run_with_replacements(p, bad), IndexError);
}

TEST_CASE("tomography helpers agree with direct replacement and count evaluations") {
    Rng rng(23);
    const Ansatz a(4, 2);
    const ParameterSet p = random_parameters(a, false, rng);
    const CostFunction cost(tfim_hamiltonian({4, 1.0, 0.6}));
    Evaluator eval(cost, ShotConfig::exact());

    std::vector<Mat2> ops;
    for (int i = 0; i < 4; ++i) {
        ops.push_back(basis_op(BasisIndex(i)));
    }
    ops.push_back(basis_sum_op(BasisIndex(0), BasisIndex(2)));

    const std::vector<double> single = a.tomography_single(p, 6, ops, eval);
    CHECK(eval.count() == ops.size());
    for (std::size_t i = 0; i < ops.size(); ++i) {
        const std::vector<Replacement> r{{6, ops[i]}};
        CHECK(std::abs(single[i] - cost.exact(a.run_with_replacements(p, r))) <= 1e-12);
    }

    const std::vector<double> pair = a.tomography_pair(p, 7, ops, 2, ops, eval);
    CHECK(eval.count() == ops.size() + ops.size() * ops.size());
    for (std::size_t i = 0; i < ops.size(); ++i) {
        for (std::size_t j = 0; j < ops.size(); ++j) {
            const std::vector<Replacement> r{{7, ops[i]}, {2, ops[j]}};
            CHECK(std::abs(pair[i * ops.size() + j] -
                           cost.exact(a.run_with_replacements(p, r))) <= 1e-12);
        }
    }
    CHECK_THROWS((void)a.tomography_pair(p, 2, ops, 7, ops, eval));
}

TEST_CASE("audit tallies tomography and tracking separately") {
    RunTrace t;
    t.optimizer = OptimizerKind::Tgf;
    UpdateRecord r0;
    r0.tracking_evals = 1;
    r0.cumulative_evals = 1;
    t.records.push_back(r0);
    for (int i = 1; i <= 3; ++i) {
        UpdateRecord r;
        r.update_index = static_cast<std::size_t>(i);
        r.tomography_evals = 36;
        r.tracking_evals = 1;
        r.cumulative_evals = t.records.back().cumulative_evals + 37;
        t.records.push_back(r);
    }
    const EvalAudit audit = eval_count_audit(t);
    CHECK(audit.updates == 3);
    CHECK(audit.tomography_total == 108);
    CHECK(audit.tracking_total == 4);
    CHECK(audit.total == 112);
    CHECK(audit.tomography_per_update == 36.0);
    CHECK(audit.tomography_per_gate == 18.0);
    CHECK(audit.matches_table);
    t.records[2].tomography_evals = 35;
    CHECK_FALSE(eval_count_audit(t).matches_table);
}
