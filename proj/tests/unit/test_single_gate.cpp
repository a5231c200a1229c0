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
#include "tgopt/errors.hpp"
#include "tgopt/models.hpp"
#include "tgopt/single_gate.hpp"

using namespace tgopt;

namespace {

double direct_cost(const Ansatz &a, const ParameterSet &p, std::size_t index,
                   const UnitQuaternion &q, const CostFunction &cost) {
    ParameterSet r = p;
    r[index - 1] = q;
    return cost.exact(a.run(r));
}

QuadraticForm random_form(std::size_t dim, Rng &rng) {
    QuadraticForm f;
    f.dim = dim;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i; j < dim; ++j) {
            const double x = rng.normal();
            f.at(i, j) = x;
            f.at(j, i) = x;
        }
    }
    return f;
}

} // namespace

TEST_CASE("min_eigvec examples") {
    QuadraticForm d;
    d.dim = 3;
    d.at(0, 0) = 1;
    d.at(1, 1) = 2;
    d.at(2, 2) = 3;
    const EigenPair p = min_eigvec(d);
    CHECK(p.value == 1.0);
    CHECK(p.vector[0] == 1.0);
    CHECK(p.vector[1] == 0.0);

    QuadraticForm deg;
    deg.dim = 4;
    deg.at(2, 2) = 5;
    deg.at(3, 3) = 5;
    const EigenPair z = min_eigvec(deg);
    CHECK(z.value == 0.0);
    CHECK(std::abs(z.vector[2]) + std::abs(z.vector[3]) <= 1e-12);
    CHECK(std::hypot(z.vector[0], z.vector[1]) == doctest::Approx(1.0).epsilon(1e-12));

    QuadraticForm bad;
    bad.dim = 5;
    CHECK_THROWS_AS((void)min_eigvec(bad), ShapeError);
}

TEST_CASE("min_eigvec matches a reference eigensolver on random matrices") {
    Rng rng(41);
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t dim = rep % 2 == 0 ? 4 : 3;
        const QuadraticForm f = random_form(dim, rng);
        Eigen::MatrixXd m(dim, dim);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = f.at(i, j);
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
        const EigenPair p = min_eigvec(f);
        CHECK(std::abs(p.value - es.eigenvalues()(0)) <= 1e-10);

        Eigen::VectorXd v(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            v(static_cast<Eigen::Index>(i)) = p.vector[i];
        }
        CHECK(std::abs(v.norm() - 1.0) <= 1e-12);
        CHECK((m * v - p.value * v).norm() <= 1e-10);
        const auto first = std::find_if(p.vector.begin(), p.vector.begin() + static_cast<long>(dim),
                                        [](double x) { return std::abs(x) > 1e-12; });
        CHECK(*first > 0.0);
    }
}

TEST_CASE("Fraxis and FQS forms reconstruct the cost") {
    Rng rng(43);
    const Ansatz a(3, 2);
    const CostFunction cost(tfim_hamiltonian({3, 0.8, 0.4}));
    const ParameterSet p = random_parameters(a, false, rng);
    for (std::size_t index = 1; index <= a.num_gates(); ++index) {
        Evaluator eval(cost, ShotConfig::exact());
        const QuadraticForm fr = build_fraxis_matrix(a, p, index, eval);
        CHECK(eval.count() == 6);
        const QuadraticForm fq = build_fqs_matrix(a, p, index, eval);
        CHECK(eval.count() == 16);

        // Top-left FQS entry is the cost with the gate removed.
        CHECK(std::abs(fq.at(0, 0) - direct_cost(a, p, index, UnitQuaternion::identity(), cost)) <=
              1e-12);
        for (int rep = 0; rep < 50; ++rep) {
            const UnitAxis n = random_axis(rng);
            CHECK(std::abs(fr.evaluate(n.components()) -
                           direct_cost(a, p, index, n.as_quaternion(), cost)) <= 1e-9);
            const UnitQuaternion q = random_quaternion(rng);
            CHECK(std::abs(fq.evaluate(q.components()) - direct_cost(a, p, index, q, cost)) <=
                  1e-9);
        }
        // Fraxis form is the lower-right block of the FQS form.
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                CHECK(std::abs(fr.at(i, j) - fq.at(i + 1, j + 1)) <= 1e-10);
            }
        }
    }
}

TEST_CASE("hand-evaluated Fraxis diagonal for M = Z on the first qubit") {
    const Ansatz a(2, 1);
    const CostFunction cost(PauliObservable(2, {PauliString::from_word("ZI", 1.0)}));
    Evaluator eval(cost, ShotConfig::exact());
    const ParameterSet p(2, UnitQuaternion::identity());
    const QuadraticForm f = build_fraxis_matrix(a, p, 1, eval);
    CHECK(f.at(0, 0) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(f.at(1, 1) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(f.at(2, 2) == doctest::Approx(1.0).epsilon(1e-14));
    const EigenPair best = min_eigvec(f);
    CHECK(best.value == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(std::abs(best.vector[2]) <= 1e-12);
}

TEST_CASE("single-gate sweeps are monotone and reach the local minimum") {
    Rng rng(47);
    const Ansatz a(4, 2);
    const CostFunction cost(fermi_hubbard_hamiltonian({0.75, 0.75}));
    for (OptimizerKind kind : {OptimizerKind::Fraxis, OptimizerKind::Fqs}) {
        Evaluator eval(cost, ShotConfig::exact());
        RunState run = start_run(kind, a, random_parameters(a, is_axis_only(kind), rng), eval);
        for (int it = 0; it < 3; ++it) {
            single_gate_sweep(kind, a, run, eval);
        }
        const auto &recs = run.trace.records;
        CHECK(recs.size() == 1 + 3 * a.num_gates());
        for (std::size_t i = 1; i < recs.size(); ++i) {
            CHECK(recs[i].exact_cost <= recs[i - 1].exact_cost + 1e-12);
            CHECK(recs[i].tomography_evals == tomography_evals_per_update(kind));
            CHECK(recs[i].tracking_evals == 1);
            CHECK(recs[i].cumulative_evals ==
                  recs[i - 1].cumulative_evals + tomography_evals_per_update(kind) + 1);
        }
        CHECK(run.trace.iteration_costs.size() == 4);

        // The first update of the next sweep lands on the form's minimum eigenvalue.
        const std::size_t index = 1;
        Evaluator probe(cost, ShotConfig::exact());
        const QuadraticForm f = kind == OptimizerKind::Fraxis
                                    ? build_fraxis_matrix(a, run.params, index, probe)
                                    : build_fqs_matrix(a, run.params, index, probe);
        const double lowest = min_eigvec(f).value;
        RunState copy = run;
        single_gate_sweep(kind, a, copy, probe);
        const UpdateRecord &r = copy.trace.records[run.trace.records.size()];
        if (r.accepted) {
            CHECK(std::abs(r.exact_cost - lowest) <= 1e-10);
        } else {
            CHECK(r.exact_cost <= lowest + 1e-10);
        }
    }
}

TEST_CASE("an optimal gate is left unchanged") {
    const Ansatz a(2, 1);
    const CostFunction cost(PauliObservable(2, {PauliString::from_word("ZI", 1.0)}));
    Evaluator eval(cost, ShotConfig::exact());
    // -iX on qubit 0 already reaches the minimum -1.
    RunState run = start_run(OptimizerKind::Fqs, a,
                             {UnitQuaternion({0, 1, 0, 0}), UnitQuaternion::identity()}, eval);
    single_gate_sweep(OptimizerKind::Fqs, a, run, eval);
    for (const UpdateRecord &r : run.trace.records) {
        CHECK(std::abs(r.exact_cost + 1.0) <= 1e-12);
    }
    // Any accepted replacement stays inside the degenerate optimum span{e1, e2}.
    const UnitQuaternion &q = run.params[0];
    CHECK(std::abs(q[1] * q[1] + q[2] * q[2] - 1.0) <= 1e-12);
}

TEST_CASE("single_gate_sweep rejects two-gate kinds") {
    const Ansatz a(2, 1);
    const CostFunction cost(PauliObservable(2, {PauliString::from_word("ZI", 1.0)}));
    Evaluator eval(cost, ShotConfig::exact());
    RunState run = start_run(OptimizerKind::Tgf, a, ParameterSet(2, UnitQuaternion::identity()), eval);
    CHECK_THROWS_AS(single_gate_sweep(OptimizerKind::Tgf, a, run, eval), ConfigError);
}
