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

#include <algorithm>
#include <cmath>
#include <set>

#include "tgopt/errors.hpp"
#include "tgopt/models.hpp"
#include "tgopt/two_gate.hpp"

using namespace tgopt;

namespace {

using Vec4 = CoeffTensor::Vec4;

double direct_pair(const Ansatz &a, const ParameterSet &p, std::size_t d, std::size_t k,
                   const UnitQuaternion &qd, const UnitQuaternion &qk, const CostFunction &cost) {
    ParameterSet r = p;
    r[d - 1] = qd;
    r[k - 1] = qk;
    return cost.exact(a.run(r));
}

Vec4 random_unit(Rng &rng, bool axis) {
    const UnitQuaternion q = axis ? random_axis(rng).as_quaternion() : random_quaternion(rng);
    return q.components();
}

double sphere_value(const CoeffTensor &t, const Vec4 &qd, const Vec4 &qk) {
    return t.evaluate(qd, qk);
}

CoeffTensor circuit_tensor(TwoGateMode mode, std::uint64_t seed) {
    Rng rng(seed);
    const Ansatz a(4, 2);
    static const CostFunction cost(fermi_hubbard_hamiltonian({0.75, 0.75}));
    const ParameterSet p = random_parameters(a, mode == TwoGateMode::Tgf, rng);
    Evaluator eval(cost, ShotConfig::exact());
    return build_coeff_tensor(a, p, 6, 3, eval, mode);
}

} // namespace

TEST_CASE("pairing sequences for D = 10") {
    Rng rng(1);
    const auto lin = make_pairs(PairingStrategy::Linear, 10, rng);
    CHECK(lin == std::vector<GatePair>{{1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}});
    const auto opp = make_pairs(PairingStrategy::Opposite, 10, rng);
    CHECK(opp == std::vector<GatePair>{{1, 10}, {2, 9}, {3, 8}, {4, 7}, {5, 6}});
    const auto hs = make_pairs(PairingStrategy::HalfShifted, 10, rng);
    CHECK(hs == std::vector<GatePair>{{1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10}});

    CHECK_THROWS_AS((void)make_pairs(PairingStrategy::Linear, 7, rng), ConfigError);
    CHECK_THROWS_AS((void)make_pairs(PairingStrategy::Random, 0, rng), ConfigError);

    CHECK(parse_strategy("half_shifted") == PairingStrategy::HalfShifted);
    CHECK(parse_strategy("half-shifted") == PairingStrategy::HalfShifted);
    CHECK(parse_strategy(to_string(PairingStrategy::Opposite)) == PairingStrategy::Opposite);
    CHECK_THROWS_AS((void)parse_strategy("zigzag"), ConfigError);
}

TEST_CASE("every strategy partitions the gates") {
    Rng rng(2);
    for (std::size_t d = 2; d <= 64; d += 2) {
        for (PairingStrategy s : {PairingStrategy::Linear, PairingStrategy::Random,
                                  PairingStrategy::Opposite, PairingStrategy::HalfShifted}) {
            const auto pairs = make_pairs(s, d, rng);
            REQUIRE(pairs.size() == d / 2);
            std::set<std::size_t> seen;
            for (const GatePair &p : pairs) {
                CHECK(p.first != p.second);
                seen.insert(p.first);
                seen.insert(p.second);
            }
            CHECK(seen.size() == d);
            CHECK(*seen.begin() == 1);
            CHECK(*seen.rbegin() == d);
        }
    }
}

TEST_CASE("random pairings depend only on the seed") {
    Rng a(5);
    Rng b(5);
    Rng c(6);
    const auto pa = make_pairs(PairingStrategy::Random, 16, a);
    CHECK(pa == make_pairs(PairingStrategy::Random, 16, b));
    CHECK_FALSE(pa == make_pairs(PairingStrategy::Random, 16, c));
    // Non-random strategies leave the generator untouched.
    Rng d(9);
    Rng e(9);
    (void)make_pairs(PairingStrategy::HalfShifted, 16, d);
    CHECK(d.next_u64() == e.next_u64());
}

TEST_CASE("the quartic model reproduces the cost for every pair geometry") {
    Rng rng(61);
    const Ansatz a(4, 2);
    const CostFunction cost(tfim_hamiltonian({4, 0.9, 0.6}));
    // same qubit across layers, different qubit across layers, same layer,
    // adjacent indices with the arguments given in reverse order
    const std::vector<GatePair> geometries{{1, 5}, {2, 7}, {1, 3}, {4, 3}};
    for (TwoGateMode mode : {TwoGateMode::Tgf, TwoGateMode::Tgfqs}) {
        const bool axis = mode == TwoGateMode::Tgf;
        const ParameterSet p = random_parameters(a, axis, rng);
        for (const GatePair &g : geometries) {
            Evaluator eval(cost, ShotConfig::exact());
            const CoeffTensor t = build_coeff_tensor(a, p, g.first, g.second, eval, mode);
            CHECK(eval.count() == (axis ? 36U : 100U));
            CHECK(t.gate_d() == std::max(g.first, g.second));
            CHECK(t.gate_k() == std::min(g.first, g.second));
            CHECK(t.all_finite());
            for (int rep = 0; rep < 30; ++rep) {
                const UnitQuaternion qd = axis ? random_axis(rng).as_quaternion()
                                               : random_quaternion(rng);
                const UnitQuaternion qk = axis ? random_axis(rng).as_quaternion()
                                               : random_quaternion(rng);
                const double expected = direct_pair(a, p, t.gate_d(), t.gate_k(), qd, qk, cost);
                CHECK(std::abs(t.evaluate(qd.components(), qk.components()) - expected) <= 1e-9);
            }
        }
    }
    Evaluator eval(cost, ShotConfig::exact());
    const ParameterSet p = random_parameters(a, false, rng);
    CHECK_THROWS_AS((void)build_coeff_tensor(a, p, 3, 3, eval, TwoGateMode::Tgfqs),
                    ParameterError);
}

TEST_CASE("identity observable gives a constant model") {
    const Ansatz a(2, 2);
    const CostFunction cost(PauliObservable(2, {PauliString::from_word("II", 1.0)}));
    Rng rng(3);
    const ParameterSet p = random_parameters(a, false, rng);
    Evaluator eval(cost, ShotConfig::exact());
    const CoeffTensor t = build_coeff_tensor(a, p, 1, 4, eval, TwoGateMode::Tgfqs);
    for (int rep = 0; rep < 20; ++rep) {
        CHECK(std::abs(t.evaluate(random_unit(rng, false), random_unit(rng, false)) - 1.0) <=
              1e-12);
    }
    const SphereMinimum m = minimize_on_spheres(t, random_unit(rng, false), random_unit(rng, false));
    CHECK(std::abs(m.value - 1.0) <= 1e-12);
}

TEST_CASE("the axis model is the restriction of the quaternion model") {
    Rng rng(71);
    const Ansatz a(4, 2);
    const CostFunction cost(fermi_hubbard_hamiltonian({0.75, 0.75}));
    const ParameterSet p = random_parameters(a, true, rng);
    Evaluator e1(cost, ShotConfig::exact());
    Evaluator e2(cost, ShotConfig::exact());
    const CoeffTensor tgf = build_coeff_tensor(a, p, 8, 2, e1, TwoGateMode::Tgf);
    const CoeffTensor tgfqs = build_coeff_tensor(a, p, 8, 2, e2, TwoGateMode::Tgfqs);
    for (std::size_t mu = 1; mu < 4; ++mu) {
        for (std::size_t x = 1; x < 4; ++x) {
            CHECK(std::abs(tgf.diag(mu, x) - tgfqs.diag(mu, x)) <= 1e-10);
        }
    }
    for (std::size_t mu = 0; mu < 4; ++mu) {
        CHECK(tgf.diag(mu, 0) == 0.0);
        CHECK(tgf.diag(0, mu) == 0.0);
    }
    for (int rep = 0; rep < 20; ++rep) {
        const UnitAxis nd = random_axis(rng);
        const UnitAxis nk = random_axis(rng);
        CHECK(std::abs(eval_quartic(tgf, nd, nk) -
                       eval_quartic(tgfqs, nd.as_quaternion(), nk.as_quaternion())) <= 1e-10);
    }
    CHECK_THROWS_AS((void)eval_quartic(tgf, random_quaternion(rng), random_quaternion(rng)),
                    ParameterError);
    CHECK_THROWS_AS((void)eval_quartic(tgfqs, random_axis(rng), random_axis(rng)),
                    ParameterError);
}

TEST_CASE("blocks and gradient agree with the polynomial") {
    const CoeffTensor t = circuit_tensor(TwoGateMode::Tgfqs, 81);
    Rng rng(82);
    for (int rep = 0; rep < 10; ++rep) {
        Vec4 qd{};
        Vec4 qk{};
        for (std::size_t i = 0; i < 4; ++i) {
            qd[i] = rng.normal();
            qk[i] = rng.normal();
        }
        const double f = t.evaluate(qd, qk);
        const auto bd = t.block_d(qk);
        const auto bk = t.block_k(qd);
        double fd = 0.0;
        double fk = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                CHECK(bd[i * 4 + j] == bd[j * 4 + i]);
                fd += qd[i] * bd[i * 4 + j] * qd[j];
                fk += qk[i] * bk[i * 4 + j] * qk[j];
            }
        }
        CHECK(std::abs(fd - f) <= 1e-10 * (1.0 + std::abs(f)));
        CHECK(std::abs(fk - f) <= 1e-10 * (1.0 + std::abs(f)));

        const auto [gd, gk] = t.gradient(qd, qk);
        const double h = 1e-6;
        for (std::size_t i = 0; i < 4; ++i) {
            Vec4 p = qd;
            Vec4 m = qd;
            p[i] += h;
            m[i] -= h;
            CHECK(std::abs((t.evaluate(p, qk) - t.evaluate(m, qk)) / (2 * h) - gd[i]) <= 1e-6);
            p = qk;
            m = qk;
            p[i] += h;
            m[i] -= h;
            CHECK(std::abs((t.evaluate(qd, p) - t.evaluate(qd, m)) / (2 * h) - gk[i]) <= 1e-6);
        }
    }
}

TEST_CASE("separable model has its minimum at the smallest eigenvector") {
    // f = (qd^T A qd) |qk|^2 with A = diag(3, 1, 2, 5) plus one coupling.
    CoeffTensor t(TwoGateMode::Tgfqs, 2, 1);
    const double diag[4] = {3, 1, 2, 5};
    for (std::size_t mu = 0; mu < 4; ++mu) {
        for (std::size_t a = 0; a < 4; ++a) {
            t.diag(mu, a) = diag[mu];
        }
    }
    // A_23 = 0.5, still with lowest eigenvalue 1 at e1.
    for (std::size_t a = 0; a < 4; ++a) {
        t.cubic_d(2, 3, a) = 2 * 0.5;
    }
    Rng rng(11);
    for (int rep = 0; rep < 5; ++rep) {
        MinimizerOptions opt;
        opt.seed = static_cast<std::uint64_t>(rep);
        const SphereMinimum m =
            minimize_on_spheres(t, random_unit(rng, false), random_unit(rng, false), opt);
        CHECK(std::abs(m.value - 1.0) <= 1e-10);
        CHECK(std::abs(std::abs(m.qd[1]) - 1.0) <= 1e-6);
        double nk = 0.0;
        for (double x : m.qk) {
            nk += x * x;
        }
        CHECK(std::abs(nk - 1.0) <= 1e-12);
    }
}

TEST_CASE("minimizer beats random sampling and never exceeds the incumbent") {
    for (TwoGateMode mode : {TwoGateMode::Tgf, TwoGateMode::Tgfqs}) {
        const bool axis = mode == TwoGateMode::Tgf;
        const CoeffTensor t = circuit_tensor(mode, axis ? 91 : 92);
        Rng rng(93);
        const Vec4 sd = random_unit(rng, axis);
        const Vec4 sk = random_unit(rng, axis);
        const SphereMinimum m = minimize_on_spheres(t, sd, sk);
        CHECK(m.value <= sphere_value(t, sd, sk) + 1e-12);
        CHECK(std::abs(t.evaluate(m.qd, m.qk) - m.value) <= 1e-12);
        if (axis) {
            CHECK(m.qd[0] == 0.0);
            CHECK(m.qk[0] == 0.0);
        }
        double sampled = 1e300;
        for (int rep = 0; rep < 10000; ++rep) {
            sampled = std::min(sampled, sphere_value(t, random_unit(rng, axis), random_unit(rng, axis)));
        }
        CHECK(m.value <= sampled + 1e-9);

        // From a local minimum the incumbent is kept.
        MinimizerOptions one;
        one.starts = 1;
        const SphereMinimum again = minimize_on_spheres(t, m.qd, m.qk, one);
        CHECK(again.value <= m.value + 1e-12);
    }
}

TEST_CASE("two-gate sweeps are monotone with exact accounting") {
    Rng rng(101);
    const Ansatz a(4, 2);
    const CostFunction cost(fermi_hubbard_hamiltonian({0.75, 0.75}));
    for (OptimizerKind kind : {OptimizerKind::Tgf, OptimizerKind::Tgfqs}) {
        for (PairingStrategy s : {PairingStrategy::Linear, PairingStrategy::Random}) {
            Evaluator eval(cost, ShotConfig::exact());
            RunState run = start_run(kind, a, random_parameters(a, is_axis_only(kind), rng), eval);
            Rng pairing(7);
            Rng minim(8);
            for (int it = 0; it < 2; ++it) {
                two_gate_sweep(kind, s, a, run, eval, pairing, minim);
            }
            const auto &recs = run.trace.records;
            CHECK(recs.size() == 1 + 2 * a.num_gates() / 2);
            CHECK(run.trace.iteration_costs.size() == 3);
            for (std::size_t i = 1; i < recs.size(); ++i) {
                CHECK(recs[i].exact_cost <= recs[i - 1].exact_cost + 1e-12);
                CHECK(recs[i].gate_d > recs[i].gate_k);
                CHECK(recs[i].tomography_evals == tomography_evals_per_update(kind));
            }
            CHECK(eval.count() == recs.back().cumulative_evals);
            CHECK(eval_count_audit(run.trace).matches_table);
            for (const UnitQuaternion &q : run.params) {
                if (is_axis_only(kind)) {
                    CHECK(q[0] == 0.0);
                }
            }
        }
    }
    Evaluator eval(cost, ShotConfig::exact());
    RunState run = start_run(OptimizerKind::Fqs, a, random_parameters(a, false, rng), eval);
    Rng p1(1);
    Rng p2(2);
    CHECK_THROWS_AS(two_gate_sweep(OptimizerKind::Fqs, PairingStrategy::Linear, a, run, eval, p1, p2),
                    ConfigError);
}
