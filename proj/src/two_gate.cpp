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
#include "tgopt/two_gate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "tgopt/errors.hpp"
#include "tgopt/single_gate.hpp"

namespace tgopt {

using Vec4 = CoeffTensor::Vec4;
using Mat4 = CoeffTensor::Mat4;

std::string_view to_string(PairingStrategy strategy) {
    switch (strategy) {
    case PairingStrategy::Linear:
        return "linear";
    case PairingStrategy::Random:
        return "random";
    case PairingStrategy::Opposite:
        return "opposite";
    case PairingStrategy::HalfShifted:
        return "half_shifted";
    }
    return "?";
}

PairingStrategy parse_strategy(std::string_view name) {
    for (PairingStrategy s : {PairingStrategy::Linear, PairingStrategy::Random,
                              PairingStrategy::Opposite, PairingStrategy::HalfShifted}) {
        if (to_string(s) == name) {
            return s;
        }
    }
    if (name == "half-shifted" || name == "hs") {
        return PairingStrategy::HalfShifted;
    }
    if (name == "opp") {
        return PairingStrategy::Opposite;
    }
    throw ConfigError("unknown pairing strategy '" + std::string(name) + "'");
}

std::vector<GatePair> make_pairs(PairingStrategy strategy, std::size_t num_gates,
                                 Rng &rng) {
    if (num_gates < 2 || num_gates % 2 != 0) {
        throw ConfigError("pairing needs an even gate count >= 2, got " +
                          std::to_string(num_gates));
    }
    const std::size_t half = num_gates / 2;
    std::vector<GatePair> pairs;
    pairs.reserve(half);
    switch (strategy) {
    case PairingStrategy::Linear:
        for (std::size_t i = 0; i < half; ++i) {
            pairs.push_back({2 * i + 1, 2 * i + 2});
        }
        break;
    case PairingStrategy::Opposite:
        for (std::size_t i = 1; i <= half; ++i) {
            pairs.push_back({i, num_gates + 1 - i});
        }
        break;
    case PairingStrategy::HalfShifted:
        for (std::size_t i = 1; i <= half; ++i) {
            pairs.push_back({i, i + half});
        }
        break;
    case PairingStrategy::Random: {
        std::vector<std::size_t> perm(num_gates);
        std::iota(perm.begin(), perm.end(), std::size_t{1});
        // Fisher-Yates on the portable bounded draw.
        for (std::size_t i = num_gates - 1; i > 0; --i) {
            std::swap(perm[i], perm[rng.below(i + 1)]);
        }
        for (std::size_t i = 0; i < half; ++i) {
            pairs.push_back({perm[2 * i], perm[2 * i + 1]});
        }
        break;
    }
    }
    return pairs;
}

std::size_t CoeffTensor::pair_slot(std::size_t a, std::size_t b) {
    // (0,1) (0,2) (0,3) (1,2) (1,3) (2,3)
    static constexpr std::size_t slot[4][4] = {
        {6, 0, 1, 2}, {0, 6, 3, 4}, {1, 3, 6, 5}, {2, 4, 5, 6}};
    if (a >= 4 || b >= 4 || a == b) {
        throw IndexError("invalid basis index pair");
    }
    return slot[a][b];
}

Mat4 CoeffTensor::block_d(const Vec4 &qk) const {
    Mat4 b{};
    for (std::size_t mu = 0; mu < 4; ++mu) {
        double s = 0.0;
        for (std::size_t a = 0; a < 4; ++a) {
            s += qk[a] * qk[a] * diag(mu, a);
            for (std::size_t c = a + 1; c < 4; ++c) {
                s += qk[a] * qk[c] * cubic_k(mu, a, c);
            }
        }
        b[mu * 4 + mu] = s;
        for (std::size_t nu = mu + 1; nu < 4; ++nu) {
            double m = 0.0;
            for (std::size_t a = 0; a < 4; ++a) {
                m += qk[a] * qk[a] * cubic_d(mu, nu, a);
                for (std::size_t c = a + 1; c < 4; ++c) {
                    m += qk[a] * qk[c] * quartic(mu, nu, a, c);
                }
            }
            b[mu * 4 + nu] = 0.5 * m;
            b[nu * 4 + mu] = 0.5 * m;
        }
    }
    return b;
}

Mat4 CoeffTensor::block_k(const Vec4 &qd) const {
    Mat4 b{};
    for (std::size_t a = 0; a < 4; ++a) {
        double s = 0.0;
        for (std::size_t mu = 0; mu < 4; ++mu) {
            s += qd[mu] * qd[mu] * diag(mu, a);
            for (std::size_t nu = mu + 1; nu < 4; ++nu) {
                s += qd[mu] * qd[nu] * cubic_d(mu, nu, a);
            }
        }
        b[a * 4 + a] = s;
        for (std::size_t c = a + 1; c < 4; ++c) {
            double m = 0.0;
            for (std::size_t mu = 0; mu < 4; ++mu) {
                m += qd[mu] * qd[mu] * cubic_k(mu, a, c);
                for (std::size_t nu = mu + 1; nu < 4; ++nu) {
                    m += qd[mu] * qd[nu] * quartic(mu, nu, a, c);
                }
            }
            b[a * 4 + c] = 0.5 * m;
            b[c * 4 + a] = 0.5 * m;
        }
    }
    return b;
}

namespace {

double quadratic(const Mat4 &b, const Vec4 &v) {
    double total = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            total += v[i] * b[i * 4 + j] * v[j];
        }
    }
    return total;
}

Vec4 times(const Mat4 &b, const Vec4 &v, double scale) {
    Vec4 out{};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            out[i] += b[i * 4 + j] * v[j];
        }
        out[i] *= scale;
    }
    return out;
}

double dot(const Vec4 &a, const Vec4 &b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

} // namespace

double CoeffTensor::evaluate(const Vec4 &qd, const Vec4 &qk) const {
    return quadratic(block_d(qk), qd);
}

std::pair<Vec4, Vec4> CoeffTensor::gradient(const Vec4 &qd, const Vec4 &qk) const {
    return {times(block_d(qk), qd, 2.0), times(block_k(qd), qk, 2.0)};
}

bool CoeffTensor::all_finite() const {
    const auto finite = [](const auto &arr) {
        return std::all_of(arr.begin(), arr.end(),
                           [](double x) { return std::isfinite(x); });
    };
    return finite(diag_) && finite(cubic_k_) && finite(cubic_d_) && finite(quartic_);
}

CoeffTensor build_coeff_tensor(const Ansatz &ansatz, const ParameterSet &params,
                               std::size_t d, std::size_t k, Evaluator &eval,
                               TwoGateMode mode) {
    if (d == k) {
        throw ParameterError("two-gate update needs distinct gates, got " +
                             std::to_string(d) + " twice");
    }
    if (d < k) {
        std::swap(d, k);
    }
    CoeffTensor t(mode, d, k);
    const std::size_t lo = t.first_index();
    const std::size_t nb = 4 - lo;

    // Insertions: basis lo..3 at positions 0..nb-1, then the pairs.
    std::vector<Mat2> ops;
    std::array<std::size_t, 4> basis_pos{};
    std::array<std::array<std::size_t, 4>, 4> sum_pos{};
    for (std::size_t i = lo; i < 4; ++i) {
        basis_pos[i] = ops.size();
        ops.push_back(basis_op(BasisIndex(static_cast<int>(i))));
    }
    for (std::size_t i = lo; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            sum_pos[i][j] = ops.size();
            ops.push_back(basis_sum_op(BasisIndex(static_cast<int>(i)),
                                       BasisIndex(static_cast<int>(j))));
        }
    }
    const std::size_t nops = ops.size();
    const std::vector<double> table =
        ansatz.tomography_pair(params, d, ops, k, ops, eval);
    const auto T = [&](std::size_t pos_d, std::size_t pos_k) {
        return table[pos_d * nops + pos_k];
    };
    const auto B = [&](std::size_t i) { return basis_pos[i]; };
    const auto S = [&](std::size_t i, std::size_t j) { return sum_pos[i][j]; };

    for (std::size_t mu = lo; mu < 4; ++mu) {
        for (std::size_t a = lo; a < 4; ++a) {
            t.diag(mu, a) = T(B(mu), B(a));
        }
    }
    for (std::size_t mu = lo; mu < 4; ++mu) {
        for (std::size_t a = lo; a < 4; ++a) {
            for (std::size_t b = a + 1; b < 4; ++b) {
                t.cubic_k(mu, a, b) =
                    2.0 * T(B(mu), S(a, b)) - T(B(mu), B(a)) - T(B(mu), B(b));
            }
        }
    }
    for (std::size_t mu = lo; mu < 4; ++mu) {
        for (std::size_t nu = mu + 1; nu < 4; ++nu) {
            for (std::size_t a = lo; a < 4; ++a) {
                t.cubic_d(mu, nu, a) =
                    2.0 * T(S(mu, nu), B(a)) - T(B(mu), B(a)) - T(B(nu), B(a));
            }
        }
    }
    for (std::size_t mu = lo; mu < 4; ++mu) {
        for (std::size_t nu = mu + 1; nu < 4; ++nu) {
            for (std::size_t a = lo; a < 4; ++a) {
                for (std::size_t b = a + 1; b < 4; ++b) {
                    t.quartic(mu, nu, a, b) =
                        4.0 * T(S(mu, nu), S(a, b)) + T(B(mu), B(a)) +
                        T(B(mu), B(b)) + T(B(nu), B(a)) + T(B(nu), B(b)) -
                        2.0 * T(B(mu), S(a, b)) - 2.0 * T(B(nu), S(a, b)) -
                        2.0 * T(S(mu, nu), B(a)) - 2.0 * T(S(mu, nu), B(b));
                }
            }
        }
    }
    (void)nb;
    return t;
}

double eval_quartic(const CoeffTensor &t, const UnitQuaternion &qd,
                    const UnitQuaternion &qk) {
    if (t.mode() != TwoGateMode::Tgfqs) {
        throw ParameterError("quaternion arguments need a TGFQS tensor");
    }
    return t.evaluate(qd.components(), qk.components());
}

double eval_quartic(const CoeffTensor &t, const UnitAxis &nd, const UnitAxis &nk) {
    if (t.mode() != TwoGateMode::Tgf) {
        throw ParameterError("axis arguments need a TGF tensor");
    }
    return t.evaluate(nd.as_quaternion().components(), nk.as_quaternion().components());
}

namespace {

struct LocalProblem {
    const CoeffTensor &tensor;
    std::size_t lo;

    void project(Vec4 &v) const {
        if (lo == 1) {
            v[0] = 0.0;
        }
    }

    [[nodiscard]] Vec4 normalized(Vec4 v) const {
        project(v);
        const double n = std::sqrt(dot(v, v));
        for (double &x : v) {
            x /= n;
        }
        return v;
    }

    // Minimum eigenvector of the active block of `b`.
    [[nodiscard]] Vec4 block_minimizer(const Mat4 &b) const {
        QuadraticForm form;
        form.dim = 4 - lo;
        for (std::size_t i = 0; i < form.dim; ++i) {
            for (std::size_t j = 0; j < form.dim; ++j) {
                form.at(i, j) = b[(i + lo) * 4 + (j + lo)];
            }
        }
        const EigenPair p = min_eigvec(form);
        Vec4 v{};
        for (std::size_t i = 0; i < form.dim; ++i) {
            v[i + lo] = p.vector[i];
        }
        return normalized(v);
    }

    [[nodiscard]] SphereMinimum solve(Vec4 qd, Vec4 qk,
                                      const MinimizerOptions &opt) const {
        qd = normalized(qd);
        qk = normalized(qk);
        double f = tensor.evaluate(qd, qk);

        for (std::size_t sweep = 0; sweep < opt.max_block_sweeps; ++sweep) {
            const Vec4 nd = block_minimizer(tensor.block_d(qk));
            const Vec4 nk = block_minimizer(tensor.block_k(nd));
            const double fn = tensor.evaluate(nd, nk);
            if (!(fn <= f)) {
                break;
            }
            const double gain = f - fn;
            qd = nd;
            qk = nk;
            f = fn;
            if (gain <= 1e-15 * (1.0 + std::abs(f))) {
                break;
            }
        }

        double step = 1.0;
        for (std::size_t it = 0; it < opt.max_iterations; ++it) {
            auto [gd, gk] = tensor.gradient(qd, qk);
            project(gd);
            project(gk);
            const double pd = dot(qd, gd);
            const double pk = dot(qk, gk);
            for (std::size_t i = 0; i < 4; ++i) {
                gd[i] -= pd * qd[i];
                gk[i] -= pk * qk[i];
            }
            const double g2 = dot(gd, gd) + dot(gk, gk);
            if (std::sqrt(g2) < opt.gradient_tolerance) {
                break;
            }
            step = std::min(step * 2.0, 1e6);
            bool moved = false;
            while (step > 1e-18) {
                Vec4 cd{};
                Vec4 ck{};
                for (std::size_t i = 0; i < 4; ++i) {
                    cd[i] = qd[i] - step * gd[i];
                    ck[i] = qk[i] - step * gk[i];
                }
                cd = normalized(cd);
                ck = normalized(ck);
                const double fc = tensor.evaluate(cd, ck);
                if (fc <= f - 1e-4 * step * g2) {
                    qd = cd;
                    qk = ck;
                    f = fc;
                    moved = true;
                    break;
                }
                step *= 0.5;
            }
            if (!moved) {
                break;
            }
        }
        return {qd, qk, f};
    }
};

Vec4 random_start(Rng &rng, std::size_t lo) {
    Vec4 v{};
    for (std::size_t i = lo; i < 4; ++i) {
        v[i] = rng.normal();
    }
    return v;
}

} // namespace

SphereMinimum minimize_on_spheres(const CoeffTensor &t, const Vec4 &start_d,
                                  const Vec4 &start_k, const MinimizerOptions &options) {
    const LocalProblem problem{t, t.first_index()};
    SphereMinimum best = problem.solve(start_d, start_k, options);
    Rng rng(options.seed, Stream::Minimizer);
    for (std::size_t s = 1; s < options.starts; ++s) {
        const Vec4 sd = random_start(rng, problem.lo);
        const Vec4 sk = random_start(rng, problem.lo);
        const SphereMinimum candidate = problem.solve(sd, sk, options);
        if (candidate.value < best.value) {
            best = candidate;
        }
    }
    return best;
}

void two_gate_sweep(OptimizerKind kind, PairingStrategy strategy,
                    const Ansatz &ansatz, RunState &run, Evaluator &eval,
                    Rng &pairing_rng, Rng &minimizer_rng,
                    const MinimizerOptions &options) {
    if (kind != OptimizerKind::Tgf && kind != OptimizerKind::Tgfqs) {
        throw ConfigError("two_gate_sweep runs tgf or tgfqs only");
    }
    const TwoGateMode mode = kind == OptimizerKind::Tgf ? TwoGateMode::Tgf
                                                        : TwoGateMode::Tgfqs;
    for (const GatePair &pair : make_pairs(strategy, ansatz.num_gates(), pairing_rng)) {
        const std::size_t d = std::max(pair.first, pair.second);
        const std::size_t k = std::min(pair.first, pair.second);
        const std::size_t before = eval.count();
        const CoeffTensor tensor = build_coeff_tensor(ansatz, run.params, d, k, eval, mode);
        const std::size_t tomography = eval.count() - before;

        MinimizerOptions opt = options;
        opt.seed = minimizer_rng.next_u64();
        const SphereMinimum best = minimize_on_spheres(
            tensor, run.params[d - 1].components(), run.params[k - 1].components(), opt);

        ParameterSet candidate = run.params;
        candidate[d - 1] = UnitQuaternion::normalized(best.qd).canonical();
        candidate[k - 1] = UnitQuaternion::normalized(best.qk).canonical();
        commit_update(ansatz, run, eval, std::move(candidate), d, k, tomography);
    }
    run.trace.iteration_costs.push_back(run.trace.records.back().exact_cost);
}

} // namespace tgopt
