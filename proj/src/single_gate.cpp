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
#include "tgopt/single_gate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tgopt/errors.hpp"
#include "tgopt/gates.hpp"

namespace tgopt {

namespace {

void canonicalize_sign(std::array<double, 4> &v, std::size_t dim) {
    for (std::size_t i = 0; i < dim; ++i) {
        if (std::abs(v[i]) > 1e-12) {
            if (v[i] < 0.0) {
                for (std::size_t j = 0; j < dim; ++j) {
                    v[j] = -v[j];
                }
            }
            return;
        }
    }
}

// Builds the model over basis indices [first, 4) from the insertion
// values: diagonal entries first, then the pairs (i, j), i < j, in
// lexicographic order.
QuadraticForm build_form(const Ansatz &ansatz, const ParameterSet &params,
                         std::size_t index, Evaluator &eval, int first) {
    std::vector<Mat2> ops;
    for (int i = first; i < 4; ++i) {
        ops.push_back(basis_op(BasisIndex(i)));
    }
    for (int i = first; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            ops.push_back(basis_sum_op(BasisIndex(i), BasisIndex(j)));
        }
    }
    const std::vector<double> values =
        ansatz.tomography_single(params, index, ops, eval);

    QuadraticForm form;
    form.dim = static_cast<std::size_t>(4 - first);
    for (std::size_t i = 0; i < form.dim; ++i) {
        form.at(i, i) = values[i];
    }
    std::size_t next = form.dim;
    for (std::size_t i = 0; i < form.dim; ++i) {
        for (std::size_t j = i + 1; j < form.dim; ++j) {
            // <M> with (s_i + s_j)/sqrt(2) inserted = (S_ii + S_jj)/2 + S_ij
            const double off = values[next++] - 0.5 * (form.at(i, i) + form.at(j, j));
            form.at(i, j) = off;
            form.at(j, i) = off;
        }
    }
    return form;
}

} // namespace

double QuadraticForm::evaluate(std::span<const double> v) const {
    double total = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            total += v[i] * at(i, j) * v[j];
        }
    }
    return total;
}

std::array<EigenPair, 4> symmetric_eigen(const QuadraticForm &form) {
    const std::size_t n = form.dim;
    double a[4][4] = {};
    double v[4][4] = {};
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // Symmetrize so that slightly asymmetric input is handled.
            a[i][j] = 0.5 * (form.at(i, j) + form.at(j, i));
            scale += a[i][j] * a[i][j];
        }
        v[i][i] = 1.0;
    }

    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                off += a[p][q] * a[p][q];
            }
        }
        if (off <= 1e-34 * scale || off == 0.0) {
            break;
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a[p][q] == 0.0) {
                    continue;
                }
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = std::copysign(1.0, theta) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p];
                    const double akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k];
                    const double aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v[k][p];
                    const double vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }

    std::array<std::size_t, 4> order{};
    std::iota(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n), 0);
    std::stable_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n),
                     [&](std::size_t x, std::size_t y) { return a[x][x] < a[y][y]; });
    std::array<EigenPair, 4> pairs{};
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t col = order[r];
        pairs[r].value = a[col][col];
        for (std::size_t k = 0; k < n; ++k) {
            pairs[r].vector[k] = v[k][col];
        }
        canonicalize_sign(pairs[r].vector, n);
    }
    return pairs;
}

EigenPair min_eigvec(const QuadraticForm &form) {
    if (form.dim < 1 || form.dim > 4) {
        throw ShapeError("quadratic form dimension must be 1..4");
    }
    return symmetric_eigen(form)[0];
}

QuadraticForm build_fraxis_matrix(const Ansatz &ansatz, const ParameterSet &params,
                                  std::size_t index, Evaluator &eval) {
    return build_form(ansatz, params, index, eval, 1);
}

QuadraticForm build_fqs_matrix(const Ansatz &ansatz, const ParameterSet &params,
                               std::size_t index, Evaluator &eval) {
    return build_form(ansatz, params, index, eval, 0);
}

void single_gate_sweep(OptimizerKind kind, const Ansatz &ansatz, RunState &run,
                       Evaluator &eval) {
    if (kind != OptimizerKind::Fraxis && kind != OptimizerKind::Fqs) {
        throw ConfigError("single_gate_sweep runs fraxis or fqs only");
    }
    const bool axis = kind == OptimizerKind::Fraxis;
    for (std::size_t index = 1; index <= ansatz.num_gates(); ++index) {
        const std::size_t before = eval.count();
        const QuadraticForm form =
            axis ? build_fraxis_matrix(ansatz, run.params, index, eval)
                 : build_fqs_matrix(ansatz, run.params, index, eval);
        const std::size_t tomography = eval.count() - before;
        const EigenPair best = min_eigvec(form);

        ParameterSet candidate = run.params;
        candidate[index - 1] =
            axis ? UnitAxis::normalized({best.vector[0], best.vector[1], best.vector[2]})
                       .as_quaternion()
                 : UnitQuaternion::normalized(best.vector);
        commit_update(ansatz, run, eval, std::move(candidate), index, 0, tomography);
    }
    run.trace.iteration_costs.push_back(run.trace.records.back().exact_cost);
}

} // namespace tgopt
