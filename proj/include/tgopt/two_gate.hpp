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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "tgopt/ansatz.hpp"
#include "tgopt/cost.hpp"
#include "tgopt/gates.hpp"
#include "tgopt/trace.hpp"

namespace tgopt {

enum class PairingStrategy { Linear, Random, Opposite, HalfShifted };

[[nodiscard]] std::string_view to_string(PairingStrategy strategy);
[[nodiscard]] PairingStrategy parse_strategy(std::string_view name);

/// Two 1-based gate indices updated together.
struct GatePair {
    std::size_t first;
    std::size_t second;
    bool operator==(const GatePair &) const = default;
};

/**
 * Partition of gates 1..D into D/2 disjoint pairs:
 *   linear       (1,2), (3,4), ..., (D-1,D)
 *   random       consecutive entries of a fresh uniform permutation
 *   opposite     (1,D), (2,D-1), ..., (D/2, D/2+1)
 *   half_shifted (1,D/2+1), (2,D/2+2), ..., (D/2,D)
 * Throws ConfigError for odd or zero D. Only `Random` consumes `rng`.
 */
[[nodiscard]] std::vector<GatePair> make_pairs(PairingStrategy strategy,
                                               std::size_t num_gates, Rng &rng);

enum class TwoGateMode {
    Tgf,   ///< axis gates, basis indices 1..3
    Tgfqs, ///< quaternion gates, basis indices 0..3
};

/**
 * Coefficients of the quartic two-gate model
 *
 *   f(qd, qk) = sum_{mu,a}            qd_mu^2 qk_a^2       R(mu; a)
 *             + sum_{mu<nu, a}        qd_mu qd_nu qk_a^2   R(mu,nu; a)
 *             + sum_{mu, a<b}         qd_mu^2 qk_a qk_b    R(mu; a,b)
 *             + sum_{mu<nu, a<b}      qd_mu qd_nu qk_a qk_b R(mu,nu; a,b)
 *
 * where qd belongs to the later gate `gate_d` and qk to the earlier gate
 * `gate_k`. Every mixed coefficient already holds the sum over both index
 * orders, so each ordered monomial appears once. In TGF mode entries with
 * index 0 are zero.
 */
class CoeffTensor {
  public:
    using Vec4 = std::array<double, 4>;
    using Mat4 = std::array<double, 16>;

    explicit CoeffTensor(TwoGateMode mode, std::size_t gate_d = 0,
                         std::size_t gate_k = 0)
        : mode_(mode), gate_d_(gate_d), gate_k_(gate_k) {}

    [[nodiscard]] TwoGateMode mode() const noexcept { return mode_; }
    [[nodiscard]] std::size_t first_index() const noexcept {
        return mode_ == TwoGateMode::Tgf ? 1 : 0;
    }
    [[nodiscard]] std::size_t gate_d() const noexcept { return gate_d_; }
    [[nodiscard]] std::size_t gate_k() const noexcept { return gate_k_; }

    /// Slot of the ordered pair (a, b), a < b, among the six pairs of 0..3.
    [[nodiscard]] static std::size_t pair_slot(std::size_t a, std::size_t b);

    double &diag(std::size_t mu, std::size_t a) { return diag_[mu * 4 + a]; }
    double &cubic_k(std::size_t mu, std::size_t a, std::size_t b) {
        return cubic_k_[mu * 6 + pair_slot(a, b)];
    }
    double &cubic_d(std::size_t mu, std::size_t nu, std::size_t a) {
        return cubic_d_[pair_slot(mu, nu) * 4 + a];
    }
    double &quartic(std::size_t mu, std::size_t nu, std::size_t a, std::size_t b) {
        return quartic_[pair_slot(mu, nu) * 6 + pair_slot(a, b)];
    }
    [[nodiscard]] double diag(std::size_t mu, std::size_t a) const {
        return diag_[mu * 4 + a];
    }
    [[nodiscard]] double cubic_k(std::size_t mu, std::size_t a, std::size_t b) const {
        return cubic_k_[mu * 6 + pair_slot(a, b)];
    }
    [[nodiscard]] double cubic_d(std::size_t mu, std::size_t nu, std::size_t a) const {
        return cubic_d_[pair_slot(mu, nu) * 4 + a];
    }
    [[nodiscard]] double quartic(std::size_t mu, std::size_t nu, std::size_t a,
                                 std::size_t b) const {
        return quartic_[pair_slot(mu, nu) * 6 + pair_slot(a, b)];
    }

    /// The polynomial at arbitrary (not necessarily unit) vectors.
    [[nodiscard]] double evaluate(const Vec4 &qd, const Vec4 &qk) const;

    /// Symmetric B with f = qd^T B qd for fixed qk.
    [[nodiscard]] Mat4 block_d(const Vec4 &qk) const;
    /// Symmetric B with f = qk^T B qk for fixed qd.
    [[nodiscard]] Mat4 block_k(const Vec4 &qd) const;

    /// Euclidean gradient (df/dqd, df/dqk).
    [[nodiscard]] std::pair<Vec4, Vec4> gradient(const Vec4 &qd, const Vec4 &qk) const;

    [[nodiscard]] bool all_finite() const;

  private:
    TwoGateMode mode_;
    std::size_t gate_d_;
    std::size_t gate_k_;
    std::array<double, 16> diag_{};
    std::array<double, 24> cubic_k_{};
    std::array<double, 24> cubic_d_{};
    std::array<double, 36> quartic_{};
};

/**
 * Reconstructs the quartic model of gates (d, k) from 36 (TGF) or 100
 * (TGFQS) circuit evaluations, one per pair of insertion operators, each
 * used once. The earlier of the two gates takes the inner (k) slot
 * regardless of argument order. Throws ParameterError for d == k.
 */
[[nodiscard]] CoeffTensor build_coeff_tensor(const Ansatz &ansatz,
                                             const ParameterSet &params,
                                             std::size_t d, std::size_t k,
                                             Evaluator &eval, TwoGateMode mode);

/// TGFQS tensors only; throws ParameterError otherwise.
[[nodiscard]] double eval_quartic(const CoeffTensor &t, const UnitQuaternion &qd,
                                  const UnitQuaternion &qk);
/// TGF tensors only; throws ParameterError otherwise.
[[nodiscard]] double eval_quartic(const CoeffTensor &t, const UnitAxis &nd,
                                  const UnitAxis &nk);

struct MinimizerOptions {
    std::size_t starts = 8; ///< incumbent + (starts - 1) random points
    std::size_t max_iterations = 500;
    double gradient_tolerance = 1e-10;
    std::size_t max_block_sweeps = 200;
    std::uint64_t seed = 0;
};

struct SphereMinimum {
    CoeffTensor::Vec4 qd{};
    CoeffTensor::Vec4 qk{};
    double value = 0.0;
};

/**
 * Minimizes the model over |qd| = |qk| = 1 (with q_0 = 0 in TGF mode).
 *
 * Each start first runs exact block-coordinate steps, which are minimum
 * eigenvectors of block_d / block_k and never increase f, then Riemannian
 * gradient descent with Armijo backtracking and normalization retraction
 * until the tangent gradient norm drops below the tolerance. The best
 * start wins; since the incumbent is a start, the returned value never
 * exceeds f(start_d, start_k).
 */
[[nodiscard]] SphereMinimum minimize_on_spheres(const CoeffTensor &t,
                                                const CoeffTensor::Vec4 &start_d,
                                                const CoeffTensor::Vec4 &start_k,
                                                const MinimizerOptions &options = {});

/**
 * One iteration of the two-gate optimizer: builds the pair sequence, then
 * for each pair reconstructs the model, minimizes it and commits the pair
 * if the measured cost improves.
 */
void two_gate_sweep(OptimizerKind kind, PairingStrategy strategy,
                    const Ansatz &ansatz, RunState &run, Evaluator &eval,
                    Rng &pairing_rng, Rng &minimizer_rng,
                    const MinimizerOptions &options = {});

} // namespace tgopt
