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
#include <span>

#include "tgopt/rng.hpp"
#include "tgopt/types.hpp"

namespace tgopt {

inline constexpr double kUnitTolerance = 1e-12;

/// Unit quaternion (q0, q1, q2, q3) parameterizing q0 I - i(q1 X + q2 Y + q3 Z).
class UnitQuaternion {
  public:
    /// Throws ParameterError unless |q| = 1 within kUnitTolerance.
    explicit UnitQuaternion(const std::array<double, 4> &components);

    static UnitQuaternion identity() { return UnitQuaternion({1.0, 0.0, 0.0, 0.0}); }

    /// Normalizes an arbitrary nonzero vector.
    static UnitQuaternion normalized(const std::array<double, 4> &v);

    [[nodiscard]] const std::array<double, 4> &components() const noexcept {
        return c_;
    }
    [[nodiscard]] double operator[](std::size_t i) const { return c_[i]; }

    /// q and -q give the same channel; the representative has its first
    /// nonzero component positive.
    [[nodiscard]] UnitQuaternion canonical() const;

    bool operator==(const UnitQuaternion &) const = default;

  private:
    std::array<double, 4> c_;
};

/// Unit rotation axis for the theta = pi gates.
class UnitAxis {
  public:
    explicit UnitAxis(const std::array<double, 3> &components);

    static UnitAxis normalized(const std::array<double, 3> &v);

    [[nodiscard]] const std::array<double, 3> &components() const noexcept {
        return c_;
    }
    [[nodiscard]] double operator[](std::size_t i) const { return c_[i]; }

    /// The quaternion (0, n).
    [[nodiscard]] UnitQuaternion as_quaternion() const;

  private:
    std::array<double, 3> c_;
};

/// Index into the extended Pauli basis (I, -iX, -iY, -iZ).
class BasisIndex {
  public:
    explicit BasisIndex(int value);
    [[nodiscard]] int value() const noexcept { return value_; }

  private:
    int value_;
};

[[nodiscard]] Mat2 gate_from_quaternion(const UnitQuaternion &q);
[[nodiscard]] Mat2 gate_from_axis(const UnitAxis &n);

/// Linear extension sum_mu c_mu basis(mu); no norm requirement.
[[nodiscard]] Mat2 basis_combination(std::span<const double, 4> coeffs);

[[nodiscard]] Mat2 basis_op(BasisIndex idx);

/// (basis(i) + basis(j)) / sqrt(2). Throws ParameterError for i == j.
[[nodiscard]] Mat2 basis_sum_op(BasisIndex i, BasisIndex j);

/// Uniform on S^3 / S^2 from normalized standard Gaussians.
[[nodiscard]] UnitQuaternion random_quaternion(Rng &rng);
[[nodiscard]] UnitAxis random_axis(Rng &rng);

} // namespace tgopt
