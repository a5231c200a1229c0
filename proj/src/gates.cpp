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
#include "tgopt/gates.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tgopt/errors.hpp"

namespace tgopt {

namespace {

template <std::size_t N> double norm_of(const std::array<double, N> &v) {
    double s = 0.0;
    for (double x : v) {
        s += x * x;
    }
    return std::sqrt(s);
}

template <std::size_t N> void require_unit(const std::array<double, N> &v) {
    for (double x : v) {
        if (!std::isfinite(x)) {
            throw ParameterError("non-finite gate parameter");
        }
    }
    const double n = norm_of(v);
    if (std::abs(n * n - 1.0) > kUnitTolerance) {
        throw ParameterError("gate parameter has norm " + std::to_string(n) +
                             ", expected 1");
    }
}

template <std::size_t N>
std::array<double, N> normalize(const std::array<double, N> &v) {
    const double n = norm_of(v);
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw ParameterError("cannot normalize a zero or non-finite vector");
    }
    std::array<double, N> out{};
    for (std::size_t i = 0; i < N; ++i) {
        out[i] = v[i] / n;
    }
    return out;
}

// The four basis matrices, row-major.
const std::array<Mat2, 4> &basis_table() {
    static const std::array<Mat2, 4> table = {
        Mat2{1.0, 0.0, 0.0, 1.0},
        Mat2{0.0, -kI, -kI, 0.0},
        Mat2{0.0, -1.0, 1.0, 0.0},
        Mat2{-kI, 0.0, 0.0, kI},
    };
    return table;
}

} // namespace

UnitQuaternion::UnitQuaternion(const std::array<double, 4> &components)
    : c_(components) {
    require_unit(c_);
}

UnitQuaternion UnitQuaternion::normalized(const std::array<double, 4> &v) {
    return UnitQuaternion(normalize(v));
}

UnitQuaternion UnitQuaternion::canonical() const {
    for (double x : c_) {
        if (x > 0.0) {
            return *this;
        }
        if (x < 0.0) {
            return UnitQuaternion({-c_[0], -c_[1], -c_[2], -c_[3]});
        }
    }
    return *this;
}

UnitAxis::UnitAxis(const std::array<double, 3> &components) : c_(components) {
    require_unit(c_);
}

UnitAxis UnitAxis::normalized(const std::array<double, 3> &v) {
    return UnitAxis(normalize(v));
}

UnitQuaternion UnitAxis::as_quaternion() const {
    return UnitQuaternion({0.0, c_[0], c_[1], c_[2]});
}

BasisIndex::BasisIndex(int value) : value_(value) {
    if (value < 0 || value > 3) {
        throw ParameterError("basis index " + std::to_string(value) +
                             " outside {0,1,2,3}");
    }
}

Mat2 basis_combination(std::span<const double, 4> coeffs) {
    // q0 I - i(q1 X + q2 Y + q3 Z) = [[q0 - i q3, -q2 - i q1], [q2 - i q1, q0 + i q3]]
    return {Complex{coeffs[0], -coeffs[3]}, Complex{-coeffs[2], -coeffs[1]},
            Complex{coeffs[2], -coeffs[1]}, Complex{coeffs[0], coeffs[3]}};
}

Mat2 gate_from_quaternion(const UnitQuaternion &q) {
    return basis_combination(q.components());
}

Mat2 gate_from_axis(const UnitAxis &n) {
    return gate_from_quaternion(n.as_quaternion());
}

Mat2 basis_op(BasisIndex idx) {
    return basis_table()[static_cast<std::size_t>(idx.value())];
}

Mat2 basis_sum_op(BasisIndex i, BasisIndex j) {
    if (i.value() == j.value()) {
        throw ParameterError("basis_sum_op requires distinct indices");
    }
    return (1.0 / std::numbers::sqrt2) * (basis_op(i) + basis_op(j));
}

UnitQuaternion random_quaternion(Rng &rng) {
    std::array<double, 4> v{};
    for (double &x : v) {
        x = rng.normal();
    }
    return UnitQuaternion::normalized(v);
}

UnitAxis random_axis(Rng &rng) {
    std::array<double, 3> v{};
    for (double &x : v) {
        x = rng.normal();
    }
    return UnitAxis::normalized(v);
}

} // namespace tgopt
