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
#include "tgopt/rng.hpp"

#include <cmath>
#include <numbers>

namespace tgopt {

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // 1 - uniform() lies in (0, 1], so the log is finite.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

std::uint64_t Rng::bernoulli_count(std::uint64_t trials, double p) {
    if (p >= 1.0) {
        return trials;
    }
    if (p <= 0.0) {
        return 0;
    }
    // A raw 64-bit draw x succeeds when x < p * 2^64.
    const auto threshold = static_cast<std::uint64_t>(std::ldexp(p, 64));
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        hits += static_cast<std::uint64_t>(engine_() < threshold);
    }
    return hits;
}

} // namespace tgopt
