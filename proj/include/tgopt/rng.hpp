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

#include <cstdint>
#include <random>

namespace tgopt {

/// SplitMix64 finalizer. Used to derive independent seeds from
/// (base seed, stream tag, counter) triples.
[[nodiscard]] constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27U)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31U);
}

[[nodiscard]] constexpr std::uint64_t derive_seed(std::uint64_t base,
                                                  std::uint64_t tag,
                                                  std::uint64_t counter = 0) {
    return splitmix64(splitmix64(base ^ splitmix64(tag)) + counter);
}

/// Named streams split from one per-run seed.
enum class Stream : std::uint64_t {
    ParameterInit = 1,
    Pairing = 2,
    Shots = 3,
    Target = 4,
    Minimizer = 5,
};

/**
 * Portable random source. The engine is std::mt19937_64, whose output
 * sequence is fixed by the C++ standard; every derived quantity below uses
 * only that raw output (no std:: distributions, whose algorithms are
 * implementation-defined), so traces are bit-reproducible across standard
 * libraries.
 */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    Rng(std::uint64_t base, Stream stream, std::uint64_t counter = 0)
        : engine_(derive_seed(base, static_cast<std::uint64_t>(stream),
                              counter)) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11U) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound), bound > 0, without modulo bias.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = (~std::uint64_t{0}) - ((~std::uint64_t{0}) % bound);
        std::uint64_t x = engine_();
        while (x >= limit) {
            x = engine_();
        }
        return x % bound;
    }

    /// Standard normal via the Box-Muller transform.
    double normal();

    /// Number of successes in `trials` Bernoulli(p) draws.
    std::uint64_t bernoulli_count(std::uint64_t trials, double p);

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace tgopt
