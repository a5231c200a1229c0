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
// Serial reference kernels against their OpenMP counterparts. Run with
// OMP_NUM_THREADS set to compare thread counts.
#include <benchmark/benchmark.h>

#include <vector>

#include "tgopt/kernels.hpp"
#include "tgopt/rng.hpp"

using namespace tgopt;

namespace {

std::vector<Complex> random_amps(std::size_t n) {
    Rng rng(n);
    std::vector<Complex> a(std::size_t{1} << n);
    for (Complex &x : a) {
        x = Complex(rng.normal(), rng.normal());
    }
    return a;
}

const Mat2 kHadamardLike{0.6, 0.8, 0.8, -0.6};

template <void (*Apply)(std::span<Complex>, std::size_t, std::size_t, const Mat2 &)>
void BM_apply_1q(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<Complex> a = random_amps(n);
    std::size_t t = 0;
    for (auto _ : state) {
        Apply(a, n, t, kHadamardLike);
        t = (t + 1) % n;
        benchmark::DoNotOptimize(a.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(a.size()));
}

template <void (*Apply)(std::span<Complex>, std::size_t, std::size_t, std::size_t)>
void BM_apply_cz(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<Complex> a = random_amps(n);
    for (auto _ : state) {
        Apply(a, n, 0, n - 1);
        benchmark::DoNotOptimize(a.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(a.size()));
}

template <Complex (*Expect)(std::span<const Complex>, const kernels::PauliMasks &)>
void BM_pauli_expectation(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const std::vector<Complex> a = random_amps(n);
    // X on qubit 0, Y on qubit 1, Z on the last qubit.
    kernels::PauliMasks m;
    m.flip = kernels::bit_of(n, 0) | kernels::bit_of(n, 1);
    m.phase = kernels::bit_of(n, 1) | kernels::bit_of(n, n - 1);
    m.num_y = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(Expect(a, m));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(a.size()));
}

} // namespace

BENCHMARK(BM_apply_1q<kernels::serial::apply_1q>)->Name("apply_1q/serial")->DenseRange(10, 20, 5);
BENCHMARK(BM_apply_1q<kernels::omp::apply_1q>)->Name("apply_1q/omp")->DenseRange(10, 20, 5);
BENCHMARK(BM_apply_cz<kernels::serial::apply_cz>)->Name("apply_cz/serial")->DenseRange(10, 20, 5);
BENCHMARK(BM_apply_cz<kernels::omp::apply_cz>)->Name("apply_cz/omp")->DenseRange(10, 20, 5);
BENCHMARK(BM_pauli_expectation<kernels::serial::pauli_expectation>)
    ->Name("pauli_expectation/serial")
    ->DenseRange(10, 20, 5);
BENCHMARK(BM_pauli_expectation<kernels::omp::pauli_expectation>)
    ->Name("pauli_expectation/omp")
    ->DenseRange(10, 20, 5);

BENCHMARK_MAIN();
