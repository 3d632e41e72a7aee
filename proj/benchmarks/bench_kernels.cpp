// SPDX-License-Identifier: Apache-2.0
//
// isacsim - transmit covariance design for joint sensing and communication arrays
// Copyright (C) 2026 the isacsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Throughput of the parallel kernels against their serial reference twins
// on the workload they exist for: the 720 x 720 trace scan behind the
// unconstrained CRB benchmark design.

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include <benchmark/benchmark.h>

#include "isac/kernels.hpp"

using namespace isac;

namespace
{

constexpr std::size_t side = 720;

double trace_objective(std::size_t idx)
{
    double psi = 1.5707963267948966 * double(idx / side) / double(side);
    double phi = 6.283185307179586 * double(idx % side) / double(side);
    double c = std::cos(psi), s = std::sin(psi);
    double f11 = 3.1 * c * c + 1.2 * s * s + 0.35 * c * s * std::cos(phi - 0.7);
    double f22 = c * c + 0.01;
    double f12 = 0.9 * c * s * std::cos(phi);
    double schur = f11 - f12 * f12 / f22;
    return schur > 0.0 ? 1.0 / schur + 1.0 / f22 : std::numeric_limits<double>::infinity();
}

} // namespace

static void bm_grid_min(benchmark::State &state)
{
    for (auto _ : state)
    {
        GridPoint p = grid_min(side * side, trace_objective);
        benchmark::DoNotOptimize(p);
    }
    state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(side * side));
}
BENCHMARK(bm_grid_min);

static void bm_grid_min_ref(benchmark::State &state)
{
    for (auto _ : state)
    {
        GridPoint p = grid_min_ref(side * side, trace_objective);
        benchmark::DoNotOptimize(p);
    }
    state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(side * side));
}
BENCHMARK(bm_grid_min_ref);

static void bm_map_indexed(benchmark::State &state)
{
    std::vector<double> out(side * side);
    for (auto _ : state)
    {
        map_indexed(out.size(), [&](std::size_t i) { out[i] = trace_objective(i); });
        benchmark::DoNotOptimize(out.data());
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(side * side));
}
BENCHMARK(bm_map_indexed);

static void bm_map_indexed_ref(benchmark::State &state)
{
    std::vector<double> out(side * side);
    for (auto _ : state)
    {
        map_indexed_ref(out.size(), [&](std::size_t i) { out[i] = trace_objective(i); });
        benchmark::DoNotOptimize(out.data());
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(side * side));
}
BENCHMARK(bm_map_indexed_ref);

BENCHMARK_MAIN();
