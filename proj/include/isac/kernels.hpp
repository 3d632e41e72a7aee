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

#ifndef isac_kernels_H
#define isac_kernels_H

#include <cstddef>
#include <limits>
#include <stdexcept>

// Data-parallel loops used by the sweep drivers and the grid oracles.
// Each kernel has a serial *_ref twin with identical semantics; the test
// suite asserts exact equality and benchmarks/ compares their throughput.
// Results never depend on the thread count: map_indexed writes disjoint
// slots and grid_min resolves ties by the lowest index.

namespace isac
{

// Calls fn(i) for every i in [0, n). fn must only write to state owned by
// index i (typically a preallocated output slot).
template <typename Fn> void map_indexed(std::size_t n, Fn &&fn)
{
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < (long long)n; i++)
        fn((std::size_t)i);
#else
    for (std::size_t i = 0; i < n; i++)
        fn(i);
#endif
}

template <typename Fn> void map_indexed_ref(std::size_t n, Fn &&fn)
{
    for (std::size_t i = 0; i < n; i++)
        fn(i);
}

struct GridPoint
{
    std::size_t index = 0;
    double value = 0.0;
};

// Minimizes fn(i) over i in [0, n); fn must be a pure function of i.
// Ties resolve to the lowest index, which makes the result independent of
// the schedule.
template <typename Fn> GridPoint grid_min_ref(std::size_t n, Fn &&fn)
{
    if (n == 0)
        throw std::invalid_argument("grid_min: empty grid.");
    GridPoint best{n, std::numeric_limits<double>::infinity()};
    for (std::size_t i = 0; i < n; i++)
    {
        double v = fn(i);
        if (v < best.value || (v == best.value && i < best.index))
            best = {i, v};
    }
    if (best.index == n)
        throw std::invalid_argument("grid_min: objective returned no finite value.");
    return best;
}

template <typename Fn> GridPoint grid_min(std::size_t n, Fn &&fn)
{
    if (n == 0)
        throw std::invalid_argument("grid_min: empty grid.");
#ifdef _OPENMP
    GridPoint best{n, std::numeric_limits<double>::infinity()};
#pragma omp parallel
    {
        GridPoint local{n, std::numeric_limits<double>::infinity()};
#pragma omp for schedule(static) nowait
        for (long long i = 0; i < (long long)n; i++)
        {
            double v = fn((std::size_t)i);
            if (v < local.value || (v == local.value && (std::size_t)i < local.index))
                local = {(std::size_t)i, v};
        }
#pragma omp critical(isac_grid_min)
        {
            if (local.value < best.value || (local.value == best.value && local.index < best.index))
                best = local;
        }
    }
    if (best.index == n)
        throw std::invalid_argument("grid_min: objective returned no finite value.");
    return best;
#else
    return grid_min_ref(n, fn);
#endif
}

} // namespace isac

#endif
