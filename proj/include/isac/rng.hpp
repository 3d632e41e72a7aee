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

#ifndef isac_rng_H
#define isac_rng_H

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace isac
{

// Seeded random source with a fully pinned algorithm so that draws reproduce
// across platforms and standard library versions:
//
//   engine    mt19937_64 (bit stream fixed by the C++ standard)
//   uniform   top 53 bits of one engine output, scaled by 2^-53 -> [0, 1)
//   gaussian  Box-Muller on (1 - u1, u2), pairs cached
//   CN(0,1)   (x + i y) / sqrt(2) with x, y independent standard gaussians
//
// std::normal_distribution is deliberately avoided; its output sequence is
// implementation defined.
class Rng
{
  public:
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    double uniform() // in [0, 1)
    {
        return double(eng() >> 11) * 0x1.0p-53;
    }

    double gauss()
    {
        if (have_spare)
        {
            have_spare = false;
            return spare;
        }
        double u1 = 1.0 - uniform(); // in (0, 1], keeps the log finite
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double t = 6.283185307179586 * u2;
        spare = r * std::sin(t);
        have_spare = true;
        return r * std::cos(t);
    }

    std::complex<double> cgauss() // circularly symmetric, unit variance
    {
        double re = gauss();
        double im = gauss();
        return {re * 0.7071067811865476, im * 0.7071067811865476};
    }

  private:
    std::mt19937_64 eng;
    bool have_spare = false;
    double spare = 0.0;
};

} // namespace isac

#endif
