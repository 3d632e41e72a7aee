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

#include <cmath>
#include <stdexcept>

#include "isac/scenario.hpp"

namespace isac
{

void Scenario::validate() const
{
    if (n_t < 2)
        throw std::invalid_argument("n_t must be at least 2.");
    if (n_r < 2)
        throw std::invalid_argument("n_r must be at least 2.");
    if (targets.empty())
        throw std::invalid_argument("At least one target is required.");
    if (P <= 0.0)
        throw std::invalid_argument("P must be positive.");
    if (sigma_s_sq <= 0.0)
        throw std::invalid_argument("sigma_s_sq must be positive.");
    if (sigma_c_sq <= 0.0)
        throw std::invalid_argument("sigma_c_sq must be positive.");
    if (T < n_t)
        throw std::invalid_argument("T must be at least n_t.");

    const double half_pi = 1.5707963267948966;
    for (size_t k = 0; k < targets.size(); k++)
    {
        double th = targets[k].theta;
        if (!(th > -half_pi && th < half_pi))
            throw std::invalid_argument("Target angles must lie strictly inside (-pi/2, pi/2).");
        for (size_t j = 0; j < k; j++)
            if (targets[j].theta == th)
                throw std::invalid_argument("Target angles must be pairwise distinct.");
    }
}

double Scenario::theta() const
{
    if (targets.size() != 1)
        throw std::invalid_argument("Single-target accessor called with K != 1.");
    return targets[0].theta;
}

std::complex<double> Scenario::alpha() const
{
    if (targets.size() != 1)
        throw std::invalid_argument("Single-target accessor called with K != 1.");
    return targets[0].alpha;
}

void SweepSpec::validate() const
{
    if (gamma_points < 1)
        throw std::invalid_argument("gamma_points must be at least 1.");
    if (channels < 1)
        throw std::invalid_argument("channels must be at least 1.");
    if (gamma_min_frac < 0.0 || gamma_max_frac < gamma_min_frac)
        throw std::invalid_argument("Rate grid fractions must satisfy 0 <= gamma_min_frac <= gamma_max_frac.");
    if (Gamma1_frac < 0.0 || Gamma2_frac < Gamma1_frac || Gamma2_frac > 1.0)
        throw std::invalid_argument("Correlation interval must satisfy 0 <= Gamma1_frac <= Gamma2_frac <= 1.");
}

Scenario default_scenario()
{
    Scenario scn;
    scn.n_t = 10;
    scn.n_r = 12;
    scn.targets = {Target{15.0 * 3.141592653589793 / 180.0, {1.0, 0.0}}};
    scn.T = 30;
    scn.P = 100.0;
    scn.sigma_s_sq = 1.0;
    scn.sigma_c_sq = 1.0;
    scn.seed = 1;
    return scn;
}

} // namespace isac
