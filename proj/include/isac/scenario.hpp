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

#ifndef isac_scenario_H
#define isac_scenario_H

#include <complex>
#include <cstdint>
#include <vector>

namespace isac
{

struct Target
{
    double theta = 0.0;                      // angle in [rad], inside (-pi/2, pi/2)
    std::complex<double> alpha = {1.0, 0.0}; // complex reflection coefficient
};

// Physical parameters of one experiment. All powers are linear mW; dBm is
// converted at the configuration boundary and never used internally.
struct Scenario
{
    unsigned n_t = 10;            // transmit antennas
    unsigned n_r = 12;            // receive antennas
    std::vector<Target> targets = {Target{}}; // K targets, K = targets.size()
    unsigned T = 30;              // samples per frame
    double P = 100.0;             // transmit power budget in [mW]
    double sigma_s_sq = 1.0;      // sensing noise power in [mW]
    double sigma_c_sq = 1.0;      // communication noise power in [mW]
    std::uint64_t seed = 1;       // base seed for channel draws

    unsigned num_targets() const { return (unsigned)targets.size(); }

    // Throws std::invalid_argument on any violated invariant.
    void validate() const;

    // Single-target accessors; throw when K != 1.
    double theta() const;
    std::complex<double> alpha() const;
};

// Sweep controls for the experiment drivers. Rate grid fractions scale
// gamma_max = log2(1 + Gamma_max / sigma_c_sq); values above 1 are allowed
// so that infeasible points show up in the emitted files.
struct SweepSpec
{
    unsigned gamma_points = 20;     // rate grid size
    double gamma_min_frac = 0.02;   // lower end, fraction of gamma_max
    double gamma_max_frac = 0.98;   // upper end, fraction of gamma_max
    unsigned channels = 5;          // channel realizations for the correlation study
    bool normalize_channels = true; // rescale each draw to unit norm
    double Gamma1_frac = 0.4;       // correlation interval start, fraction of Gamma_max
    double Gamma2_frac = 0.95;      // correlation interval end, fraction of Gamma_max

    void validate() const;
};

// The default scenario used throughout the test and validation suites:
// 10x12 antennas, T = 30, P = 20 dBm, unit noise powers, one unit-strength
// target at 15 degrees.
Scenario default_scenario();

} // namespace isac

#endif
