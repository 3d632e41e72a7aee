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

#ifndef isac_config_H
#define isac_config_H

#include <string>

#include "isac/scenario.hpp"

namespace isac
{

struct ParsedConfig
{
    Scenario scn;
    SweepSpec spec;
};

/*!
Parse a flat key=value configuration text

Recognized keys and their defaults (all optional, '#' starts a comment):

    n_t = 10                 transmit antennas
    n_r = 12                 receive antennas
    t_samples = 30           samples per frame
    p_dbm = 20               transmit power [dBm]
    sigma_s_dbm = 0          sensing noise power [dBm]
    sigma_c_dbm = 0          communication noise power [dBm]
    theta_deg = 15           target angles [deg], comma separated
    alpha_re = 1             target gains, real parts, comma separated
    alpha_im = 0             target gains, imaginary parts, comma separated
    seed = 1                 base RNG seed
    gamma_points = 20        rate grid size for sweeps
    gamma_min_frac = 0.02    rate grid start, fraction of the channel maximum
    gamma_max_frac = 0.98    rate grid end, fraction of the channel maximum
    channels = 5             channel draws for the correlation study
    normalize_channels = true
    gamma1_frac = 0.4        correlation interval start, fraction of Gamma_max
    gamma2_frac = 0.95       correlation interval end, fraction of Gamma_max

Powers are converted to linear mW and angles to radians here; everything past
this boundary works in linear units. Unknown keys and malformed values raise
a `config_error` naming the key and line. The parsed scenario and sweep are
validated before returning.
*/
ParsedConfig parse_config_text(const std::string &text);

/*!
Load and parse a configuration file

Same grammar as `parse_config_text`. A missing or unreadable file raises a
`config_error`.
*/
ParsedConfig load_config(const std::string &path);

} // namespace isac

#endif
