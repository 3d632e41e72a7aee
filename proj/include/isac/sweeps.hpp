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

#ifndef isac_sweeps_H
#define isac_sweeps_H

#include <string>
#include <vector>

#include "isac/channel_model.hpp"
#include "isac/scenario.hpp"
#include "isac/solver.hpp"
#include "isac/subspace.hpp"

namespace isac
{

// Rate grid for a given channel: `gamma_points` equally spaced fractions of
// gamma_max = log2(1 + Gamma_max / sigma_c_sq) between gamma_min_frac and
// gamma_max_frac. A single-point grid sits at gamma_min_frac.
std::vector<double> rate_grid(const Scenario &scn, const CommChannel &ch, const SweepSpec &spec);

// One solved sweep point. Metrics are NaN when the point is infeasible.
struct ParetoPoint
{
    double gamma = 0.0;                           // rate threshold [bits/s/Hz]
    double Gamma = 0.0;                           // received-power threshold [mW]
    std::array<double, 3> nu_sq = {0.0, 0.0, 0.0};
    double crb_trace = 0.0;
    double angle_crb = 0.0;                       // [rad^2]
    double root_crb_deg = 0.0;
    double rate = 0.0;                            // achieved rate [bits/s/Hz]
    std::string method;                           // "closed" or "oracle"
    Regime regime = Regime::inactive;
};

// Solves every rate threshold with both the closed form and the bisection
// oracle. Points are evaluated in parallel and returned ordered by
// (gamma, method), closed before oracle.
std::vector<ParetoPoint> pareto_points(const Scenario &scn, const CommChannel &ch, const std::vector<double> &gammas);

/*!
Tradeoff sweep CSV

Draws the scenario channel from `scn.seed`, solves the rate grid with both
methods and writes one row per (gamma, method) with the columns

    gamma_bpshz, Gamma_mw, nu1_sq, nu2_sq, nu3_sq, crb_trace,
    angle_crb_rad2, root_crb_deg, rate_bpshz, method, regime

Infeasible points keep their row with regime "infeasible" and empty numeric
cells, so the feasibility boundary stays visible in plots.
*/
void run_pareto(const Scenario &scn, const SweepSpec &spec, const std::string &out_path);

// Transmit power over the angle grid for the four reference designs.
struct BeampatternTable
{
    std::vector<double> theta_deg;
    std::vector<double> p_ao;      // trace criterion [mW]
    std::vector<double> p_detmax;  // determinant criterion [mW]
    std::vector<double> p_crbmin;  // unconstrained CRB minimizer [mW]
    std::vector<double> p_comm;    // maximum ratio transmission [mW]
};

BeampatternTable beampattern_table(const Scenario &scn, const CommChannel &ch, double gamma_bpshz);

/*!
Beampattern comparison CSV

Angle grid -90 to 90 degrees in half-degree steps (361 rows); columns

    theta_deg, p_isac_ao, p_isac_detmax, p_crbmin, p_commopt

The two ISAC columns come from independent solver calls with the two
criteria and agree to numerical precision.
*/
void run_beampattern(const Scenario &scn, const CommChannel &ch, double gamma_bpshz, const std::string &out_path);

// One closed-form point of a per-channel sweep on that channel's own
// relative rate grid.
struct CorrStudyRow
{
    unsigned channel_id = 0;
    std::uint64_t seed = 0;
    double gamma_frac = 0.0;     // position on the relative grid
    double gamma = 0.0;          // [bits/s/Hz]
    double Gamma = 0.0;          // [mW]
    double nu1_sq = 0.0;
    double root_crb_deg = 0.0;
    double rate = 0.0;           // [bits/s/Hz]
    Regime regime = Regime::inactive;
};

struct CorrStudy
{
    std::vector<CorrelationReport> reports; // one per channel, normalized
    std::vector<CorrStudyRow> rows;         // channels x gamma_points
};

// Draws `spec.channels` channels with seeds scn.seed, scn.seed + 1, ...,
// computes the correlation coefficient of each (analytic and quadrature)
// on [Gamma1_frac, Gamma2_frac] * Gamma_max and solves each channel's
// relative rate grid with the closed form.
CorrStudy corr_study(const Scenario &scn, const SweepSpec &spec);

/*!
Correlation study CSV

A single file with a `row_type` discriminator column:

    row_type,channel_id,seed,G,G_quadrature,G_normalized,
    gamma_frac,gamma_bpshz,Gamma_mw,nu1_sq,root_crb_deg,rate_bpshz,regime

"summary" rows carry the per-channel correlation coefficients and leave the
sweep cells empty; "pareto" rows carry the per-(channel, gamma) solution and
leave the coefficient cells empty.
*/
void run_corr_study(const Scenario &scn, const SweepSpec &spec, const std::string &out_path);

} // namespace isac

#endif
