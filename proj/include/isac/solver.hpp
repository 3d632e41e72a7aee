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

#ifndef isac_solver_H
#define isac_solver_H

#include <array>
#include <string>

#include "isac/channel_model.hpp"
#include "isac/scenario.hpp"
#include "isac/subspace.hpp"

namespace isac
{

// Magnitude-only reduction of the rank-1 design: maximize |nu1| over the
// power sphere |nu|^2 = P subject to (nu1 c1 + nu2 c2 + nu3 c3)^2 >= Gamma.
struct ReducedProblem
{
    double c1 = 0.0, c2 = 0.0, c3 = 0.0; // projection gains, >= 0
    double P = 0.0;                      // power budget in [mW]
    double Gamma = 0.0;                  // received-power threshold in [mW]

    double gamma_max() const { return P * (c1 * c1 + c2 * c2 + c3 * c3); }
};

enum class Criterion
{
    AO,     // minimize the angle-only CRB
    DetMax  // maximize det(F); same optimizer, kept as a separate entry point
};

enum class Regime
{
    inactive, // Gamma <= P c1^2, constraint slack, pure sensing beam
    active,   // quadratic branch, constraint met with equality
    boundary, // Gamma = Gamma_max (relative tie tolerance 1e-10)
    infeasible
};

std::string to_string(Regime r);

// Coefficients of the active-branch quadratic A m^2 + B m + C = 0 in
// m = |nu3| (or m = sqrt(nu2^2 + nu3^2) when c3 = 0 and the a_h coordinate
// is dropped): varsigma = (c2^2 + c3^2) / c3, eps = varsigma^2 / (A c1^2),
// varpi = (1 - eps) / (A c1^2).
struct QuadCoeffs
{
    double varsigma = 0.0;
    double eps = 0.0;
    double varpi = 0.0;
    double A = 0.0, B = 0.0, C = 0.0;
};

struct Magnitudes
{
    std::array<double, 3> nu = {0.0, 0.0, 0.0}; // |nu1|, |nu2|, |nu3|
    Regime regime = Regime::inactive;
    QuadCoeffs coeffs;
};

// Closed-form optimal magnitudes. Regime dispatch:
//   Gamma <= P c1^2          nu = (sqrt(P), 0, 0)
//   P c1^2 < Gamma < G_max   |nu3| = (-B - sqrt(B^2 - 4AC)) / (2A) (the
//                            smaller root maximizes |nu1|), |nu2| =
//                            (c2/c3) |nu3|, |nu1| = (sqrt(Gamma) -
//                            varsigma |nu3|) / c1
//   Gamma = G_max            nu = sqrt(P) (c1, c2, c3) / ||h||
// c3 = 0 and c1 = 0 fall back to coordinate-dropped variants of the same
// quadratic. Throws infeasible_error when Gamma > G_max.
Magnitudes closed_form_magnitudes(const ReducedProblem &rp);

enum class OracleMethod
{
    bisection,
    grid
};

// Independent optimum for the reduced problem. Bisection exploits that the
// best split of the off-a_u power is proportional to (c2, c3), leaving a
// concave scalar feasibility function of |nu1| that is bisected to 1e-12.
// The grid method sweeps the two spherical angles of the power sphere over
// 2000^2 points with feasibility band 1e-6 * Gamma; test use only.
Magnitudes oracle_solve(const ReducedProblem &rp, OracleMethod method);

// Full rank-1 solution with phases and the reconstructed covariance.
struct ClosedFormSolution
{
    std::array<double, 3> nu_abs = {0.0, 0.0, 0.0};
    std::array<double, 3> zeta = {0.0, 0.0, 0.0};
    arma::cx_vec u;   // beamforming vector, ||u||^2 = P
    arma::cx_mat R;   // rank-1 covariance u u^H
    Regime regime = Regime::inactive;
    QuadCoeffs coeffs;
    OrthoBasis basis;
    double Gamma = 0.0;     // requested threshold in [mW]
    double Gamma_max = 0.0; // P ||h||^2 in [mW]
};

// Optimal single-target covariance under the received-power constraint.
// The AO and DetMax criteria share the same optimizer; both values of
// `criterion` return identical solutions and the identity is asserted in
// the test suite.
ClosedFormSolution solve_closed_form(const Scenario &scn, const CommChannel &ch, double Gamma, Criterion criterion);

// Reference designs: R_comm is maximum ratio transmission P h h^H / ||h||^2;
// R_crbmin minimizes tr(F^-1) over u = sqrt(P) (cos(psi) a_u + sin(psi)
// e^{j phi} a_d) by a 720 x 720 grid over (psi, phi) followed by
// golden-section refinement in psi.
struct BenchmarkSolutions
{
    arma::cx_mat R_comm;
    arma::cx_mat R_crbmin;
};

BenchmarkSolutions benchmark_solutions(const Scenario &scn, const CommChannel &ch);

// Feasibility and performance report for an arbitrary Hermitian candidate.
struct VerificationReport
{
    bool feasible = false;
    double psd_residual = 0.0;       // most negative eigenvalue, 0 when PSD
    double power_residual = 0.0;     // tr(R) - P in [mW]
    double snr_slack = 0.0;          // tr(Q_c R) - Gamma in [mW]
    double crb_trace = 0.0;          // infinite when the FIM is singular
    double angle_crb = 0.0;          // infinite when unidentifiable, [rad^2]
    double rate = 0.0;               // [bits/s/Hz]
    double subspace_residual = 0.0;  // ||(I - P_U) R (I - P_U)||_F
};

VerificationReport verify_candidate(const arma::cx_mat &R, const Scenario &scn, const CommChannel &ch, double Gamma);

} // namespace isac

#endif
