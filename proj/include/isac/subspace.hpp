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

#ifndef isac_subspace_H
#define isac_subspace_H

#include <armadillo>
#include <cstdint>
#include <vector>

#include "isac/array_model.hpp"
#include "isac/channel_model.hpp"

namespace isac
{

// Joint sensing and communication subspace span{A*, A_dot*, V_c}. Optimal
// transmit covariances live entirely inside it: sandwiching any feasible R
// between the projector changes neither the Fisher information nor the
// achievable rate, and never increases the transmit power.
struct IsacSubspace
{
    arma::cx_mat U;   // n_t x (2K + rank(H)) stacked generator columns
    arma::cx_mat Q;   // orthonormal basis of the column span
    arma::cx_mat P_U; // Hermitian projector Q Q^H

    unsigned rank() const { return (unsigned)Q.n_cols; }
};

// Orthonormal triple spanning {a*, a_dot*, h}: a_u = a*, a_d is the
// normalized conjugate derivative, a_h the normalized residual of h.
// Any rank-1 optimum is nu1 e^{j zeta1} a_u + nu2 e^{j zeta2} a_d +
// nu3 e^{j zeta3} a_h.
struct OrthoBasis
{
    arma::cx_vec a_u, a_d, a_h;
    double c1 = 0.0, c2 = 0.0, c3 = 0.0;          // projection gains |h^H a_.|
    double zeta1 = 0.0, zeta2 = 0.0, zeta3 = 0.0; // phases -arg(h^H a_.)
    bool degenerate_h = false; // h lies inside span{a*, a_dot*}; a_h is the zero vector

    double h_norm_sq() const { return c1 * c1 + c2 * c2 + c3 * c3; }
};

// Area under the |nu1*|^2 versus Gamma trade-off curve on [Gamma1, Gamma2],
// evaluated in closed form and by adaptive quadrature.
struct CorrelationReport
{
    double Gamma1 = 0.0, Gamma2 = 0.0, Gamma_max = 0.0; // thresholds in [mW]
    double G_analytic = 0.0;
    double G_quadrature = 0.0;
    double G_normalized = 0.0; // filled by normalize_reports
    unsigned channel_id = 0;
    std::uint64_t seed = 0;
};

enum class GMode
{
    analytic,
    quadrature,
    both
};

// Stacks U = [A* A_dot* V_c] and orthonormalizes it with a rank-revealing
// modified Gram-Schmidt pass (columns whose residual falls below 1e-10 of
// their norm are dropped).
IsacSubspace isac_basis(const SteeringSet &ss, const CommChannel &ch);

// Orthonormal columns of M by modified Gram-Schmidt with the same drop rule.
arma::cx_mat orthonormal_columns(const arma::cx_mat &M, double tol = 1e-10);

// Rank-1 design basis for one target: requires ||a|| = 1 and a orthogonal
// to a_dot.
// The residual is declared degenerate below 1e-10 * ||h||; then a_h = 0,
// c3 = 0 and zeta3 = 0.
OrthoBasis ortho_basis(const arma::cx_vec &h, const arma::cx_vec &a, const arma::cx_vec &a_dot);

// Optimal |nu1*|^2 at received-power threshold Gamma: P while the
// constraint is inactive (Gamma <= P c1^2), the quadratic-root value on the
// active branch, and P c1^2 / ||h||^2 at Gamma = Gamma_max. Throws
// infeasible_error above Gamma_max.
double nu1_sq_closed(double Gamma, const OrthoBasis &basis, double P);

// Correlation coefficient G = integral of |nu1*|^2 over [Gamma1, Gamma2].
// The analytic path evaluates the antiderivative of the active-branch
// closed form (plus the constant inactive segment); the quadrature path
// integrates nu1_sq_closed with absolute tolerance 1e-9 * P * (Gamma2 -
// Gamma1) and is the arbiter for the branch choices.
CorrelationReport corr_coeff(const OrthoBasis &basis, double P, double Gamma1, double Gamma2,
                             GMode mode = GMode::both);

// G_normalized = G_i / max_j G_j. Rejects an all-zero list.
std::vector<CorrelationReport> normalize_reports(std::vector<CorrelationReport> reports);

} // namespace isac

#endif
