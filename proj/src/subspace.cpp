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
#include <limits>
#include <stdexcept>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include "isac/errors.hpp"
#include "isac/solver.hpp"
#include "isac/subspace.hpp"

namespace isac
{

arma::cx_mat orthonormal_columns(const arma::cx_mat &M, double tol)
{
    arma::cx_mat Q(M.n_rows, 0);
    for (arma::uword j = 0; j < M.n_cols; j++)
    {
        arma::cx_vec v = M.col(j);
        double nrm0 = arma::norm(v);
        if (nrm0 == 0.0)
            continue;
        for (int pass = 0; pass < 2; pass++) // second pass restores orthogonality lost to cancellation
            if (Q.n_cols > 0)
                v -= Q * (Q.t() * v);
        double nrm = arma::norm(v);
        if (nrm <= tol * nrm0)
            continue; // dependent column
        Q = arma::join_rows(Q, arma::cx_vec(v / nrm));
    }
    return Q;
}

IsacSubspace isac_basis(const SteeringSet &ss, const CommChannel &ch)
{
    if (ch.H.n_cols != ss.A.n_rows)
        throw std::invalid_argument("Channel and steering set disagree on n_t.");

    IsacSubspace sub;
    sub.U = arma::join_rows(arma::conj(ss.A), arma::conj(ss.A_dot), ch.V_c);
    sub.Q = orthonormal_columns(sub.U);
    sub.P_U = sub.Q * sub.Q.t();
    return sub;
}

OrthoBasis ortho_basis(const arma::cx_vec &h, const arma::cx_vec &a, const arma::cx_vec &a_dot)
{
    if (h.n_elem != a.n_elem || h.n_elem != a_dot.n_elem)
        throw std::invalid_argument("h, a and a_dot must share one dimension.");
    double hn = arma::norm(h);
    if (hn == 0.0)
        throw std::invalid_argument("Channel vector must be nonzero.");
    if (std::abs(arma::norm(a) - 1.0) > 1e-9)
        throw std::invalid_argument("a must be unit norm.");
    double adn = arma::norm(a_dot);
    if (adn == 0.0 || std::abs(arma::cdot(a, a_dot)) > 1e-9 * adn)
        throw std::invalid_argument("a_dot must be nonzero and orthogonal to a.");

    OrthoBasis ob;
    ob.a_u = arma::conj(a);
    ob.a_d = arma::conj(a_dot) / adn;

    arma::cx_double pu = arma::cdot(ob.a_u, h); // a_u^H h
    arma::cx_double pd = arma::cdot(ob.a_d, h);
    arma::cx_vec r = h - pu * ob.a_u - pd * ob.a_d;
    double rn = arma::norm(r);

    ob.degenerate_h = rn < 1e-10 * hn;
    ob.a_h = ob.degenerate_h ? arma::cx_vec(h.n_elem, arma::fill::zeros) : arma::cx_vec(r / rn);

    ob.c1 = std::abs(pu);
    ob.c2 = std::abs(pd);
    ob.c3 = ob.degenerate_h ? 0.0 : std::abs(arma::cdot(ob.a_h, h));
    ob.zeta1 = -std::arg(arma::cdot(h, ob.a_u)); // -arg(h^H a_u)
    ob.zeta2 = -std::arg(arma::cdot(h, ob.a_d));
    ob.zeta3 = ob.degenerate_h ? 0.0 : -std::arg(arma::cdot(h, ob.a_h));
    return ob;
}

double nu1_sq_closed(double Gamma, const OrthoBasis &basis, double P)
{
    ReducedProblem rp{basis.c1, basis.c2, basis.c3, P, Gamma};
    Magnitudes m = closed_form_magnitudes(rp);
    return m.nu[0] * m.nu[0];
}

// antiderivative of |nu1*|^2 = (c1 sqrt(G) + s sqrt(Gmax - G))^2 / ||h||^4
// on the active branch, written against the unified gain s^2 = c2^2 + c3^2
static double active_antiderivative(double Gam, double c1, double s2, double h2, double Gmax)
{
    double c1sq = c1 * c1;
    double t1 = 0.5 * c1sq * Gam * Gam;
    double t2 = s2 * (Gmax * Gam - 0.5 * Gam * Gam);
    double rad = Gmax * Gam - Gam * Gam;
    if (rad < 0.0)
        rad = 0.0;
    double arg = Gmax > 0.0 ? (2.0 * Gam - Gmax) / Gmax : 0.0;
    arg = std::clamp(arg, -1.0, 1.0);
    double S = 0.25 * (2.0 * Gam - Gmax) * std::sqrt(rad) + 0.125 * Gmax * Gmax * std::asin(arg);
    return (t1 + t2 + 2.0 * c1 * std::sqrt(s2) * S) / (h2 * h2);
}

namespace
{
struct QuadCtx
{
    const OrthoBasis *basis;
    double P;
};

double nu1_sq_integrand(double Gam, void *params)
{
    const QuadCtx *ctx = static_cast<const QuadCtx *>(params);
    return nu1_sq_closed(Gam, *ctx->basis, ctx->P);
}
} // namespace

static double integrate_piece(const OrthoBasis &basis, double P, double a, double b, double tol)
{
    if (b <= a)
        return 0.0;
    gsl_set_error_handler_off();

    QuadCtx ctx{&basis, P};
    gsl_function f;
    f.function = &nu1_sq_integrand;
    f.params = &ctx;

    gsl_integration_workspace *w = gsl_integration_workspace_alloc(512);
    double result = 0.0, abserr = 0.0;
    int status = gsl_integration_qag(&f, a, b, tol, 0.0, 512, GSL_INTEG_GAUSS15, w, &result, &abserr);
    gsl_integration_workspace_free(w);

    if (status != 0 && abserr > 10.0 * tol)
        throw std::runtime_error("Adaptive quadrature did not reach the requested tolerance.");
    return result;
}

CorrelationReport corr_coeff(const OrthoBasis &basis, double P, double Gamma1, double Gamma2, GMode mode)
{
    if (P <= 0.0)
        throw std::invalid_argument("P must be positive.");
    double h2 = basis.h_norm_sq();
    double Gmax = P * h2;
    if (Gamma1 < 0.0 || Gamma2 < Gamma1)
        throw std::invalid_argument("Thresholds must satisfy 0 <= Gamma1 <= Gamma2.");
    if (Gamma2 > Gmax * (1.0 + 1e-12))
        throw infeasible_error("Gamma2 exceeds the maximum achievable received power.", Gmax);

    double c1 = basis.c1;
    double s2 = basis.c2 * basis.c2 + basis.c3 * basis.c3;
    double brk = P * c1 * c1; // constraint becomes active above this threshold

    CorrelationReport rep;
    rep.Gamma1 = Gamma1;
    rep.Gamma2 = Gamma2;
    rep.Gamma_max = Gmax;
    rep.G_analytic = std::numeric_limits<double>::quiet_NaN();
    rep.G_quadrature = std::numeric_limits<double>::quiet_NaN();

    if (mode == GMode::analytic || mode == GMode::both)
    {
        double G = 0.0;
        if (Gamma1 < brk)
            G += P * (std::min(Gamma2, brk) - Gamma1); // constant segment, |nu1*|^2 = P
        if (Gamma2 > brk)
        {
            double lo = std::max(Gamma1, brk);
            G += active_antiderivative(Gamma2, c1, s2, h2, Gmax) - active_antiderivative(lo, c1, s2, h2, Gmax);
        }
        rep.G_analytic = G;
    }

    if (mode == GMode::quadrature || mode == GMode::both)
    {
        double total = Gamma2 - Gamma1;
        if (total == 0.0)
            rep.G_quadrature = 0.0;
        else
        {
            double tol = 1e-9 * P * total;
            double G = 0.0;
            if (Gamma1 < brk)
            {
                double hi = std::min(Gamma2, brk);
                G += integrate_piece(basis, P, Gamma1, hi, tol * (hi - Gamma1) / total);
            }
            if (Gamma2 > brk)
            {
                double lo = std::max(Gamma1, brk);
                G += integrate_piece(basis, P, lo, Gamma2, tol * (Gamma2 - lo) / total);
            }
            rep.G_quadrature = G;
        }
    }
    return rep;
}

std::vector<CorrelationReport> normalize_reports(std::vector<CorrelationReport> reports)
{
    if (reports.empty())
        throw std::invalid_argument("Report list must not be empty.");
    double gmax = 0.0;
    for (const auto &r : reports)
    {
        if (!(r.G_analytic >= 0.0))
            throw std::invalid_argument("Reports must carry finite nonnegative G values.");
        gmax = std::max(gmax, r.G_analytic);
    }
    if (gmax <= 0.0)
        throw std::invalid_argument("All G values are zero; normalization is undefined.");
    for (auto &r : reports)
        r.G_normalized = r.G_analytic / gmax;
    return reports;
}

} // namespace isac
