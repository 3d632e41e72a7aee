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

#include "isac/errors.hpp"
#include "isac/fim.hpp"
#include "isac/kernels.hpp"
#include "isac/solver.hpp"

namespace isac
{

static constexpr double pi = 3.141592653589793;

std::string to_string(Regime r)
{
    switch (r)
    {
    case Regime::inactive:
        return "inactive";
    case Regime::active:
        return "active";
    case Regime::boundary:
        return "boundary";
    default:
        return "infeasible";
    }
}

static void check_reduced(const ReducedProblem &rp)
{
    if (rp.c1 < 0.0 || rp.c2 < 0.0 || rp.c3 < 0.0)
        throw std::invalid_argument("Projection gains must be nonnegative.");
    if (rp.P <= 0.0)
        throw std::invalid_argument("P must be positive.");
    if (rp.Gamma < 0.0)
        throw std::invalid_argument("Gamma must be nonnegative.");
    if (rp.gamma_max() == 0.0)
        throw std::invalid_argument("All projection gains vanish; the constraint cannot be met.");
    if (rp.Gamma > rp.gamma_max() * (1.0 + 1e-12))
        throw infeasible_error("Gamma exceeds the maximum achievable received power.", rp.gamma_max());
}

Magnitudes closed_form_magnitudes(const ReducedProblem &rp)
{
    check_reduced(rp);
    double c1 = rp.c1, c2 = rp.c2, c3 = rp.c3, P = rp.P, Gamma = rp.Gamma;
    double h2 = c1 * c1 + c2 * c2 + c3 * c3;
    double Gmax = P * h2;
    double s2 = c2 * c2 + c3 * c3;

    Magnitudes out;

    if (Gamma <= P * c1 * c1)
    {
        out.nu = {std::sqrt(P), 0.0, 0.0};
        out.regime = Regime::inactive;
        return out;
    }
    if (std::abs(Gamma - Gmax) <= 1e-10 * Gmax)
    {
        double f = std::sqrt(P) / std::sqrt(h2);
        out.nu = {f * c1, f * c2, f * c3};
        out.regime = Regime::boundary;
        return out;
    }

    // active branch; Gamma > P c1^2 guarantees s2 > 0 and, by feasibility,
    // nu1 below needs c1 > 0 only through the quadratic, so the c1 = 0
    // channel is dispatched separately
    out.regime = Regime::active;
    double sqG = std::sqrt(Gamma);

    if (c1 * c1 <= 1e-30 * h2)
    {
        // no a_u gain: meet the SNR from the residual coordinates alone
        double s = std::sqrt(s2);
        double m = sqG / s;
        double rem = P - m * m;
        out.nu = {std::sqrt(rem < 0.0 ? 0.0 : rem), m * c2 / s, m * c3 / s};
        out.coeffs.varsigma = s;
        return out;
    }

    if (c3 * c3 > 1e-12 * s2)
    {
        // generic quadratic in m = |nu3| with varsigma = (c2^2 + c3^2) / c3
        QuadCoeffs &q = out.coeffs;
        q.varsigma = s2 / c3;
        q.A = (q.varsigma * q.varsigma) / (c1 * c1) + (c2 * c2) / (c3 * c3) + 1.0;
        q.B = -2.0 * q.varsigma * sqG / (c1 * c1);
        q.C = Gamma / (c1 * c1) - P;
        q.eps = q.varsigma * q.varsigma / (q.A * c1 * c1);
        q.varpi = (1.0 - q.eps) / (q.A * c1 * c1);

        double disc = q.B * q.B - 4.0 * q.A * q.C;
        if (disc < 0.0)
            disc = 0.0;
        double m = (-q.B - std::sqrt(disc)) / (2.0 * q.A); // smaller root maximizes |nu1|
        out.nu = {(sqG - q.varsigma * m) / c1, (c2 / c3) * m, m};
        return out;
    }

    // c3 = 0 (channel inside the sensing plane): drop the a_h coordinate and
    // solve the same quadratic in m = sqrt(nu2^2 + nu3^2) with gain s
    double s = std::sqrt(s2);
    QuadCoeffs &q = out.coeffs;
    q.varsigma = s;
    q.A = s2 / (c1 * c1) + 1.0;
    q.B = -2.0 * s * sqG / (c1 * c1);
    q.C = Gamma / (c1 * c1) - P;
    q.eps = s2 / (q.A * c1 * c1);
    q.varpi = (1.0 - q.eps) / (q.A * c1 * c1);

    double disc = q.B * q.B - 4.0 * q.A * q.C;
    if (disc < 0.0)
        disc = 0.0;
    double m = (-q.B - std::sqrt(disc)) / (2.0 * q.A);
    out.nu = {(sqG - s * m) / c1, s > 0.0 ? m * c2 / s : 0.0, s > 0.0 ? m * c3 / s : 0.0};
    return out;
}

Magnitudes oracle_solve(const ReducedProblem &rp, OracleMethod method)
{
    check_reduced(rp);
    double c1 = rp.c1, c2 = rp.c2, c3 = rp.c3, P = rp.P, Gamma = rp.Gamma;
    double h2 = c1 * c1 + c2 * c2 + c3 * c3;
    double Gmax = P * h2;
    double s = std::sqrt(c2 * c2 + c3 * c3);
    double sqP = std::sqrt(P), sqG = std::sqrt(Gamma);

    Magnitudes out;
    if (Gamma <= P * c1 * c1)
        out.regime = Regime::inactive;
    else if (std::abs(Gamma - Gmax) <= 1e-10 * Gmax)
        out.regime = Regime::boundary;
    else
        out.regime = Regime::active;

    if (method == OracleMethod::bisection)
    {
        // largest x = |nu1| with g(x) = x c1 + sqrt(P - x^2) s - sqrt(Gamma) >= 0;
        // the off-a_u power is split proportionally to (c2, c3), which maximizes
        // its SNR contribution
        auto g = [&](double x) {
            double rem = P - x * x;
            return x * c1 + std::sqrt(rem < 0.0 ? 0.0 : rem) * s - sqG;
        };
        double x;
        if (g(sqP) >= 0.0)
            x = sqP; // constraint inactive at full beam power
        else
        {
            double lo = h2 > 0.0 ? sqP * c1 / std::sqrt(h2) : 0.0; // argmax of the concave g
            double hi = sqP;
            while (hi - lo > 1e-12)
            {
                double mid = 0.5 * (lo + hi);
                if (g(mid) >= 0.0)
                    lo = mid;
                else
                    hi = mid;
            }
            x = lo;
        }
        double m = 0.0;
        if (s > 0.0)
        {
            m = (sqG - x * c1) / s; // meets the SNR with equality
            if (m < 0.0)
                m = 0.0;
        }
        out.nu = {x, s > 0.0 ? m * c2 / s : 0.0, s > 0.0 ? m * c3 / s : 0.0};
        return out;
    }

    // exhaustive sweep over the two spherical angles of the power sphere
    const std::size_t n = 2000;
    double band = Gamma * (1.0 - 1e-6);
    auto objective = [&](std::size_t id) {
        std::size_t i = id / n, j = id % n;
        double p1 = 0.5 * pi * (double)i / (double)(n - 1);
        double p2 = 0.5 * pi * (double)j / (double)(n - 1);
        double n1 = sqP * std::cos(p1);
        double rem = sqP * std::sin(p1);
        double n2 = rem * std::cos(p2), n3 = rem * std::sin(p2);
        double con = n1 * c1 + n2 * c2 + n3 * c3;
        if (con * con < band)
            return std::numeric_limits<double>::infinity();
        return -n1;
    };
    GridPoint best = grid_min(n * n, objective);
    if (!std::isfinite(best.value))
        throw infeasible_error("No grid point satisfies the SNR constraint.", Gmax);

    std::size_t i = best.index / n, j = best.index % n;
    double p1 = 0.5 * pi * (double)i / (double)(n - 1);
    double p2 = 0.5 * pi * (double)j / (double)(n - 1);
    double rem = sqP * std::sin(p1);
    out.nu = {sqP * std::cos(p1), rem * std::cos(p2), rem * std::sin(p2)};
    return out;
}

ClosedFormSolution solve_closed_form(const Scenario &scn, const CommChannel &ch, double Gamma, Criterion criterion)
{
    (void)criterion; // AO and DetMax share the optimizer
    scn.validate();
    if (scn.num_targets() != 1)
        throw std::invalid_argument("solve_closed_form requires exactly one target.");
    if (ch.H.n_rows != 1 || ch.H.n_cols != scn.n_t)
        throw std::invalid_argument("Channel must be 1 x n_t.");

    Steering tx = build_steering(scn.theta(), scn.n_t);
    arma::cx_vec h = ch.h();

    ClosedFormSolution sol;
    sol.basis = ortho_basis(h, tx.a, tx.a_dot);
    sol.Gamma = Gamma;
    sol.Gamma_max = ch.gamma_max(scn.P);

    ReducedProblem rp{sol.basis.c1, sol.basis.c2, sol.basis.c3, scn.P, Gamma};
    Magnitudes m = closed_form_magnitudes(rp);
    sol.nu_abs = m.nu;
    sol.zeta = {sol.basis.zeta1, sol.basis.zeta2, sol.basis.zeta3};
    sol.regime = m.regime;
    sol.coeffs = m.coeffs;

    arma::cx_double e1 = std::polar(1.0, sol.zeta[0]);
    arma::cx_double e2 = std::polar(1.0, sol.zeta[1]);
    arma::cx_double e3 = std::polar(1.0, sol.zeta[2]);
    sol.u = m.nu[0] * e1 * sol.basis.a_u + m.nu[1] * e2 * sol.basis.a_d + m.nu[2] * e3 * sol.basis.a_h;
    sol.R = sol.u * sol.u.t();
    return sol;
}

// tr(F^-1) for the scalar single-target blocks, infinite when singular
static double crb_trace_scalar(double f11, double f12_re, double f12_im, double f22)
{
    double f12sq = f12_re * f12_re + f12_im * f12_im;
    if (f22 <= 0.0)
        return std::numeric_limits<double>::infinity();
    double schur = f11 * f22 - f12sq;
    if (schur <= 0.0)
        return std::numeric_limits<double>::infinity();
    return (f22 * f22 + 2.0 * f11 * f22 - f12sq) / (2.0 * f22 * schur);
}

BenchmarkSolutions benchmark_solutions(const Scenario &scn, const CommChannel &ch)
{
    scn.validate();
    if (scn.num_targets() != 1)
        throw std::invalid_argument("benchmark_solutions requires exactly one target.");

    arma::cx_vec h = ch.h();
    double h2 = std::pow(arma::norm(h), 2);
    if (h2 == 0.0)
        throw std::invalid_argument("Channel vector must be nonzero.");

    BenchmarkSolutions out;
    out.R_comm = (scn.P / h2) * (h * h.t()); // maximum ratio transmission

    Steering tx = build_steering(scn.theta(), scn.n_t);
    Steering rx = build_steering(scn.theta(), scn.n_r);
    arma::cx_vec a_u = arma::conj(tx.a);
    double ad_norm = arma::norm(tx.a_dot);
    arma::cx_vec a_d = arma::conj(tx.a_dot) / ad_norm;

    double bd2 = std::pow(arma::norm(rx.a_dot), 2);
    double ad2 = ad_norm * ad_norm;
    double alpha2 = std::norm(scn.alpha());
    double c = (double)scn.T / scn.sigma_s_sq;
    double sqP = std::sqrt(scn.P);

    auto trace_at = [&](double psi, double phi) {
        double n1 = sqP * std::cos(psi), n2 = sqP * std::sin(psi);
        double f22 = c * n1 * n1;
        double f11 = c * alpha2 * (bd2 * n1 * n1 + ad2 * n2 * n2);
        double mag = c * std::sqrt(alpha2) * n1 * n2 * std::sqrt(ad2);
        return crb_trace_scalar(f11, mag * std::cos(phi), -mag * std::sin(phi), f22);
    };

    const std::size_t npsi = 720, nphi = 720;
    auto objective = [&](std::size_t id) {
        std::size_t i = id / nphi, j = id % nphi;
        double psi = 0.5 * pi * (double)i / (double)(npsi - 1);
        double phi = 2.0 * pi * (double)j / (double)nphi;
        return trace_at(psi, phi);
    };
    GridPoint best = grid_min(npsi * nphi, objective);

    std::size_t bi = best.index / nphi, bj = best.index % nphi;
    double psi0 = 0.5 * pi * (double)bi / (double)(npsi - 1);
    double phi0 = 2.0 * pi * (double)bj / (double)nphi;
    double step = 0.5 * pi / (double)(npsi - 1);

    // golden-section refinement in psi at the best phi
    double lo = std::max(0.0, psi0 - step), hi = std::min(0.5 * pi, psi0 + step);
    const double gr = 0.6180339887498949;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double v1 = trace_at(x1, phi0), v2 = trace_at(x2, phi0);
    for (int it = 0; it < 80; it++)
    {
        if (v1 <= v2)
        {
            hi = x2;
            x2 = x1;
            v2 = v1;
            x1 = hi - gr * (hi - lo);
            v1 = trace_at(x1, phi0);
        }
        else
        {
            lo = x1;
            x1 = x2;
            v1 = v2;
            x2 = lo + gr * (hi - lo);
            v2 = trace_at(x2, phi0);
        }
    }
    double psi = 0.5 * (lo + hi);
    if (trace_at(psi, phi0) > best.value)
        psi = psi0; // keep the grid point when refinement does not help

    arma::cx_vec u = sqP * (std::cos(psi) * a_u + std::sin(psi) * std::polar(1.0, phi0) * a_d);
    out.R_crbmin = u * u.t();
    return out;
}

VerificationReport verify_candidate(const arma::cx_mat &R, const Scenario &scn, const CommChannel &ch, double Gamma)
{
    scn.validate();
    if (R.n_rows != scn.n_t || R.n_cols != scn.n_t)
        throw std::invalid_argument("Covariance dimension does not match the transmit array.");
    double rnorm = arma::norm(R, "fro");
    if (arma::norm(R - R.t(), "fro") > 1e-9 * std::max(1.0, rnorm))
        throw std::invalid_argument("Candidate covariance must be Hermitian.");

    VerificationReport rep;

    arma::vec ev;
    if (!arma::eig_sym(ev, arma::cx_mat(0.5 * (R + R.t()))))
        throw std::runtime_error("Eigendecomposition of the candidate failed.");
    rep.psd_residual = ev.min() < 0.0 ? ev.min() : 0.0;
    rep.power_residual = arma::trace(R).real() - scn.P;

    arma::cx_vec h = ch.h();
    rep.snr_slack = std::real(arma::cdot(h, R * h)) - Gamma;

    const double inf = std::numeric_limits<double>::infinity();
    if (scn.num_targets() == 1)
    {
        try
        {
            Fim f = fim_single(scn, R);
            rep.crb_trace = crb_trace(f);
            rep.angle_crb = angle_crb_schur(f);
        }
        catch (const unidentifiable_error &)
        {
            rep.crb_trace = inf;
            rep.angle_crb = inf;
        }
    }
    else
    {
        std::vector<double> angles;
        arma::cx_vec alpha(scn.num_targets());
        for (unsigned k = 0; k < scn.num_targets(); k++)
        {
            angles.push_back(scn.targets[k].theta);
            alpha(k) = scn.targets[k].alpha;
        }
        try
        {
            Fim f = fim_multi(build_steering_set(angles, scn.n_t, scn.n_r), alpha, R,
                              white_noise(scn.sigma_s_sq, scn.n_r), scn.T);
            rep.crb_trace = crb_trace(f);
        }
        catch (const unidentifiable_error &)
        {
            rep.crb_trace = inf;
        }
        rep.angle_crb = inf;
    }

    try
    {
        rep.rate = achievable_rate(R, ch);
    }
    catch (const std::exception &)
    {
        rep.rate = std::numeric_limits<double>::quiet_NaN();
    }

    std::vector<double> angles;
    for (const auto &t : scn.targets)
        angles.push_back(t.theta);
    IsacSubspace sub = isac_basis(build_steering_set(angles, scn.n_t, scn.n_r), ch);
    arma::cx_mat I = arma::eye<arma::cx_mat>(scn.n_t, scn.n_t);
    arma::cx_mat out = (I - sub.P_U) * R * (I - sub.P_U);
    rep.subspace_residual = arma::norm(out, "fro");

    double scale = std::max(1.0, std::abs(ev.max()));
    rep.feasible = rep.psd_residual >= -1e-9 * scale && std::abs(rep.power_residual) <= 1e-8 * scn.P &&
                   rep.snr_slack >= -1e-9 * std::max(1.0, Gamma);
    return rep;
}

} // namespace isac
