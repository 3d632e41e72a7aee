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
#include <complex>

#include <doctest.h>

#include "isac/errors.hpp"
#include "isac/rng.hpp"
#include "isac/subspace.hpp"

using namespace isac;

static const double deg = 3.141592653589793 / 180.0;

static arma::cx_vec seeded_vec(std::uint64_t seed, unsigned n)
{
    Rng rng(seed);
    arma::cx_vec v(n);
    for (unsigned i = 0; i < n; i++)
        v(i) = rng.cgauss();
    return v;
}

TEST_CASE("modified Gram-Schmidt drops dependent columns")
{
    arma::cx_vec v1 = seeded_vec(1, 8), v2 = seeded_vec(2, 8);
    arma::cx_mat M = arma::join_rows(v1, arma::cx_vec(2.0 * v1), v2);
    arma::cx_mat Q = orthonormal_columns(M);

    CHECK(Q.n_cols == 2);
    CHECK(arma::norm(Q.t() * Q - arma::eye<arma::cx_mat>(2, 2), "fro") <= 1e-12);
    CHECK(arma::norm(v1 - Q * (Q.t() * v1)) <= 1e-12 * arma::norm(v1));
    CHECK(arma::norm(v2 - Q * (Q.t() * v2)) <= 1e-12 * arma::norm(v2));

    arma::cx_mat with_zero = arma::join_rows(arma::cx_vec(8, arma::fill::zeros), v1);
    CHECK(orthonormal_columns(with_zero).n_cols == 1);
}

TEST_CASE("joint subspace has rank 2K + rank(H)")
{
    CommChannel ch = draw_rayleigh_channel(5, 10, true, 1.0);

    SUBCASE("one target")
    {
        SteeringSet ss = build_steering_set({15.0 * deg}, 10, 12);
        IsacSubspace sub = isac_basis(ss, ch);
        CHECK(sub.rank() == 3);
        CHECK(arma::norm(sub.P_U - sub.P_U.t(), "fro") <= 1e-12);
        CHECK(arma::norm(sub.P_U * sub.P_U - sub.P_U, "fro") <= 1e-12);

        arma::cx_vec au = arma::conj(build_steering(15.0 * deg, 10).a);
        arma::cx_vec ad = arma::conj(build_steering(15.0 * deg, 10).a_dot);
        CHECK(arma::norm(sub.P_U * au - au) <= 1e-12);
        CHECK(arma::norm(sub.P_U * ad - ad) <= 1e-12 * arma::norm(ad));
        CHECK(arma::norm(sub.P_U * ch.h() - ch.h()) <= 1e-12);
    }

    SUBCASE("two targets")
    {
        SteeringSet ss = build_steering_set({-20.0 * deg, 35.0 * deg}, 10, 12);
        CHECK(isac_basis(ss, ch).rank() == 5);
    }

    SUBCASE("channel aligned with the steering vector collapses the rank")
    {
        Steering tx = build_steering(15.0 * deg, 10);
        CommChannel aligned = make_channel(arma::cx_mat(arma::conj(tx.a).t()), 1.0);
        SteeringSet ss = build_steering_set({15.0 * deg}, 10, 12);
        CHECK(isac_basis(ss, aligned).rank() == 2);
    }

    SUBCASE("dimension mismatch is rejected")
    {
        SteeringSet ss = build_steering_set({15.0 * deg}, 8, 12);
        CHECK_THROWS_AS(isac_basis(ss, ch), std::invalid_argument);
    }
}

TEST_CASE("design basis is an orthonormal triple carrying all of h")
{
    Steering tx = build_steering(15.0 * deg, 10);
    CommChannel ch = draw_rayleigh_channel(9, 10, false, 1.0);
    arma::cx_vec h = ch.h();
    OrthoBasis ob = ortho_basis(h, tx.a, tx.a_dot);

    arma::cx_mat B = arma::join_rows(ob.a_u, ob.a_d, ob.a_h);
    CHECK(arma::norm(B.t() * B - arma::eye<arma::cx_mat>(3, 3), "fro") <= 1e-12);
    CHECK(!ob.degenerate_h);

    double h2 = std::pow(arma::norm(h), 2);
    CHECK(ob.h_norm_sq() == doctest::Approx(h2).epsilon(1e-12));

    arma::cx_double p1 = arma::cdot(h, ob.a_u) * std::polar(1.0, ob.zeta1);
    arma::cx_double p2 = arma::cdot(h, ob.a_d) * std::polar(1.0, ob.zeta2);
    arma::cx_double p3 = arma::cdot(h, ob.a_h) * std::polar(1.0, ob.zeta3);
    CHECK(std::abs(p1.imag()) <= 1e-12 * arma::norm(h));
    CHECK(std::abs(p2.imag()) <= 1e-12 * arma::norm(h));
    CHECK(std::abs(p3.imag()) <= 1e-12 * arma::norm(h));
    CHECK(p1.real() == doctest::Approx(ob.c1).epsilon(1e-12));
    CHECK(p2.real() == doctest::Approx(ob.c2).epsilon(1e-12));
    CHECK(p3.real() == doctest::Approx(ob.c3).epsilon(1e-12));
}

TEST_CASE("design basis rejects malformed input")
{
    Steering tx = build_steering(15.0 * deg, 10);
    arma::cx_vec h = seeded_vec(3, 10);

    CHECK_THROWS_AS(ortho_basis(seeded_vec(3, 9), tx.a, tx.a_dot), std::invalid_argument);
    CHECK_THROWS_AS(ortho_basis(arma::cx_vec(10, arma::fill::zeros), tx.a, tx.a_dot), std::invalid_argument);
    CHECK_THROWS_AS(ortho_basis(h, arma::cx_vec(2.0 * tx.a), tx.a_dot), std::invalid_argument);
    CHECK_THROWS_AS(ortho_basis(h, tx.a, tx.a), std::invalid_argument);
    CHECK_THROWS_AS(ortho_basis(h, tx.a, arma::cx_vec(10, arma::fill::zeros)), std::invalid_argument);
}

TEST_CASE("aligned channel degenerates to the first basis vector")
{
    Steering tx = build_steering(15.0 * deg, 10);
    arma::cx_vec h = 2.0 * arma::conj(tx.a);
    OrthoBasis ob = ortho_basis(h, tx.a, tx.a_dot);

    CHECK(ob.degenerate_h);
    CHECK(ob.c1 == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(ob.c2 <= 1e-12);
    CHECK(ob.c3 == 0.0);
    CHECK(std::abs(ob.zeta1) <= 1e-12);
    CHECK(ob.zeta3 == 0.0);
    CHECK(arma::norm(ob.a_h) == 0.0);
}

TEST_CASE("broadside basis is real and phase-free")
{
    Steering tx = build_steering(0.0, 8);
    arma::cx_vec h = arma::conj(tx.a) + 0.5 * arma::conj(tx.a_dot) / arma::norm(tx.a_dot);
    OrthoBasis ob = ortho_basis(h, tx.a, tx.a_dot);

    CHECK(ob.c1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ob.c2 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(ob.zeta1) <= 1e-12);
    CHECK(std::abs(ob.zeta2) <= 1e-12);
    CHECK(ob.degenerate_h);
}

TEST_CASE("closed-form nu1 matches the boundary values and the explicit root")
{
    Steering tx = build_steering(15.0 * deg, 10);
    CommChannel ch = draw_rayleigh_channel(33, 10, true, 1.0);
    OrthoBasis ob = ortho_basis(ch.h(), tx.a, tx.a_dot);
    double P = 100.0;
    double h2 = ob.h_norm_sq();
    double Gmax = P * h2;
    double brk = P * ob.c1 * ob.c1;
    double s = std::sqrt(ob.c2 * ob.c2 + ob.c3 * ob.c3);

    CHECK(nu1_sq_closed(0.0, ob, P) == P);
    CHECK(nu1_sq_closed(0.5 * brk, ob, P) == P);
    CHECK(nu1_sq_closed(Gmax, ob, P) == doctest::Approx(P * ob.c1 * ob.c1 / h2).epsilon(1e-12));

    double prev = P;
    for (int i = 0; i < 50; i++)
    {
        double t = (i + 0.5) / 50.0;
        double Gam = brk + t * (Gmax - brk);
        double nu1 = (ob.c1 * std::sqrt(Gam) + s * std::sqrt(Gmax - Gam)) / h2;
        double got = nu1_sq_closed(Gam, ob, P);
        CHECK(got == doctest::Approx(nu1 * nu1).epsilon(1e-9));
        CHECK(got <= prev * (1.0 + 1e-12));
        prev = got;
    }

    CHECK_THROWS_AS(nu1_sq_closed(1.5 * Gmax, ob, P), infeasible_error);
}

TEST_CASE("correlation coefficient integrates the trade-off curve")
{
    Steering tx = build_steering(15.0 * deg, 10);
    double P = 100.0;

    SUBCASE("empty interval gives zero")
    {
        CommChannel ch = draw_rayleigh_channel(40, 10, true, 1.0);
        OrthoBasis ob = ortho_basis(ch.h(), tx.a, tx.a_dot);
        CorrelationReport rep = corr_coeff(ob, P, 30.0, 30.0);
        CHECK(rep.G_analytic == 0.0);
        CHECK(rep.G_quadrature == 0.0);
    }

    SUBCASE("analytic value agrees with adaptive quadrature")
    {
        for (unsigned c = 0; c < 5; c++)
        {
            CommChannel ch = draw_rayleigh_channel(50 + c, 10, true, 1.0);
            OrthoBasis ob = ortho_basis(ch.h(), tx.a, tx.a_dot);
            double Gmax = P * ob.h_norm_sq();
            CorrelationReport rep = corr_coeff(ob, P, 0.4 * Gmax, 0.95 * Gmax);
            CHECK(std::abs(rep.G_analytic - rep.G_quadrature) <= 1e-6 * rep.G_quadrature);
        }
    }

    SUBCASE("pieces add up and G grows with the interval")
    {
        CommChannel ch = draw_rayleigh_channel(60, 10, true, 1.0);
        OrthoBasis ob = ortho_basis(ch.h(), tx.a, tx.a_dot);
        double Gmax = P * ob.h_norm_sq();
        double a = 0.1 * Gmax, b = 0.6 * Gmax, c = 0.9 * Gmax;
        double Gab = corr_coeff(ob, P, a, b, GMode::analytic).G_analytic;
        double Gbc = corr_coeff(ob, P, b, c, GMode::analytic).G_analytic;
        double Gac = corr_coeff(ob, P, a, c, GMode::analytic).G_analytic;
        CHECK(Gab + Gbc == doctest::Approx(Gac).epsilon(1e-12));
        CHECK(Gab > 0.0);
        CHECK(Gbc > 0.0);
        CHECK(Gac > Gab);
    }

    SUBCASE("aligned channel keeps the full budget over the whole range")
    {
        arma::cx_vec h = 1.3 * arma::conj(tx.a);
        OrthoBasis ob = ortho_basis(h, tx.a, tx.a_dot);
        double Gmax = P * ob.h_norm_sq();
        CorrelationReport rep = corr_coeff(ob, P, 0.2 * Gmax, 0.8 * Gmax);
        CHECK(rep.G_analytic == doctest::Approx(P * 0.6 * Gmax).epsilon(1e-12));
    }

    SUBCASE("bad intervals are rejected")
    {
        CommChannel ch = draw_rayleigh_channel(70, 10, true, 1.0);
        OrthoBasis ob = ortho_basis(ch.h(), tx.a, tx.a_dot);
        double Gmax = P * ob.h_norm_sq();

        CHECK_THROWS_AS(corr_coeff(ob, P, -1.0, 10.0), std::invalid_argument);
        CHECK_THROWS_AS(corr_coeff(ob, P, 20.0, 10.0), std::invalid_argument);
        CHECK_THROWS_AS(corr_coeff(ob, 0.0, 0.0, 10.0), std::invalid_argument);
        try
        {
            corr_coeff(ob, P, 0.0, 1.5 * Gmax);
            FAIL("expected an infeasibility error");
        }
        catch (const infeasible_error &e)
        {
            CHECK(e.gamma_max == doctest::Approx(Gmax).epsilon(1e-12));
        }
    }

    SUBCASE("modes fill only their own field")
    {
        CommChannel ch = draw_rayleigh_channel(80, 10, true, 1.0);
        OrthoBasis ob = ortho_basis(ch.h(), tx.a, tx.a_dot);
        double Gmax = P * ob.h_norm_sq();
        CorrelationReport ra = corr_coeff(ob, P, 0.0, 0.5 * Gmax, GMode::analytic);
        CHECK(std::isnan(ra.G_quadrature));
        CHECK(!std::isnan(ra.G_analytic));
        CorrelationReport rq = corr_coeff(ob, P, 0.0, 0.5 * Gmax, GMode::quadrature);
        CHECK(std::isnan(rq.G_analytic));
        CHECK(!std::isnan(rq.G_quadrature));
    }
}

TEST_CASE("normalization scales the largest report to one")
{
    auto rep = [](double g) {
        CorrelationReport r;
        r.G_analytic = g;
        return r;
    };

    std::vector<CorrelationReport> out = normalize_reports({rep(2.0), rep(4.0)});
    CHECK(out[0].G_normalized == 0.5);
    CHECK(out[1].G_normalized == 1.0);

    out = normalize_reports({rep(3.0)});
    CHECK(out[0].G_normalized == 1.0);

    out = normalize_reports({rep(1.0), rep(5.0), rep(4.0)});
    int ones = 0;
    for (const auto &r : out)
        ones += r.G_normalized == 1.0 ? 1 : 0;
    CHECK(ones == 1);

    CHECK_THROWS_AS(normalize_reports({}), std::invalid_argument);
    CHECK_THROWS_AS(normalize_reports({rep(0.0), rep(0.0)}), std::invalid_argument);
    CHECK_THROWS_AS(normalize_reports({rep(-1.0), rep(2.0)}), std::invalid_argument);
}
