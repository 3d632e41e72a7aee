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

#include <doctest.h>

#include "isac/errors.hpp"
#include "isac/fim.hpp"
#include "isac/rng.hpp"
#include "isac/solver.hpp"

using namespace isac;

static const double deg = 3.141592653589793 / 180.0;

static arma::cx_mat seeded_psd(std::uint64_t seed, unsigned n, double trace_target)
{
    Rng rng(seed);
    arma::cx_mat G(n, n);
    for (unsigned i = 0; i < n; i++)
        for (unsigned j = 0; j < n; j++)
            G(i, j) = rng.cgauss();
    arma::cx_mat R = G * G.t();
    return R * (trace_target / arma::trace(R).real());
}

static double rel_fro(const arma::mat &A, const arma::mat &B)
{
    return arma::norm(A - B, "fro") / arma::norm(B, "fro");
}

TEST_CASE("assembled matrix follows the block layout")
{
    arma::cx_mat F11(1, 1), F12(1, 1), F22(1, 1);
    F11(0, 0) = {4.0, 0.0};
    F12(0, 0) = {1.5, -2.5};
    F22(0, 0) = {3.0, 0.0};
    arma::mat F = assemble_fim(F11, F12, F22);

    CHECK(F.n_rows == 3);
    CHECK(F(0, 0) == 8.0);
    CHECK(F(0, 1) == 3.0);
    CHECK(F(0, 2) == 5.0);
    CHECK(F(1, 1) == 6.0);
    CHECK(F(1, 2) == 0.0);
    CHECK(F(2, 2) == 6.0);
    CHECK(arma::norm(F - F.t(), "fro") == 0.0);

    CHECK_THROWS_AS(assemble_fim(arma::cx_mat(2, 2), F12, F22), std::invalid_argument);
}

TEST_CASE("zero covariance carries no information")
{
    SteeringSet ss = build_steering_set({15.0 * deg}, 10, 12);
    arma::cx_vec alpha{arma::cx_double(1.0, 0.0)};
    NoiseModel noise = white_noise(1.0, 12);
    arma::cx_mat zero(10, 10, arma::fill::zeros);
    CHECK(arma::norm(fim_multi(ss, alpha, zero, noise, 30).F, "fro") == 0.0);
    CHECK(arma::norm(fim_fd_oracle(ss, alpha, zero, noise, 30), "fro") == 0.0);
}

TEST_CASE("single-target blocks match the general assembly")
{
    Scenario scn = default_scenario();
    arma::cx_mat R = seeded_psd(100, scn.n_t, scn.P);
    Fim fs = fim_single(scn, R);

    SteeringSet ss = build_steering_set({scn.theta()}, scn.n_t, scn.n_r);
    arma::cx_vec alpha{scn.alpha()};
    Fim fm = fim_multi(ss, alpha, R, white_noise(scn.sigma_s_sq, scn.n_r), scn.T);
    CHECK(rel_fro(fs.F, fm.F) <= 1e-10);
}

TEST_CASE("finite differences confirm the information matrix")
{
    NoiseModel noise = white_noise(1.3, 12);

    SUBCASE("single target, random covariance")
    {
        SteeringSet ss = build_steering_set({15.0 * deg}, 10, 12);
        arma::cx_vec alpha{arma::cx_double(0.8, -0.4)};
        arma::cx_mat R = seeded_psd(101, 10, 50.0);
        Fim fim = fim_multi(ss, alpha, R, noise, 30);
        CHECK(rel_fro(fim.F, fim_fd_oracle(ss, alpha, R, noise, 30)) <= 1e-3);
    }

    SUBCASE("two well-separated targets")
    {
        SteeringSet ss = build_steering_set({-20.0 * deg, 35.0 * deg}, 10, 12);
        arma::cx_vec alpha{arma::cx_double(1.0, 0.2), arma::cx_double(-0.3, 0.9)};
        arma::cx_mat R = seeded_psd(102, 10, 80.0);
        Fim fim = fim_multi(ss, alpha, R, noise, 30);
        CHECK(rel_fro(fim.F, fim_fd_oracle(ss, alpha, R, noise, 30)) <= 1e-3);
    }

    SUBCASE("halving the step shrinks the disagreement about fourfold")
    {
        SteeringSet ss = build_steering_set({10.0 * deg}, 6, 6);
        arma::cx_vec alpha{arma::cx_double(1.0, 0.5)};
        arma::cx_mat R = seeded_psd(103, 6, 10.0);
        Fim fim = fim_multi(ss, alpha, R, white_noise(1.0, 6), 8);
        double coarse = rel_fro(fim.F, fim_fd_oracle(ss, alpha, R, white_noise(1.0, 6), 8, 8e-4));
        double fine = rel_fro(fim.F, fim_fd_oracle(ss, alpha, R, white_noise(1.0, 6), 8, 4e-4));
        CHECK(coarse / fine == doctest::Approx(4.0).epsilon(0.2));
    }
}

TEST_CASE("pure-beam covariance gives block-diagonal information")
{
    Scenario scn = default_scenario();
    Steering tx = build_steering(scn.theta(), scn.n_t);
    Steering rx = build_steering(scn.theta(), scn.n_r);
    arma::cx_vec au = arma::conj(tx.a);
    arma::cx_mat R = scn.P * au * au.t();
    double bd2 = std::pow(arma::norm(rx.a_dot), 2);
    double c = (double)scn.T / scn.sigma_s_sq;

    Fim fim = fim_single(scn, R);
    CHECK(fim.F22(0, 0).real() == doctest::Approx(c * scn.P).epsilon(1e-12));
    CHECK(std::abs(fim.F12(0, 0)) <= 1e-10 * c * scn.P);
    CHECK(fim.F11(0, 0).real() == doctest::Approx(c * bd2 * scn.P).epsilon(1e-12));

    double expected_trace = 1.0 / (2.0 * c * bd2 * scn.P) + 2.0 / (2.0 * c * scn.P);
    CHECK(crb_trace(fim) == doctest::Approx(expected_trace).epsilon(1e-9));
    CHECK(angle_crb_schur(fim) == doctest::Approx(0.5 / (c * bd2 * scn.P)).epsilon(1e-9));
}

TEST_CASE("trace CRB matches the dense inverse and scales inversely")
{
    Scenario scn = default_scenario();
    arma::cx_mat R = seeded_psd(104, scn.n_t, scn.P);
    Fim fim = fim_single(scn, R);

    arma::mat Finv = arma::inv(fim.F);
    CHECK(crb_trace(fim) == doctest::Approx(arma::trace(Finv)).epsilon(1e-10));
    CHECK(angle_crb_schur(fim) == doctest::Approx(Finv(0, 0)).epsilon(1e-9));

    Fim scaled = fim;
    scaled.F11 *= 3.0;
    scaled.F12 *= 3.0;
    scaled.F22 *= 3.0;
    scaled.F *= 3.0;
    CHECK(crb_trace(scaled) == doctest::Approx(crb_trace(fim) / 3.0).epsilon(1e-12));
}

TEST_CASE("derivative-only illumination makes the gain unidentifiable")
{
    Scenario scn = default_scenario();
    Steering tx = build_steering(scn.theta(), scn.n_t);
    arma::cx_vec ad = arma::conj(tx.a_dot) / arma::norm(tx.a_dot);
    arma::cx_mat R = scn.P * ad * ad.t();

    Fim fim = fim_single(scn, R);
    CHECK(std::abs(fim.F22(0, 0)) <= 1e-10 * scn.P);
    try
    {
        crb_trace(fim);
        FAIL("expected an unidentifiability error");
    }
    catch (const unidentifiable_error &e)
    {
        CHECK(std::string(e.what()).find("alpha[0]") != std::string::npos);
    }

    Fim flat;
    flat.F11 = arma::cx_mat(1, 1, arma::fill::ones);
    flat.F12 = arma::cx_mat(1, 1, arma::fill::zeros);
    flat.F22 = arma::cx_mat(1, 1, arma::fill::zeros);
    flat.F = assemble_fim(flat.F11, flat.F12, flat.F22);
    try
    {
        angle_crb_schur(flat);
        FAIL("expected an unidentifiability error");
    }
    catch (const unidentifiable_error &e)
    {
        CHECK(std::string(e.what()).find("alpha[0]") != std::string::npos);
    }

    Fim tied = flat;
    tied.F12(0, 0) = 1.0;
    tied.F22(0, 0) = 1.0;
    tied.F = assemble_fim(tied.F11, tied.F12, tied.F22);
    try
    {
        angle_crb_schur(tied);
        FAIL("expected an unidentifiability error");
    }
    catch (const unidentifiable_error &e)
    {
        CHECK(std::string(e.what()).find("theta[0]") != std::string::npos);
    }
}

TEST_CASE("angle CRB closed form is anchored and consistent")
{
    Scenario scn = default_scenario();
    CHECK(angle_crb_closed(100.0, scn) == doctest::Approx(1.5188212214338399e-06).epsilon(1e-12));
    double root_deg = std::sqrt(angle_crb_closed(100.0, scn)) * 180.0 / 3.141592653589793;
    CHECK(root_deg == doctest::Approx(0.07061158509944103).epsilon(1e-12));

    CHECK(angle_crb_closed(50.0, scn) == doctest::Approx(2.0 * angle_crb_closed(100.0, scn)).epsilon(1e-12));
    CHECK_THROWS_AS(angle_crb_closed(0.0, scn), std::invalid_argument);
}

TEST_CASE("closed-form angle CRB equals the Schur form on the rank-1 family")
{
    Scenario scn = default_scenario();
    Steering tx = build_steering(scn.theta(), scn.n_t);
    CommChannel ch = draw_rayleigh_channel(6, scn.n_t, true, 1.0);
    OrthoBasis basis = ortho_basis(ch.h(), tx.a, tx.a_dot);

    Rng rng(105);
    for (int trial = 0; trial < 100; trial++)
    {
        double p1 = rng.uniform() * 1.4, p2 = rng.uniform() * 6.28;
        double n1 = std::sqrt(scn.P) * std::cos(p1);
        double n2 = std::sqrt(scn.P) * std::sin(p1) * std::cos(p2);
        double n3 = std::sqrt(scn.P) * std::sin(p1) * std::sin(p2);
        if (n1 * n1 < 1e-6 * scn.P)
            continue;
        arma::cx_vec u = n1 * std::polar(1.0, basis.zeta1) * basis.a_u +
                         n2 * std::polar(1.0, basis.zeta2) * basis.a_d +
                         n3 * std::polar(1.0, basis.zeta3) * basis.a_h;
        Fim fim = fim_single(scn, arma::cx_mat(u * u.t()));
        CHECK(angle_crb_schur(fim) == doctest::Approx(angle_crb_closed(n1 * n1, scn)).epsilon(1e-9));
    }
}

TEST_CASE("determinant closed form matches direct evaluation")
{
    Scenario scn = default_scenario();
    CHECK(fim_det_closed(0.0, scn) == 0.0);
    CHECK(fim_det_closed(2.0, scn) == doctest::Approx(64.0 * fim_det_closed(1.0, scn)).epsilon(1e-12));

    CommChannel ch = draw_rayleigh_channel(8, scn.n_t, true, 1.0);
    double cap = ch.gamma_max(scn.P);
    for (double frac : {0.5, 0.7, 0.9})
    {
        ClosedFormSolution sol = solve_closed_form(scn, ch, frac * cap, Criterion::AO);
        Fim fim = fim_single(scn, sol.R);
        CHECK(fim_det_closed(sol.nu_abs[0], scn) == doctest::Approx(arma::det(fim.F)).epsilon(1e-9));
    }
}

TEST_CASE("waveform realization reproduces the covariance exactly")
{
    arma::cx_mat R = seeded_psd(106, 6, 12.0);
    arma::cx_mat X = waveform_realization(R, 9);
    CHECK(X.n_rows == 6);
    CHECK(X.n_cols == 9);
    CHECK(arma::norm((1.0 / 9.0) * X * X.t() - R, "fro") <= 1e-10 * arma::norm(R, "fro"));

    CHECK_THROWS_AS(waveform_realization(R, 5), std::invalid_argument);
    CHECK_THROWS_AS(waveform_realization(-arma::eye<arma::cx_mat>(4, 4), 6), std::invalid_argument);
}

TEST_CASE("information assembly rejects malformed input")
{
    SteeringSet ss = build_steering_set({15.0 * deg}, 10, 12);
    arma::cx_vec alpha{arma::cx_double(1.0, 0.0)};
    NoiseModel noise = white_noise(1.0, 12);
    arma::cx_mat R = seeded_psd(107, 10, 10.0);

    CHECK_THROWS_AS(white_noise(-1.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(fim_multi(ss, arma::cx_vec(2), R, noise, 30), std::invalid_argument);
    CHECK_THROWS_AS(fim_multi(ss, alpha, arma::cx_mat(4, 4), noise, 30), std::invalid_argument);
    CHECK_THROWS_AS(fim_multi(ss, alpha, R, white_noise(1.0, 5), 30), std::invalid_argument);
    CHECK_THROWS_AS(fim_multi(ss, alpha, R, noise, 0), std::invalid_argument);

    NoiseModel colored;
    colored.Q = arma::cx_mat(12, 12, arma::fill::eye);
    colored.Q(0, 0) = 2.0;
    CHECK_THROWS_AS(fim_fd_oracle(ss, alpha, R, colored, 30), std::invalid_argument);

    NoiseModel singular;
    singular.Q = arma::cx_mat(12, 12, arma::fill::zeros);
    CHECK_THROWS_AS(fim_multi(ss, alpha, R, singular, 30), std::invalid_argument);

    Scenario two = default_scenario();
    two.targets.push_back({0.3, {1.0, 0.0}});
    CHECK_THROWS_AS(fim_single(two, R), std::invalid_argument);
}
