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

#ifndef isac_fim_H
#define isac_fim_H

#include <armadillo>

#include "isac/array_model.hpp"
#include "isac/scenario.hpp"

namespace isac
{

// Receive-side noise covariance; white_noise builds the default
// sigma_s_sq * I. Q must be invertible (smallest eigenvalue above
// 1e-12 of the largest).
struct NoiseModel
{
    arma::cx_mat Q;
};

NoiseModel white_noise(double sigma_s_sq, unsigned n_r);

// Fisher information for the 3K real parameters [theta; Re alpha; Im alpha].
// The complex K x K blocks are kept alongside the assembled real matrix
//
//        [  Re F11    Re F12   -Im F12 ]
//  F = 2 [  Re F12^T  Re F22   -Im F22 ]
//        [ -Im F12^T -Im F22^T  Re F22 ]
//
struct Fim
{
    arma::cx_mat F11, F12, F22; // complex K x K blocks
    arma::mat F;                // assembled real 3K x 3K matrix
    unsigned T = 0;             // samples per frame
    arma::cx_vec alpha;         // reflection coefficients

    unsigned num_targets() const { return (unsigned)F11.n_rows; }
};

// Assembles the real 3K x 3K matrix from the complex blocks.
arma::mat assemble_fim(const arma::cx_mat &F11, const arma::cx_mat &F12, const arma::cx_mat &F22);

// General multi-target Fisher information for a transmit covariance R and
// noise covariance Q.
Fim fim_multi(const SteeringSet &ss, const arma::cx_vec &alpha, const arma::cx_mat &R, const NoiseModel &noise,
              unsigned T);

// Single-target scalar-block form under white noise:
//   F11 = T |alpha|^2 / sigma_s^2 * (||b_dot||^2 tr(a* a^T R) + tr(a_dot* a_dot^T R))
//   F12 = T conj(alpha) / sigma_s^2 * tr(a_dot* a^T R)
//   F22 = T / sigma_s^2 * tr(a* a^T R)
Fim fim_single(const Scenario &scn, const arma::cx_mat &R);

// tr(F^-1). Throws unidentifiable_error when the condition number exceeds
// 1e12; the message names the parameter spanning the near-null direction.
double crb_trace(const Fim &fim);

// Angle-only bound 0.5 / (F11 - |F12|^2 / F22) from the complex blocks,
// equal to the leading diagonal entry of the inverse assembled matrix.
// Single target only; F22 must be positive.
double angle_crb_schur(const Fim &fim);

// Closed-form angle bound sigma_s^2 / (2 T |alpha|^2 |nu1|^2 ||b_dot||^2)
// in the rank-1 coordinates of the reduced problem.
double angle_crb_closed(double nu1_sq, const Scenario &scn);

// Closed-form determinant 8 T^3 |alpha|^2 sigma_s^-6 ||b_dot||^2 |nu1|^6 of
// the assembled single-target matrix in the same coordinates.
double fim_det_closed(double nu1_abs, const Scenario &scn);

// Waveform with exact sample covariance: X = sqrt(T) R^(1/2) [I 0], so that
// (1/T) X X^H = R without any large-T argument. Requires T >= n_t.
arma::cx_mat waveform_realization(const arma::cx_mat &R, unsigned T);

// Finite-difference reference for the Fisher information: central
// differences (default step 1e-5) on the mean B diag(alpha) A^T X of the
// received Gaussian model, assembled into the real 3K x 3K matrix. White
// noise only. Slow; used by the validation suites to arbitrate the
// closed-form blocks.
arma::mat fim_fd_oracle(const SteeringSet &ss, const arma::cx_vec &alpha, const arma::cx_mat &R,
                        const NoiseModel &noise, unsigned T, double step = 1e-5);

} // namespace isac

#endif
