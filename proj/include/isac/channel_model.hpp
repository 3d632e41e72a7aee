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

#ifndef isac_channel_model_H
#define isac_channel_model_H

#include <armadillo>
#include <cstdint>

namespace isac
{

// Downlink channel of the communication user. For a single-antenna user
// (N_u = 1) the matrix H stores the row vector h^H, so the received power
// of a covariance R is tr(h h^H R) = the single entry of H R H^H.
struct CommChannel
{
    arma::cx_mat H;           // N_u x N_t channel matrix
    double sigma_c_sq = 1.0;  // noise power in [mW]
    arma::cx_mat V_c;         // right singular vectors of H (orthonormal columns)

    // Channel column vector h for N_u = 1; throws otherwise.
    arma::cx_vec h() const;
    // Largest feasible received power P * ||h||^2 for a budget P, in [mW].
    double gamma_max(double P) const;
};

// Required rate and the equivalent received-power threshold,
// Gamma = (2^gamma - 1) * sigma_c_sq. Both representations are kept.
struct RateConstraint
{
    double gamma = 0.0; // rate threshold in [bits/s/Hz]
    double Gamma = 0.0; // received-power threshold in [mW]
};

// Builds a CommChannel from an explicit matrix; computes V_c by singular
// value decomposition (singular values below 1e-12 of the largest are
// treated as zero).
CommChannel make_channel(const arma::cx_mat &H, double sigma_c_sq);

// Rayleigh fading draw: n_t i.i.d. CN(0,1) entries from the pinned Rng
// algorithm (see rng.hpp), optionally rescaled to ||h|| = 1. The same seed
// always produces the same channel.
CommChannel draw_rayleigh_channel(std::uint64_t seed, unsigned n_t, bool normalize, double sigma_c_sq = 1.0);

// Achievable rate log2 det(I + sigma_c^-2 H R H^H) in [bits/s/Hz].
// R must be Hermitian PSD of dimension n_t.
double achievable_rate(const arma::cx_mat &R, const CommChannel &ch);

// Rate threshold -> received-power threshold and back. Round trips are
// exact to 1e-12 relative; negative inputs are rejected.
RateConstraint snr_threshold(double gamma, double sigma_c_sq);
double gamma_of_Gamma(double Gamma, double sigma_c_sq);

} // namespace isac

#endif
