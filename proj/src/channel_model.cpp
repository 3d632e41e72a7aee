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
#include <stdexcept>

#include "isac/channel_model.hpp"
#include "isac/rng.hpp"

namespace isac
{

arma::cx_vec CommChannel::h() const
{
    if (H.n_rows != 1)
        throw std::invalid_argument("Channel vector accessor requires a single-antenna user.");
    return H.row(0).t();
}

double CommChannel::gamma_max(double P) const
{
    if (H.n_rows != 1)
        throw std::invalid_argument("gamma_max requires a single-antenna user.");
    double h2 = arma::as_scalar(arma::real(H * H.t()));
    return P * h2;
}

CommChannel make_channel(const arma::cx_mat &H, double sigma_c_sq)
{
    if (H.n_elem == 0)
        throw std::invalid_argument("Channel matrix must not be empty.");
    if (sigma_c_sq <= 0.0)
        throw std::invalid_argument("sigma_c_sq must be positive.");

    CommChannel ch;
    ch.H = H;
    ch.sigma_c_sq = sigma_c_sq;

    arma::cx_mat U, V;
    arma::vec s;
    if (!arma::svd(U, s, V, H))
        throw std::runtime_error("SVD of the channel matrix failed.");
    double tol = 1e-12 * (s.n_elem > 0 ? s.max() : 0.0);
    arma::uvec keep = arma::find(s > tol);
    ch.V_c = V.cols(keep);
    return ch;
}

CommChannel draw_rayleigh_channel(std::uint64_t seed, unsigned n_t, bool normalize, double sigma_c_sq)
{
    if (n_t < 1)
        throw std::invalid_argument("n_t must be at least 1.");

    Rng rng(seed);
    arma::cx_mat H(1, n_t);
    for (unsigned i = 0; i < n_t; i++)
        H(0, i) = std::conj(rng.cgauss()); // row stores h^H

    if (normalize)
    {
        double nrm = arma::norm(H, "fro");
        if (nrm == 0.0)
            throw std::runtime_error("Degenerate all-zero channel draw.");
        H /= nrm;
    }
    return make_channel(H, sigma_c_sq);
}

double achievable_rate(const arma::cx_mat &R, const CommChannel &ch)
{
    if (R.n_rows != R.n_cols || R.n_rows != ch.H.n_cols)
        throw std::invalid_argument("Covariance dimension does not match the channel.");

    arma::cx_mat Rh = 0.5 * (R + R.t());
    arma::vec ev;
    if (!arma::eig_sym(ev, Rh))
        throw std::runtime_error("Eigendecomposition of the covariance failed.");
    double scale = std::max(1.0, std::abs(ev.max()));
    if (ev.min() < -1e-9 * scale)
        throw std::invalid_argument("Covariance is not PSD.");

    arma::cx_mat M = arma::eye<arma::cx_mat>(ch.H.n_rows, ch.H.n_rows) + (1.0 / ch.sigma_c_sq) * ch.H * Rh * ch.H.t();
    M = 0.5 * (M + M.t());
    double logdet = 0.0;
    if (!arma::log_det_sympd(logdet, M))
        throw std::runtime_error("log-det of the rate matrix failed.");
    double rate = logdet / std::log(2.0);
    return rate < 0.0 ? 0.0 : rate;
}

RateConstraint snr_threshold(double gamma, double sigma_c_sq)
{
    if (gamma < 0.0)
        throw std::invalid_argument("gamma must be nonnegative.");
    if (sigma_c_sq <= 0.0)
        throw std::invalid_argument("sigma_c_sq must be positive.");
    RateConstraint rc;
    rc.gamma = gamma;
    rc.Gamma = (std::exp2(gamma) - 1.0) * sigma_c_sq;
    return rc;
}

double gamma_of_Gamma(double Gamma, double sigma_c_sq)
{
    if (Gamma < 0.0)
        throw std::invalid_argument("Gamma must be nonnegative.");
    if (sigma_c_sq <= 0.0)
        throw std::invalid_argument("sigma_c_sq must be positive.");
    return std::log2(1.0 + Gamma / sigma_c_sq);
}

} // namespace isac
