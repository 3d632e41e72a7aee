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

#include "isac/array_model.hpp"

namespace isac
{

static constexpr double pi = 3.141592653589793;

Steering build_steering(double theta, unsigned n)
{
    if (n < 2)
        throw std::invalid_argument("Steering vectors need at least 2 elements.");
    if (!(theta > -0.5 * pi && theta < 0.5 * pi))
        throw std::invalid_argument("theta must lie strictly inside (-pi/2, pi/2).");

    double scale = 1.0 / std::sqrt((double)n);
    double st = std::sin(theta), ct = std::cos(theta);

    Steering out;
    out.a.set_size(n);
    out.a_dot.set_size(n);
    for (unsigned i = 0; i < n; i++)
    {
        double m = (double)i - 0.5 * (double)(n - 1); // centered element index
        double phase = pi * m * st;
        arma::cx_double v = scale * arma::cx_double(std::cos(phase), std::sin(phase));
        out.a(i) = v;
        out.a_dot(i) = arma::cx_double(0.0, pi * m * ct) * v;
    }
    return out;
}

SteeringSet build_steering_set(const std::vector<double> &angles, unsigned n_t, unsigned n_r)
{
    if (angles.empty())
        throw std::invalid_argument("Angle list must not be empty.");
    for (size_t k = 0; k < angles.size(); k++)
        for (size_t j = 0; j < k; j++)
            if (angles[j] == angles[k])
                throw std::invalid_argument("Duplicate target angles make the FIM singular.");

    unsigned K = (unsigned)angles.size();
    SteeringSet ss;
    ss.A.set_size(n_t, K);
    ss.A_dot.set_size(n_t, K);
    ss.B.set_size(n_r, K);
    ss.B_dot.set_size(n_r, K);
    ss.angles = angles;
    for (unsigned k = 0; k < K; k++)
    {
        Steering tx = build_steering(angles[k], n_t);
        Steering rx = build_steering(angles[k], n_r);
        ss.A.col(k) = tx.a;
        ss.A_dot.col(k) = tx.a_dot;
        ss.B.col(k) = rx.a;
        ss.B_dot.col(k) = rx.a_dot;
    }
    return ss;
}

std::vector<double> beampattern(const arma::cx_mat &R, const std::vector<double> &theta_grid)
{
    if (R.n_rows != R.n_cols || R.n_rows < 2)
        throw std::invalid_argument("Covariance must be square with dimension >= 2.");
    double asym = arma::norm(R - R.t(), "fro");
    if (asym > 1e-9 * std::max(1.0, arma::norm(R, "fro")))
        throw std::invalid_argument("Covariance must be Hermitian.");

    unsigned n = (unsigned)R.n_rows;
    double scale = 1.0 / std::sqrt((double)n);

    std::vector<double> p(theta_grid.size());
    for (size_t g = 0; g < theta_grid.size(); g++)
    {
        // a(theta) evaluated inline; +-pi/2 is allowed here
        arma::cx_vec a(n);
        double st = std::sin(theta_grid[g]);
        for (unsigned i = 0; i < n; i++)
        {
            double m = (double)i - 0.5 * (double)(n - 1);
            double phase = pi * m * st;
            a(i) = scale * arma::cx_double(std::cos(phase), std::sin(phase));
        }
        double v = std::real(arma::as_scalar(a.st() * R * arma::conj(a)));
        if (v < -1e-10 * std::max(1.0, std::abs(arma::trace(R).real())))
            throw std::invalid_argument("Covariance is not PSD: negative beampattern sample.");
        p[g] = v < 0.0 ? 0.0 : v;
    }
    return p;
}

} // namespace isac
