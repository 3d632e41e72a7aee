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

#ifndef isac_array_model_H
#define isac_array_model_H

#include <armadillo>
#include <vector>

namespace isac
{

// Uniform linear array, half-wavelength spacing, element indices centered
// about zero so that a(theta)^H a_dot(theta) = 0 holds exactly.
struct UlaConfig
{
    unsigned num_elements = 2; // at least 2
};

struct Steering
{
    arma::cx_vec a;     // unit-norm steering vector
    arma::cx_vec a_dot; // elementwise derivative with respect to theta
};

// Steering matrices for a target list; columns follow the angle order.
struct SteeringSet
{
    arma::cx_mat A;     // n_t x K transmit steering vectors
    arma::cx_mat A_dot; // n_t x K transmit derivatives
    arma::cx_mat B;     // n_r x K receive steering vectors
    arma::cx_mat B_dot; // n_r x K receive derivatives
    std::vector<double> angles; // K angles in [rad]

    unsigned num_targets() const { return (unsigned)angles.size(); }
};

// Unit-norm steering vector and its angle derivative. Entry m of a is
// exp(j pi m sin(theta)) / sqrt(n) with m running over the centered index
// set {-(n-1)/2, ..., (n-1)/2}.
//
// theta must lie strictly inside (-pi/2, pi/2); at the endpoints
// cos(theta) = 0 and the derivative norm collapses, which makes the angle
// unidentifiable downstream.
Steering build_steering(double theta, unsigned n);

// Steering matrices for n_t transmit and n_r receive elements. Duplicate
// angles are rejected since they make the Fisher information singular by
// construction.
SteeringSet build_steering_set(const std::vector<double> &angles, unsigned n_t, unsigned n_r);

// Transmit beampattern p(theta) = a(theta)^T R a(theta)^* for a Hermitian
// PSD covariance R. The grid may include the endpoints +-pi/2 (only the
// derivative degenerates there, not the steering vector itself). Samples
// are clipped to >= 0 on output.
std::vector<double> beampattern(const arma::cx_mat &R, const std::vector<double> &theta_grid);

} // namespace isac

#endif
