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

#ifndef isac_sdpa_H
#define isac_sdpa_H

#include <string>
#include <vector>

#include "isac/channel_model.hpp"
#include "isac/scenario.hpp"

namespace isac
{

// Sparse SDPA interchange problem
//
//   minimize    c^T x
//   subject to  sum_i x_i F_i - F_0  PSD  (blockwise)
//
// Entries use 1-based block and position indices with i <= j; matno 0
// addresses F_0. The writer emits a canonical body (entries in stored
// order, doubles printed with 17 significant digits), so parse followed by
// re-emit reproduces the body byte for byte.
struct SdpaEntry
{
    unsigned matno = 0; // 0 for F_0, else variable index 1..m
    unsigned blkno = 0;
    unsigned i = 0;
    unsigned j = 0;
    double value = 0.0;
};

struct SdpProblem
{
    std::vector<std::string> comments; // header lines, emitted with a leading '*'
    unsigned m = 0;                    // number of variables
    std::vector<int> block_sizes;      // positive dense, negative diagonal
    std::vector<double> c;             // objective coefficients, length m
    std::vector<SdpaEntry> entries;
};

// Canonical text after the comment header.
std::string sdpa_body(const SdpProblem &p);

void write_sdpa(const SdpProblem &p, const std::string &path);
SdpProblem parse_sdpa(const std::string &path);

// Minimum eigenvalue of every block of sum_i x_i F_i - F_0 at the point x.
std::vector<double> sdp_block_mineig(const SdpProblem &p, const std::vector<double> &x);

// Real parameterization of a Hermitian n x n matrix: n diagonal entries,
// then Re of the strict upper triangle (row-major), then Im in the same
// order; n^2 values in total.
std::vector<double> pack_hermitian(const arma::cx_mat &R);
arma::cx_mat unpack_hermitian(const std::vector<double> &x, unsigned n);

// CRB-minimization covariance design as a semidefinite program: variables
// are the n_t^2 parameters of R followed by t_1..t_3K; blocks are the 3K
// Schur complement LMIs [F(R) e_k; e_k^T t_k] of size 3K+1, the real
// embedding [[Re R, -Im R], [Im R, Re R]] of size 2 n_t, the SNR
// inequality tr(Q_c R) >= Gamma and the trace equality tr(R) = P as a pair
// of scalar inequalities. Hermitian PSD of R and the embedded real block
// are equivalent.
SdpProblem build_sdp(const Scenario &scn, const CommChannel &ch, double Gamma);

// Builds and writes the problem in one step.
void export_sdp(const Scenario &scn, const CommChannel &ch, double Gamma, const std::string &path);

} // namespace isac

#endif
