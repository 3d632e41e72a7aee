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

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "isac/fim.hpp"
#include "isac/sdpa.hpp"

namespace isac
{

static std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string sdpa_body(const SdpProblem &p)
{
    std::ostringstream os;
    os << p.m << "\n";
    os << p.block_sizes.size() << "\n";
    for (size_t b = 0; b < p.block_sizes.size(); b++)
        os << (b ? " " : "") << p.block_sizes[b];
    os << "\n";
    for (size_t i = 0; i < p.c.size(); i++)
        os << (i ? " " : "") << fmt(p.c[i]);
    os << "\n";
    for (const auto &e : p.entries)
        os << e.matno << " " << e.blkno << " " << e.i << " " << e.j << " " << fmt(e.value) << "\n";
    return os.str();
}

void write_sdpa(const SdpProblem &p, const std::string &path)
{
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw std::runtime_error("Cannot open '" + path + "' for writing.");
    for (const auto &line : p.comments)
        os << "*" << line << "\n";
    os << sdpa_body(p);
    if (!os)
        throw std::runtime_error("Write to '" + path + "' failed.");
}

// strips the separators SDPA allows around the block structure tokens
static void clean_token(std::string &t)
{
    for (char &ch : t)
        if (ch == ',' || ch == '(' || ch == ')' || ch == '{' || ch == '}')
            ch = ' ';
}

SdpProblem parse_sdpa(const std::string &path)
{
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw std::runtime_error("Cannot open '" + path + "'.");

    SdpProblem p;
    std::string line;
    int stage = 0; // 0: m, 1: nblock, 2: blockstruct, 3: c, 4: entries
    unsigned nblock = 0;

    while (std::getline(is, line))
    {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (!line.empty() && (line[0] == '*' || line[0] == '"'))
        {
            if (stage == 0)
                p.comments.push_back(line.substr(1));
            continue;
        }
        std::string cleaned = line;
        clean_token(cleaned);
        std::istringstream ls(cleaned);
        if (stage == 0)
        {
            if (!(ls >> p.m))
                throw std::runtime_error("Malformed SDPA file: variable count expected.");
            stage = 1;
        }
        else if (stage == 1)
        {
            if (!(ls >> nblock))
                throw std::runtime_error("Malformed SDPA file: block count expected.");
            stage = 2;
        }
        else if (stage == 2)
        {
            int b;
            while (ls >> b)
                p.block_sizes.push_back(b);
            if (p.block_sizes.size() != nblock)
                throw std::runtime_error("Malformed SDPA file: block structure length mismatch.");
            stage = 3;
        }
        else if (stage == 3)
        {
            double v;
            while (ls >> v)
                p.c.push_back(v);
            if (p.c.size() != p.m)
                throw std::runtime_error("Malformed SDPA file: objective length mismatch.");
            stage = 4;
        }
        else
        {
            SdpaEntry e;
            if (!(ls >> e.matno >> e.blkno >> e.i >> e.j >> e.value))
            {
                if (cleaned.find_first_not_of(" \t") == std::string::npos)
                    continue;
                throw std::runtime_error("Malformed SDPA file: bad entry line.");
            }
            if (e.matno > p.m || e.blkno == 0 || e.blkno > p.block_sizes.size())
                throw std::runtime_error("Malformed SDPA file: entry indices out of range.");
            p.entries.push_back(e);
        }
    }
    if (stage != 4)
        throw std::runtime_error("Malformed SDPA file: truncated header.");
    return p;
}

std::vector<double> sdp_block_mineig(const SdpProblem &p, const std::vector<double> &x)
{
    if (x.size() != p.m)
        throw std::invalid_argument("Point dimension does not match the problem.");

    std::vector<arma::mat> blocks;
    for (int bs : p.block_sizes)
    {
        unsigned n = (unsigned)(bs < 0 ? -bs : bs);
        blocks.emplace_back(n, n, arma::fill::zeros);
    }
    for (const auto &e : p.entries)
    {
        double w = e.matno == 0 ? -1.0 : x[e.matno - 1];
        arma::mat &M = blocks[e.blkno - 1];
        if (e.i > M.n_rows || e.j > M.n_cols)
            throw std::invalid_argument("Entry indices exceed the block size.");
        M(e.i - 1, e.j - 1) += w * e.value;
        if (e.i != e.j)
            M(e.j - 1, e.i - 1) += w * e.value;
    }

    std::vector<double> mineigs;
    for (const auto &M : blocks)
    {
        arma::vec ev;
        if (!arma::eig_sym(ev, M))
            throw std::runtime_error("Eigendecomposition of an SDP block failed.");
        mineigs.push_back(ev.min());
    }
    return mineigs;
}

std::vector<double> pack_hermitian(const arma::cx_mat &R)
{
    unsigned n = (unsigned)R.n_rows;
    if (R.n_cols != n)
        throw std::invalid_argument("Matrix must be square.");
    std::vector<double> x;
    x.reserve((size_t)n * n);
    for (unsigned d = 0; d < n; d++)
        x.push_back(R(d, d).real());
    for (unsigned pq = 0; pq < 2; pq++)
        for (unsigned p = 0; p < n; p++)
            for (unsigned q = p + 1; q < n; q++)
                x.push_back(pq == 0 ? R(p, q).real() : R(p, q).imag());
    return x;
}

arma::cx_mat unpack_hermitian(const std::vector<double> &x, unsigned n)
{
    if (x.size() != (size_t)n * n)
        throw std::invalid_argument("Parameter vector must have n^2 entries.");
    arma::cx_mat R(n, n, arma::fill::zeros);
    size_t at = 0;
    for (unsigned d = 0; d < n; d++)
        R(d, d) = x[at++];
    for (unsigned p = 0; p < n; p++)
        for (unsigned q = p + 1; q < n; q++)
        {
            R(p, q) += x[at];
            R(q, p) += x[at++];
        }
    for (unsigned p = 0; p < n; p++)
        for (unsigned q = p + 1; q < n; q++)
        {
            R(p, q) += arma::cx_double(0.0, x[at]);
            R(q, p) -= arma::cx_double(0.0, x[at++]);
        }
    return R;
}

// Hermitian basis matrix for parameter index v under the pack_hermitian
// ordering.
static arma::cx_mat basis_matrix(unsigned v, unsigned n)
{
    std::vector<double> x((size_t)n * n, 0.0);
    x[v] = 1.0;
    return unpack_hermitian(x, n);
}

static void push_sym_upper(std::vector<SdpaEntry> &entries, unsigned matno, unsigned blkno, const arma::mat &M)
{
    for (unsigned i = 0; i < M.n_rows; i++)
        for (unsigned j = i; j < M.n_cols; j++)
            if (M(i, j) != 0.0)
                entries.push_back({matno, blkno, i + 1, j + 1, M(i, j)});
}

SdpProblem build_sdp(const Scenario &scn, const CommChannel &ch, double Gamma)
{
    scn.validate();
    if (ch.H.n_rows != 1 || ch.H.n_cols != scn.n_t)
        throw std::invalid_argument("Channel must be 1 x n_t.");
    if (Gamma < 0.0)
        throw std::invalid_argument("Gamma must be nonnegative.");

    unsigned K = scn.num_targets(), n_t = scn.n_t;
    unsigned nR = n_t * n_t;
    unsigned dim = 3 * K;

    std::vector<double> angles;
    arma::cx_vec alpha(K);
    for (unsigned k = 0; k < K; k++)
    {
        angles.push_back(scn.targets[k].theta);
        alpha(k) = scn.targets[k].alpha;
    }
    SteeringSet ss = build_steering_set(angles, n_t, scn.n_r);
    NoiseModel noise = white_noise(scn.sigma_s_sq, scn.n_r);
    arma::cx_vec h = ch.h();

    SdpProblem p;
    p.m = nR + dim;
    for (unsigned k = 0; k < dim; k++)
        p.block_sizes.push_back((int)dim + 1);
    p.block_sizes.push_back((int)(2 * n_t));
    p.block_sizes.push_back(1); // SNR
    p.block_sizes.push_back(1); // trace >= P
    p.block_sizes.push_back(1); // trace <= P
    p.c.assign(nR, 0.0);
    p.c.insert(p.c.end(), dim, 1.0);

    p.comments = {
        " CRB-minimization covariance design, sparse SDPA format",
        " minimize sum t_k  s.t.  sum_i x_i F_i - F_0 >= 0 blockwise",
        " variables: x_1..x_" + std::to_string(nR) + " parameterize the Hermitian R",
        "   (" + std::to_string(n_t) + " diagonal entries, then Re of the strict upper",
        "   triangle row-major, then Im in the same order), followed by t_1..t_" + std::to_string(dim),
        " blocks 1.." + std::to_string(dim) + ": Schur LMIs [F(R) e_k; e_k^T t_k], F is the real " +
            std::to_string(dim) + "x" + std::to_string(dim) + " Fisher matrix",
        " block " + std::to_string(dim + 1) + ": real embedding [[Re R, -Im R],[Im R, Re R]] of R >= 0",
        " block " + std::to_string(dim + 2) + ": tr(Q_c R) >= Gamma = " + fmt(Gamma),
        " blocks " + std::to_string(dim + 3) + "," + std::to_string(dim + 4) + ": tr(R) = P = " + fmt(scn.P) +
            " as paired inequalities",
    };

    // R-parameter coefficient matrices
    for (unsigned v = 0; v < nR; v++)
    {
        arma::cx_mat E = basis_matrix(v, n_t);
        arma::mat FE = fim_multi(ss, alpha, E, noise, scn.T).F; // linear in R

        for (unsigned k = 0; k < dim; k++)
            push_sym_upper(p.entries, v + 1, k + 1, FE);

        arma::mat W(2 * n_t, 2 * n_t);
        arma::mat Er = arma::real(E), Ei = arma::imag(E);
        W.submat(0, 0, n_t - 1, n_t - 1) = Er;
        W.submat(0, n_t, n_t - 1, 2 * n_t - 1) = -Ei;
        W.submat(n_t, 0, 2 * n_t - 1, n_t - 1) = Ei;
        W.submat(n_t, n_t, 2 * n_t - 1, 2 * n_t - 1) = Er;
        push_sym_upper(p.entries, v + 1, dim + 1, W);

        double snr_coeff = std::real(arma::cdot(h, E * h)); // tr(h h^H E)
        if (snr_coeff != 0.0)
            p.entries.push_back({v + 1, dim + 2, 1, 1, snr_coeff});
        double tr = arma::trace(E).real();
        if (tr != 0.0)
        {
            p.entries.push_back({v + 1, dim + 3, 1, 1, tr});
            p.entries.push_back({v + 1, dim + 4, 1, 1, -tr});
        }
    }

    // t_k slack variables and the constant matrix F_0
    for (unsigned k = 0; k < dim; k++)
        p.entries.push_back({nR + k + 1, k + 1, dim + 1, dim + 1, 1.0});
    for (unsigned k = 0; k < dim; k++)
        p.entries.push_back({0, k + 1, k + 1, dim + 1, -1.0});
    if (Gamma != 0.0)
        p.entries.push_back({0, dim + 2, 1, 1, Gamma});
    p.entries.push_back({0, dim + 3, 1, 1, scn.P});
    p.entries.push_back({0, dim + 4, 1, 1, -scn.P});

    return p;
}

void export_sdp(const Scenario &scn, const CommChannel &ch, double Gamma, const std::string &path)
{
    write_sdpa(build_sdp(scn, ch, Gamma), path);
}

} // namespace isac
