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
#include <string>

#include "isac/errors.hpp"
#include "isac/fim.hpp"

namespace isac
{

NoiseModel white_noise(double sigma_s_sq, unsigned n_r)
{
    if (sigma_s_sq <= 0.0)
        throw std::invalid_argument("sigma_s_sq must be positive.");
    NoiseModel nm;
    nm.Q = sigma_s_sq * arma::eye<arma::cx_mat>(n_r, n_r);
    return nm;
}

arma::mat assemble_fim(const arma::cx_mat &F11, const arma::cx_mat &F12, const arma::cx_mat &F22)
{
    unsigned K = (unsigned)F11.n_rows;
    if (F11.n_cols != K || F12.n_rows != K || F12.n_cols != K || F22.n_rows != K || F22.n_cols != K)
        throw std::invalid_argument("FIM blocks must all be K x K.");

    arma::mat R11 = arma::real(F11), R12 = arma::real(F12), I12 = arma::imag(F12);
    arma::mat R22 = arma::real(F22), I22 = arma::imag(F22);

    arma::mat F(3 * K, 3 * K);
    F.submat(0, 0, K - 1, K - 1) = R11;
    F.submat(0, K, K - 1, 2 * K - 1) = R12;
    F.submat(0, 2 * K, K - 1, 3 * K - 1) = -I12;
    F.submat(K, 0, 2 * K - 1, K - 1) = R12.t();
    F.submat(K, K, 2 * K - 1, 2 * K - 1) = R22;
    F.submat(K, 2 * K, 2 * K - 1, 3 * K - 1) = -I22;
    F.submat(2 * K, 0, 3 * K - 1, K - 1) = -I12.t();
    F.submat(2 * K, K, 3 * K - 1, 2 * K - 1) = -I22.t();
    F.submat(2 * K, 2 * K, 3 * K - 1, 3 * K - 1) = R22;
    return 2.0 * F;
}

static arma::cx_mat inverse_noise(const arma::cx_mat &Q)
{
    arma::vec ev;
    arma::cx_mat V;
    if (!arma::eig_sym(ev, V, 0.5 * (Q + Q.t())))
        throw std::runtime_error("Eigendecomposition of the noise covariance failed.");
    if (ev.min() <= 1e-12 * ev.max())
        throw std::invalid_argument("Noise covariance is singular.");
    return V * arma::diagmat(1.0 / ev) * V.t();
}

Fim fim_multi(const SteeringSet &ss, const arma::cx_vec &alpha, const arma::cx_mat &R, const NoiseModel &noise,
              unsigned T)
{
    unsigned K = ss.num_targets();
    unsigned n_t = (unsigned)ss.A.n_rows, n_r = (unsigned)ss.B.n_rows;
    if (alpha.n_elem != K)
        throw std::invalid_argument("alpha must have one entry per target.");
    if (R.n_rows != n_t || R.n_cols != n_t)
        throw std::invalid_argument("Covariance dimension does not match the transmit array.");
    if (noise.Q.n_rows != n_r || noise.Q.n_cols != n_r)
        throw std::invalid_argument("Noise covariance dimension does not match the receive array.");
    if (T < 1)
        throw std::invalid_argument("T must be at least 1.");

    arma::cx_mat Qinv = inverse_noise(noise.Q);
    arma::cx_mat S = arma::diagmat(alpha);
    arma::cx_mat RT = R.st();
    double Td = (double)T;

    const arma::cx_mat &A = ss.A, &Ad = ss.A_dot, &B = ss.B, &Bd = ss.B_dot;
    arma::cx_mat BdQBd = Bd.t() * Qinv * Bd;
    arma::cx_mat BdQB = Bd.t() * Qinv * B;
    arma::cx_mat BQBd = B.t() * Qinv * Bd;
    arma::cx_mat BQB = B.t() * Qinv * B;

    Fim out;
    out.F11 = Td * (BdQBd % (S.t() * A.t() * RT * A * S) + BdQB % (S.t() * A.t() * RT * Ad * S) +
                    BQBd % (S.t() * Ad.t() * RT * A * S) + BQB % (S.t() * Ad.t() * RT * Ad * S));
    out.F12 = Td * (BdQB % (S.t() * A.t() * RT * A) + BQB % (S.t() * Ad.t() * RT * A));
    out.F22 = Td * (BQB % (A.t() * RT * A));
    out.F = assemble_fim(out.F11, out.F12, out.F22);
    out.T = T;
    out.alpha = alpha;
    return out;
}

Fim fim_single(const Scenario &scn, const arma::cx_mat &R)
{
    if (scn.num_targets() != 1)
        throw std::invalid_argument("fim_single requires exactly one target.");
    if (R.n_rows != scn.n_t || R.n_cols != scn.n_t)
        throw std::invalid_argument("Covariance dimension does not match the transmit array.");

    Steering tx = build_steering(scn.theta(), scn.n_t);
    Steering rx = build_steering(scn.theta(), scn.n_r);
    arma::cx_double al = scn.alpha();
    double bd2 = std::pow(arma::norm(rx.a_dot), 2);
    double c = (double)scn.T / scn.sigma_s_sq;

    // tr(a* a^T R) = a^T R a*, and similarly for the derivative terms
    arma::cx_double tr_aa = arma::as_scalar(tx.a.st() * R * arma::conj(tx.a));
    arma::cx_double tr_dd = arma::as_scalar(tx.a_dot.st() * R * arma::conj(tx.a_dot));
    arma::cx_double tr_da = arma::as_scalar(tx.a.st() * R * arma::conj(tx.a_dot));

    Fim out;
    out.F11.set_size(1, 1);
    out.F12.set_size(1, 1);
    out.F22.set_size(1, 1);
    out.F11(0, 0) = c * std::norm(al) * (bd2 * tr_aa.real() + tr_dd.real());
    out.F12(0, 0) = c * std::conj(al) * tr_da;
    out.F22(0, 0) = c * tr_aa.real();
    out.F = assemble_fim(out.F11, out.F12, out.F22);
    out.T = scn.T;
    out.alpha = arma::cx_vec{al};
    return out;
}

static std::string param_name(unsigned idx, unsigned K)
{
    unsigned k = idx % K;
    const char *kind = idx < K ? "theta" : (idx < 2 * K ? "Re alpha" : "Im alpha");
    return std::string(kind) + "[" + std::to_string(k) + "]";
}

double crb_trace(const Fim &fim)
{
    unsigned K = fim.num_targets();
    arma::vec ev;
    arma::mat V;
    if (!arma::eig_sym(ev, V, 0.5 * (fim.F + fim.F.t())))
        throw std::runtime_error("Eigendecomposition of the FIM failed.");

    double emax = ev.max();
    double emin_abs = arma::abs(ev).min();
    if (emax <= 0.0 || emin_abs < emax / 1e12 || ev.min() <= 0.0)
    {
        arma::vec dir = arma::abs(V.col(arma::abs(ev).index_min()));
        throw unidentifiable_error("FIM is singular or ill-conditioned; parameter " +
                                   param_name((unsigned)dir.index_max(), K) + " is not identifiable.");
    }
    return arma::accu(1.0 / ev);
}

double angle_crb_schur(const Fim &fim)
{
    if (fim.num_targets() != 1)
        throw std::invalid_argument("angle_crb_schur requires exactly one target.");
    double f22 = fim.F22(0, 0).real();
    if (f22 <= 0.0)
        throw unidentifiable_error("F22 vanishes; parameter alpha[0] is not identifiable.");
    double schur = fim.F11(0, 0).real() - std::norm(fim.F12(0, 0)) / f22;
    if (schur <= 0.0)
        throw unidentifiable_error("Schur complement vanishes; parameter theta[0] is not identifiable.");
    return 0.5 / schur;
}

double angle_crb_closed(double nu1_sq, const Scenario &scn)
{
    if (scn.num_targets() != 1)
        throw std::invalid_argument("angle_crb_closed requires exactly one target.");
    if (nu1_sq <= 0.0)
        throw std::invalid_argument("nu1_sq must be positive; the angle CRB is infinite at zero.");
    double bd2 = std::pow(arma::norm(build_steering(scn.theta(), scn.n_r).a_dot), 2);
    return scn.sigma_s_sq / (2.0 * (double)scn.T * std::norm(scn.alpha()) * nu1_sq * bd2);
}

double fim_det_closed(double nu1_abs, const Scenario &scn)
{
    if (scn.num_targets() != 1)
        throw std::invalid_argument("fim_det_closed requires exactly one target.");
    if (nu1_abs < 0.0)
        throw std::invalid_argument("nu1_abs must be nonnegative.");
    double bd2 = std::pow(arma::norm(build_steering(scn.theta(), scn.n_r).a_dot), 2);
    double T3 = std::pow((double)scn.T, 3);
    return 8.0 * T3 * std::norm(scn.alpha()) / std::pow(scn.sigma_s_sq, 3) * bd2 * std::pow(nu1_abs, 6);
}

arma::cx_mat waveform_realization(const arma::cx_mat &R, unsigned T)
{
    unsigned n_t = (unsigned)R.n_rows;
    if (R.n_cols != n_t)
        throw std::invalid_argument("Covariance must be square.");
    if (T < n_t)
        throw std::invalid_argument("Exact sample covariance needs T >= n_t.");

    arma::vec ev;
    arma::cx_mat V;
    if (!arma::eig_sym(ev, V, 0.5 * (R + R.t())))
        throw std::runtime_error("Eigendecomposition of the covariance failed.");
    if (ev.min() < -1e-9 * std::max(1.0, ev.max()))
        throw std::invalid_argument("Covariance is not PSD.");
    ev.transform([](double v) { return v < 0.0 ? 0.0 : v; });

    arma::cx_mat root = V * arma::diagmat(arma::sqrt(ev)) * V.t();
    arma::cx_mat X(n_t, T, arma::fill::zeros);
    X.cols(0, n_t - 1) = std::sqrt((double)T) * root;

    if (arma::norm((1.0 / (double)T) * X * X.t() - R, "fro") > 1e-10 * std::max(1.0, arma::norm(R, "fro")))
        throw std::runtime_error("Sample covariance factorization lost precision.");
    return X;
}

arma::mat fim_fd_oracle(const SteeringSet &ss, const arma::cx_vec &alpha, const arma::cx_mat &R,
                        const NoiseModel &noise, unsigned T, double step)
{
    unsigned K = ss.num_targets();
    unsigned n_t = (unsigned)ss.A.n_rows, n_r = (unsigned)ss.B.n_rows;
    if (alpha.n_elem != K)
        throw std::invalid_argument("alpha must have one entry per target.");

    double sigma2 = noise.Q(0, 0).real();
    if (arma::norm(noise.Q - sigma2 * arma::eye<arma::cx_mat>(n_r, n_r), "fro") > 1e-9 * std::abs(sigma2))
        throw std::invalid_argument("The finite-difference reference supports white noise only.");

    arma::cx_mat X = waveform_realization(R, T);

    // mean of the received data as a function of the 3K real parameters
    auto mu = [&](const arma::vec &p) {
        arma::cx_mat A(n_t, K), B(n_r, K);
        arma::cx_vec al(K);
        for (unsigned k = 0; k < K; k++)
        {
            A.col(k) = build_steering(p(k), n_t).a;
            B.col(k) = build_steering(p(k), n_r).a;
            al(k) = arma::cx_double(p(K + k), p(2 * K + k));
        }
        return arma::cx_mat(B * arma::diagmat(al) * A.st() * X);
    };

    arma::vec p0(3 * K);
    for (unsigned k = 0; k < K; k++)
    {
        p0(k) = ss.angles[k];
        p0(K + k) = alpha(k).real();
        p0(2 * K + k) = alpha(k).imag();
    }

    std::vector<arma::cx_mat> D(3 * K);
    for (unsigned i = 0; i < 3 * K; i++)
    {
        arma::vec pp = p0, pm = p0;
        pp(i) += step;
        pm(i) -= step;
        D[i] = (mu(pp) - mu(pm)) / (2.0 * step);
    }

    arma::mat F(3 * K, 3 * K);
    for (unsigned i = 0; i < 3 * K; i++)
        for (unsigned j = 0; j < 3 * K; j++)
            F(i, j) = (2.0 / sigma2) * std::real(arma::cdot(arma::vectorise(D[i]), arma::vectorise(D[j])));
    return F;
}

} // namespace isac
