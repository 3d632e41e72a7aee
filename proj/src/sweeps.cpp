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
#include <limits>

#include "isac/array_model.hpp"
#include "isac/csv.hpp"
#include "isac/fim.hpp"
#include "isac/kernels.hpp"
#include "isac/sweeps.hpp"

namespace isac
{

static const double nan_d = std::numeric_limits<double>::quiet_NaN();
static const double rad2deg = 57.29577951308232;

std::vector<double> rate_grid(const Scenario &scn, const CommChannel &ch, const SweepSpec &spec)
{
    scn.validate();
    spec.validate();
    double gamma_max = gamma_of_Gamma(ch.gamma_max(scn.P), ch.sigma_c_sq);
    std::vector<double> out(spec.gamma_points);
    for (unsigned i = 0; i < spec.gamma_points; i++)
    {
        double t = spec.gamma_points == 1 ? 0.0 : (double)i / (double)(spec.gamma_points - 1);
        double frac = spec.gamma_min_frac + t * (spec.gamma_max_frac - spec.gamma_min_frac);
        out[i] = frac * gamma_max;
    }
    return out;
}

// evaluates the metrics shared by both methods once the covariance is known
static void fill_metrics(ParetoPoint &pt, const arma::cx_mat &R, const Scenario &scn, const CommChannel &ch)
{
    Fim fim = fim_single(scn, R);
    pt.crb_trace = crb_trace(fim);
    pt.angle_crb = angle_crb_schur(fim);
    pt.root_crb_deg = std::sqrt(pt.angle_crb) * rad2deg;
    pt.rate = achievable_rate(R, ch);
}

static arma::cx_vec rebuild_u(const OrthoBasis &basis, const std::array<double, 3> &nu)
{
    arma::cx_vec u = nu[0] * std::polar(1.0, basis.zeta1) * basis.a_u +
                     nu[1] * std::polar(1.0, basis.zeta2) * basis.a_d;
    if (!basis.degenerate_h)
        u += nu[2] * std::polar(1.0, basis.zeta3) * basis.a_h;
    return u;
}

std::vector<ParetoPoint> pareto_points(const Scenario &scn, const CommChannel &ch, const std::vector<double> &gammas)
{
    scn.validate();
    if (scn.num_targets() != 1)
        throw std::invalid_argument("The tradeoff sweep needs a single target.");
    for (double gamma : gammas)
        if (!(gamma >= 0.0) || !std::isfinite(gamma))
            throw std::invalid_argument("Rate thresholds must be finite and nonnegative.");

    double gamma_cap = ch.gamma_max(scn.P);
    std::vector<ParetoPoint> out(2 * gammas.size());

    map_indexed(gammas.size(), [&](size_t i) {
        double gamma = gammas[i];
        double Gamma = snr_threshold(gamma, ch.sigma_c_sq).Gamma;
        ParetoPoint &pc = out[2 * i];
        ParetoPoint &po = out[2 * i + 1];
        pc.gamma = po.gamma = gamma;
        pc.Gamma = po.Gamma = Gamma;
        pc.method = "closed";
        po.method = "oracle";

        if (Gamma > gamma_cap * (1.0 + 1e-12))
        {
            pc.regime = po.regime = Regime::infeasible;
            pc.nu_sq = po.nu_sq = {nan_d, nan_d, nan_d};
            pc.crb_trace = po.crb_trace = nan_d;
            pc.angle_crb = po.angle_crb = nan_d;
            pc.root_crb_deg = po.root_crb_deg = nan_d;
            pc.rate = po.rate = nan_d;
            return;
        }

        ClosedFormSolution sol = solve_closed_form(scn, ch, Gamma, Criterion::AO);
        pc.regime = sol.regime;
        for (int l = 0; l < 3; l++)
            pc.nu_sq[l] = sol.nu_abs[l] * sol.nu_abs[l];
        fill_metrics(pc, sol.R, scn, ch);

        ReducedProblem rp{sol.basis.c1, sol.basis.c2, sol.basis.c3, scn.P, Gamma};
        Magnitudes mags = oracle_solve(rp, OracleMethod::bisection);
        po.regime = mags.regime;
        for (int l = 0; l < 3; l++)
            po.nu_sq[l] = mags.nu[l] * mags.nu[l];
        arma::cx_vec u = rebuild_u(sol.basis, mags.nu);
        arma::cx_mat R = u * u.t();
        fill_metrics(po, R, scn, ch);
    });
    return out;
}

static std::string cell(double v)
{
    return std::isnan(v) ? "" : fmt_g17(v);
}

void run_pareto(const Scenario &scn, const SweepSpec &spec, const std::string &out_path)
{
    CommChannel ch = draw_rayleigh_channel(scn.seed, scn.n_t, spec.normalize_channels, scn.sigma_c_sq);
    std::vector<double> gammas = rate_grid(scn, ch, spec);
    std::vector<ParetoPoint> pts = pareto_points(scn, ch, gammas);

    CsvWriter csv(out_path, {"gamma_bpshz", "Gamma_mw", "nu1_sq", "nu2_sq", "nu3_sq", "crb_trace",
                             "angle_crb_rad2", "root_crb_deg", "rate_bpshz", "method", "regime"});
    for (const auto &pt : pts)
        csv.row({fmt_g17(pt.gamma), fmt_g17(pt.Gamma), cell(pt.nu_sq[0]), cell(pt.nu_sq[1]), cell(pt.nu_sq[2]),
                 cell(pt.crb_trace), cell(pt.angle_crb), cell(pt.root_crb_deg), cell(pt.rate), pt.method,
                 to_string(pt.regime)});
}

BeampatternTable beampattern_table(const Scenario &scn, const CommChannel &ch, double gamma_bpshz)
{
    double Gamma = snr_threshold(gamma_bpshz, ch.sigma_c_sq).Gamma;
    arma::cx_mat R_ao = solve_closed_form(scn, ch, Gamma, Criterion::AO).R;
    arma::cx_mat R_dm = solve_closed_form(scn, ch, Gamma, Criterion::DetMax).R;
    BenchmarkSolutions bench = benchmark_solutions(scn, ch);

    BeampatternTable table;
    const double deg2rad = 0.017453292519943295;
    for (int i = 0; i <= 360; i++)
        table.theta_deg.push_back(-90.0 + 0.5 * i);
    std::vector<double> grid_rad(table.theta_deg.size());
    for (size_t i = 0; i < grid_rad.size(); i++)
        grid_rad[i] = table.theta_deg[i] * deg2rad;

    table.p_ao = beampattern(R_ao, grid_rad);
    table.p_detmax = beampattern(R_dm, grid_rad);
    table.p_crbmin = beampattern(bench.R_crbmin, grid_rad);
    table.p_comm = beampattern(bench.R_comm, grid_rad);
    return table;
}

void run_beampattern(const Scenario &scn, const CommChannel &ch, double gamma_bpshz, const std::string &out_path)
{
    BeampatternTable table = beampattern_table(scn, ch, gamma_bpshz);
    CsvWriter csv(out_path, {"theta_deg", "p_isac_ao", "p_isac_detmax", "p_crbmin", "p_commopt"});
    for (size_t i = 0; i < table.theta_deg.size(); i++)
        csv.row({fmt_g17(table.theta_deg[i]), fmt_g17(table.p_ao[i]), fmt_g17(table.p_detmax[i]),
                 fmt_g17(table.p_crbmin[i]), fmt_g17(table.p_comm[i])});
}

CorrStudy corr_study(const Scenario &scn, const SweepSpec &spec)
{
    scn.validate();
    spec.validate();
    if (scn.num_targets() != 1)
        throw std::invalid_argument("The correlation study needs a single target.");

    unsigned C = spec.channels, G = spec.gamma_points;
    CorrStudy study;
    study.reports.resize(C);
    study.rows.resize((size_t)C * G);

    Steering st = build_steering(scn.theta(), scn.n_t);

    map_indexed(C, [&](size_t c) {
        std::uint64_t seed = scn.seed + c;
        CommChannel ch = draw_rayleigh_channel(seed, scn.n_t, spec.normalize_channels, scn.sigma_c_sq);
        double gamma_cap = ch.gamma_max(scn.P);
        OrthoBasis basis = ortho_basis(ch.h(), st.a, st.a_dot);

        CorrelationReport rep = corr_coeff(basis, scn.P, spec.Gamma1_frac * gamma_cap,
                                           spec.Gamma2_frac * gamma_cap, GMode::both);
        rep.channel_id = (unsigned)c;
        rep.seed = seed;
        study.reports[c] = rep;

        std::vector<double> gammas = rate_grid(scn, ch, spec);
        for (unsigned g = 0; g < G; g++)
        {
            CorrStudyRow &row = study.rows[c * G + g];
            row.channel_id = (unsigned)c;
            row.seed = seed;
            row.gamma_frac = G == 1 ? spec.gamma_min_frac
                                    : spec.gamma_min_frac +
                                          (double)g / (double)(G - 1) * (spec.gamma_max_frac - spec.gamma_min_frac);
            row.gamma = gammas[g];
            row.Gamma = snr_threshold(gammas[g], ch.sigma_c_sq).Gamma;
            if (row.Gamma > gamma_cap * (1.0 + 1e-12))
            {
                row.regime = Regime::infeasible;
                row.nu1_sq = row.root_crb_deg = row.rate = nan_d;
                continue;
            }
            ClosedFormSolution sol = solve_closed_form(scn, ch, row.Gamma, Criterion::AO);
            row.regime = sol.regime;
            row.nu1_sq = sol.nu_abs[0] * sol.nu_abs[0];
            Fim fim = fim_single(scn, sol.R);
            row.root_crb_deg = std::sqrt(angle_crb_schur(fim)) * rad2deg;
            row.rate = achievable_rate(sol.R, ch);
        }
    });

    study.reports = normalize_reports(study.reports);
    return study;
}

void run_corr_study(const Scenario &scn, const SweepSpec &spec, const std::string &out_path)
{
    CorrStudy study = corr_study(scn, spec);

    CsvWriter csv(out_path, {"row_type", "channel_id", "seed", "G", "G_quadrature", "G_normalized", "gamma_frac",
                             "gamma_bpshz", "Gamma_mw", "nu1_sq", "root_crb_deg", "rate_bpshz", "regime"});
    for (const auto &rep : study.reports)
        csv.row({"summary", std::to_string(rep.channel_id), std::to_string(rep.seed), fmt_g17(rep.G_analytic),
                 fmt_g17(rep.G_quadrature), fmt_g17(rep.G_normalized), "", "", "", "", "", "", ""});
    for (const auto &row : study.rows)
        csv.row({"pareto", std::to_string(row.channel_id), std::to_string(row.seed), "", "", "",
                 fmt_g17(row.gamma_frac), fmt_g17(row.gamma), fmt_g17(row.Gamma), cell(row.nu1_sq),
                 cell(row.root_crb_deg), cell(row.rate), to_string(row.regime)});
}

} // namespace isac
