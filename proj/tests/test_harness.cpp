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
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <doctest.h>

#include "isac/csv.hpp"
#include "isac/fim.hpp"
#include "isac/sweeps.hpp"
#include "isac/validate.hpp"

using namespace isac;

static std::string slurp(const std::string &path)
{
    std::ifstream is(path, std::ios::binary);
    REQUIRE(is.good());
    std::ostringstream buf;
    buf << is.rdbuf();
    return buf.str();
}

// keeps trailing empty fields, unlike getline loops
static std::vector<std::string> split(const std::string &s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true)
    {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos)
        {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

TEST_CASE("g17 formatting round-trips every double")
{
    CHECK(fmt_g17(2.0) == "2");
    CHECK(fmt_g17(0.5) == "0.5");
    for (double v : {3.141592653589793, 1.0 / 3.0, 1e-300, 1e300, -0.0, 123456.789, 0.07061158509944103})
    {
        std::string s = fmt_g17(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
}

TEST_CASE("csv writer emits exactly what it was given")
{
    std::string path = "/tmp/isacsim_test_basic.csv";
    {
        CsvWriter csv(path, {"a", "b"});
        csv.row({"1", "x"});
        csv.row({"2", ""});
        CHECK(csv.rows_written() == 2);
        CHECK_THROWS_AS(csv.row({"only one"}), std::invalid_argument);
    }
    CHECK(slurp(path) == "a,b\n1,x\n2,\n");
    std::remove(path.c_str());

    CHECK_THROWS_AS(CsvWriter("/tmp/isacsim_test_empty.csv", {}), std::invalid_argument);
    std::remove("/tmp/isacsim_test_empty.csv");
    CHECK_THROWS_AS(CsvWriter("/nonexistent/dir/file.csv", {"a"}), std::runtime_error);
}

TEST_CASE("rate grid spans the requested fractions")
{
    Scenario scn = default_scenario();
    SweepSpec spec;
    CommChannel ch = draw_rayleigh_channel(scn.seed, scn.n_t, spec.normalize_channels, scn.sigma_c_sq);
    double gamma_max = gamma_of_Gamma(ch.gamma_max(scn.P), ch.sigma_c_sq);

    std::vector<double> grid = rate_grid(scn, ch, spec);
    REQUIRE(grid.size() == 20);
    CHECK(grid.front() == doctest::Approx(0.02 * gamma_max).epsilon(1e-12));
    CHECK(grid.back() == doctest::Approx(0.98 * gamma_max).epsilon(1e-12));
    for (size_t i = 1; i < grid.size(); i++)
        CHECK(grid[i] > grid[i - 1]);

    SweepSpec one = spec;
    one.gamma_points = 1;
    std::vector<double> single = rate_grid(scn, ch, one);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == doctest::Approx(0.02 * gamma_max).epsilon(1e-12));
}

TEST_CASE("pareto sweep solves every threshold with both methods")
{
    Scenario scn = default_scenario();
    SweepSpec spec;
    CommChannel ch = draw_rayleigh_channel(scn.seed, scn.n_t, spec.normalize_channels, scn.sigma_c_sq);
    std::vector<double> gammas = rate_grid(scn, ch, spec);
    std::vector<ParetoPoint> pts = pareto_points(scn, ch, gammas);
    REQUIRE(pts.size() == 40);

    for (size_t i = 0; i < gammas.size(); i++)
    {
        const ParetoPoint &pc = pts[2 * i], &po = pts[2 * i + 1];
        CHECK(pc.method == "closed");
        CHECK(po.method == "oracle");
        CHECK(pc.gamma == gammas[i]);
        CHECK(po.gamma == gammas[i]);
        CHECK(std::abs(pc.root_crb_deg - po.root_crb_deg) <= 1e-9 * po.root_crb_deg);

        if (pc.regime == Regime::active)
            CHECK(pc.rate == doctest::Approx(pc.gamma).epsilon(1e-9));
        else
            CHECK(pc.rate >= pc.gamma * (1.0 - 1e-12));
    }

    for (size_t i = 1; i < gammas.size(); i++)
    {
        CHECK(pts[2 * i].nu_sq[0] <= pts[2 * i - 2].nu_sq[0] * (1.0 + 1e-12));
        CHECK(pts[2 * i].root_crb_deg >= pts[2 * i - 2].root_crb_deg * (1.0 - 1e-12));
    }

    double over = 1.05 * gamma_of_Gamma(ch.gamma_max(scn.P), ch.sigma_c_sq);
    std::vector<ParetoPoint> inf = pareto_points(scn, ch, {over});
    REQUIRE(inf.size() == 2);
    CHECK(inf[0].regime == Regime::infeasible);
    CHECK(std::isnan(inf[0].nu_sq[0]));
    CHECK(std::isnan(inf[1].root_crb_deg));

    Scenario two = scn;
    two.targets.push_back({0.4, {1.0, 0.0}});
    CHECK_THROWS_AS(pareto_points(two, ch, gammas), std::invalid_argument);
    CHECK_THROWS_AS(pareto_points(scn, ch, {-0.5}), std::invalid_argument);
}

TEST_CASE("pareto file is stable and carries infeasible rows")
{
    Scenario scn = default_scenario();
    SweepSpec spec;
    std::string p1 = "/tmp/isacsim_test_pareto1.csv", p2 = "/tmp/isacsim_test_pareto2.csv";

    run_pareto(scn, spec, p1);
    run_pareto(scn, spec, p2);
    std::string c1 = slurp(p1);
    CHECK(c1 == slurp(p2));

    std::vector<std::string> lines = split(c1, '\n');
    REQUIRE(lines.size() >= 41);
    CHECK(lines.size() == 42); // header + 40 rows + trailing empty piece
    CHECK(lines.back().empty());
    CHECK(lines[0] == "gamma_bpshz,Gamma_mw,nu1_sq,nu2_sq,nu3_sq,crb_trace,angle_crb_rad2,root_crb_deg,"
                      "rate_bpshz,method,regime");
    CHECK(split(lines[1], ',').size() == 11);

#ifdef _OPENMP
    int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    run_pareto(scn, spec, p2);
    std::string serial = slurp(p2);
    omp_set_num_threads(4);
    run_pareto(scn, spec, p2);
    std::string parallel = slurp(p2);
    omp_set_num_threads(saved);
    CHECK(serial == c1);
    CHECK(parallel == c1);
#endif

    SweepSpec wide = spec;
    wide.gamma_max_frac = 1.3;
    run_pareto(scn, wide, p1);
    std::vector<std::string> wlines = split(slurp(p1), '\n');
    unsigned infeasible = 0;
    for (const auto &line : wlines)
    {
        std::vector<std::string> cells = split(line, ',');
        if (cells.size() == 11 && cells[10] == "infeasible")
        {
            infeasible++;
            CHECK(cells[2].empty());
            CHECK(cells[7].empty());
            CHECK(!cells[0].empty());
        }
    }
    CHECK(infeasible >= 2);
    CHECK(infeasible % 2 == 0);

    std::remove(p1.c_str());
    std::remove(p2.c_str());
}

TEST_CASE("beampattern table orders the designs at the target angle")
{
    Scenario scn = default_scenario();
    CommChannel ch = draw_rayleigh_channel(scn.seed, scn.n_t, true, scn.sigma_c_sq);
    double gamma_mid = 0.5 * gamma_of_Gamma(ch.gamma_max(scn.P), ch.sigma_c_sq);

    BeampatternTable table = beampattern_table(scn, ch, gamma_mid);
    REQUIRE(table.theta_deg.size() == 361);
    CHECK(table.theta_deg.front() == -90.0);
    CHECK(table.theta_deg.back() == 90.0);

    size_t it = 210; // theta = 15 degrees
    REQUIRE(table.theta_deg[it] == 15.0);
    CHECK(table.p_crbmin[it] == doctest::Approx(scn.P).epsilon(1e-9));
    CHECK(table.p_comm[it] <= table.p_ao[it] * (1.0 + 1e-9));
    CHECK(table.p_ao[it] <= table.p_crbmin[it] * (1.0 + 1e-9));

    for (size_t i = 0; i < table.theta_deg.size(); i++)
    {
        CHECK(table.p_ao[i] == table.p_detmax[i]);
        CHECK(table.p_ao[i] >= 0.0);
    }

    std::string path = "/tmp/isacsim_test_beam.csv";
    run_beampattern(scn, ch, gamma_mid, path);
    std::vector<std::string> lines = split(slurp(path), '\n');
    CHECK(lines.size() == 363); // header + 361 rows + trailing empty piece
    CHECK(lines[0] == "theta_deg,p_isac_ao,p_isac_detmax,p_crbmin,p_commopt");
    std::vector<std::string> first = split(lines[1], ',');
    REQUIRE(first.size() == 5);
    CHECK(first[0] == "-90");
    CHECK(first[1] == first[2]);
    std::remove(path.c_str());
}

TEST_CASE("correlation study ranks channels by their coefficient")
{
    Scenario scn = default_scenario();
    SweepSpec spec;
    spec.channels = 4;
    spec.gamma_points = 8;

    CorrStudy study = corr_study(scn, spec);
    REQUIRE(study.reports.size() == 4);
    REQUIRE(study.rows.size() == 32);

    unsigned ones = 0;
    for (unsigned c = 0; c < 4; c++)
    {
        const CorrelationReport &rep = study.reports[c];
        CHECK(rep.channel_id == c);
        CHECK(rep.seed == scn.seed + c);
        CHECK(std::abs(rep.G_analytic - rep.G_quadrature) <= 1e-6 * rep.G_quadrature);
        CHECK(rep.G_normalized > 0.0);
        CHECK(rep.G_normalized <= 1.0);
        ones += rep.G_normalized == 1.0 ? 1 : 0;
    }
    CHECK(ones == 1);

    const double rad2deg = 57.29577951308232;
    for (unsigned c = 0; c < 4; c++)
        for (unsigned g = 0; g < 8; g++)
        {
            const CorrStudyRow &row = study.rows[c * 8 + g];
            CHECK(row.channel_id == c);
            CHECK(row.gamma_frac == study.rows[g].gamma_frac);
            if (row.regime == Regime::infeasible)
                continue;
            CHECK(row.nu1_sq <= scn.P * (1.0 + 1e-12));
            double expect = std::sqrt(angle_crb_closed(row.nu1_sq, scn)) * rad2deg;
            CHECK(row.root_crb_deg == doctest::Approx(expect).epsilon(1e-9));
            if (row.regime == Regime::active)
                CHECK(row.rate == doctest::Approx(row.gamma).epsilon(1e-9));
            else
                CHECK(row.rate >= row.gamma * (1.0 - 1e-12));
        }

    Scenario two = default_scenario();
    two.targets.push_back({0.3, {1.0, 0.0}});
    CHECK_THROWS_AS(corr_study(two, spec), std::invalid_argument);
}

TEST_CASE("correlation study file interleaves summaries and sweep rows")
{
    Scenario scn = default_scenario();
    SweepSpec spec;
    spec.channels = 4;
    spec.gamma_points = 8;
    std::string p1 = "/tmp/isacsim_test_corr1.csv", p2 = "/tmp/isacsim_test_corr2.csv";

    run_corr_study(scn, spec, p1);
    run_corr_study(scn, spec, p2);
    std::string c1 = slurp(p1);
    CHECK(c1 == slurp(p2));

    std::vector<std::string> lines = split(c1, '\n');
    CHECK(lines.size() == 38); // header + 4 summaries + 32 rows + trailing empty piece
    CHECK(lines[0] == "row_type,channel_id,seed,G,G_quadrature,G_normalized,gamma_frac,gamma_bpshz,"
                      "Gamma_mw,nu1_sq,root_crb_deg,rate_bpshz,regime");
    unsigned summaries = 0, paretos = 0;
    for (size_t i = 1; i + 1 < lines.size(); i++)
    {
        std::vector<std::string> cells = split(lines[i], ',');
        REQUIRE(cells.size() == 13);
        if (cells[0] == "summary")
        {
            summaries++;
            CHECK(!cells[3].empty());
            CHECK(cells[6].empty());
        }
        else
        {
            CHECK(cells[0] == "pareto");
            paretos++;
            CHECK(cells[3].empty());
            CHECK(!cells[6].empty());
        }
    }
    CHECK(summaries == 4);
    CHECK(paretos == 32);
    std::remove(p1.c_str());
    std::remove(p2.c_str());
}

TEST_CASE("validation suite passes end to end")
{
    ValidationReport report = validate_suite(default_scenario(), 7);
    std::string text = report.text();

    CHECK(report.all_pass());
    CHECK(text.find("status=fail") == std::string::npos);
    CHECK(!report.checks.empty());

    std::vector<std::string> lines = split(text, '\n');
    CHECK(lines.size() == report.checks.size() + 1); // trailing newline
    for (size_t i = 0; i + 1 < lines.size(); i++)
    {
        CHECK(lines[i].find("check=") == 0);
        CHECK(lines[i].find(" status=pass ") != std::string::npos);
        CHECK(lines[i].find(" measured=") != std::string::npos);
        CHECK(lines[i].find(" tol=") != std::string::npos);
    }
}
