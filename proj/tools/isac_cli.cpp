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
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "isac/channel_model.hpp"
#include "isac/config.hpp"
#include "isac/errors.hpp"
#include "isac/sdpa.hpp"
#include "isac/sweeps.hpp"
#include "isac/validate.hpp"

// exit codes: 0 success, 1 validation failure, 2 configuration error
int main(int argc, char **argv)
{
    CLI::App app{"Transmit covariance design for joint sensing and communication arrays"};
    app.require_subcommand(1);

    std::string config_path, out_path;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int threads = 0;
    double gamma_frac = 0.5;

    app.add_option("--config", config_path, "Key=value configuration file");
    app.add_option("--seed", seed, "Override the configured RNG seed")->each([&](const std::string &) {
        seed_set = true;
    });
    app.add_option("--threads", threads, "Worker thread count (0 keeps the runtime default)");

    CLI::App *cmd_pareto = app.add_subcommand("pareto", "Rate/CRB tradeoff sweep, closed form and oracle");
    cmd_pareto->add_option("--out", out_path, "Output CSV")->required();

    CLI::App *cmd_beam = app.add_subcommand("beampattern", "Transmit beampatterns of the reference designs");
    cmd_beam->add_option("--out", out_path, "Output CSV")->required();
    cmd_beam->add_option("--gamma-frac", gamma_frac, "Rate threshold as a fraction of the channel maximum");

    CLI::App *cmd_corr = app.add_subcommand("corr-study", "Per-channel correlation coefficients and sweeps");
    cmd_corr->add_option("--out", out_path, "Output CSV")->required();

    CLI::App *cmd_sdp = app.add_subcommand("export-sdp", "Write the design problem in sparse SDPA format");
    cmd_sdp->add_option("--out", out_path, "Output .dat-s file")->required();
    cmd_sdp->add_option("--gamma-frac", gamma_frac, "Rate threshold as a fraction of the channel maximum");

    CLI::App *cmd_validate = app.add_subcommand("validate", "Run the oracle cross-validation suite");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

#ifdef _OPENMP
    if (threads > 0)
        omp_set_num_threads(threads);
#endif

    try
    {
        isac::ParsedConfig pc = config_path.empty() ? isac::parse_config_text("") : isac::load_config(config_path);
        if (seed_set)
            pc.scn.seed = seed;

        if (cmd_pareto->parsed())
        {
            isac::run_pareto(pc.scn, pc.spec, out_path);
        }
        else if (cmd_beam->parsed() || cmd_sdp->parsed())
        {
            isac::CommChannel ch = isac::draw_rayleigh_channel(pc.scn.seed, pc.scn.n_t, pc.spec.normalize_channels,
                                                               pc.scn.sigma_c_sq);
            double gamma_max = isac::gamma_of_Gamma(ch.gamma_max(pc.scn.P), ch.sigma_c_sq);
            double gamma = gamma_frac * gamma_max;
            if (cmd_beam->parsed())
            {
                isac::run_beampattern(pc.scn, ch, gamma, out_path);
            }
            else
            {
                double Gamma = isac::snr_threshold(gamma, ch.sigma_c_sq).Gamma;
                isac::export_sdp(pc.scn, ch, Gamma, out_path);
            }
        }
        else if (cmd_corr->parsed())
        {
            isac::run_corr_study(pc.scn, pc.spec, out_path);
        }
        else if (cmd_validate->parsed())
        {
            isac::ValidationReport report = isac::validate_suite(pc.scn, pc.scn.seed);
            std::cout << report.text();
            if (!report.all_pass())
                return 1;
        }
    }
    catch (const isac::config_error &e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
