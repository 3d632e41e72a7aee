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
#include <fstream>
#include <sstream>

#include "isac/config.hpp"
#include "isac/errors.hpp"

namespace isac
{

static std::string trim(const std::string &s)
{
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos)
        return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

static std::string where(const std::string &key, unsigned line)
{
    return "key '" + key + "' on line " + std::to_string(line);
}

static double parse_double(const std::string &val, const std::string &key, unsigned line)
{
    size_t used = 0;
    double v;
    try
    {
        v = std::stod(val, &used);
    }
    catch (const std::exception &)
    {
        throw config_error("Malformed number for " + where(key, line) + ".");
    }
    if (used != val.size())
        throw config_error("Malformed number for " + where(key, line) + ".");
    return v;
}

static unsigned long long parse_uint(const std::string &val, const std::string &key, unsigned line)
{
    if (!val.empty() && val[0] == '-')
        throw config_error("Negative value for " + where(key, line) + ".");
    size_t used = 0;
    unsigned long long v;
    try
    {
        v = std::stoull(val, &used);
    }
    catch (const std::exception &)
    {
        throw config_error("Malformed integer for " + where(key, line) + ".");
    }
    if (used != val.size())
        throw config_error("Malformed integer for " + where(key, line) + ".");
    return v;
}

static bool parse_bool(const std::string &val, const std::string &key, unsigned line)
{
    if (val == "true" || val == "1")
        return true;
    if (val == "false" || val == "0")
        return false;
    throw config_error("Expected true/false for " + where(key, line) + ".");
}

static std::vector<double> parse_list(const std::string &val, const std::string &key, unsigned line)
{
    std::vector<double> out;
    std::stringstream ss(val);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_double(trim(item), key, line));
    if (out.empty())
        throw config_error("Empty list for " + where(key, line) + ".");
    return out;
}

static double dbm_to_mw(double dbm)
{
    return std::pow(10.0, dbm / 10.0);
}

ParsedConfig parse_config_text(const std::string &text)
{
    double p_dbm = 20.0, sigma_s_dbm = 0.0, sigma_c_dbm = 0.0;
    std::vector<double> theta_deg = {15.0}, alpha_re = {1.0}, alpha_im = {0.0};
    ParsedConfig pc;
    Scenario &scn = pc.scn;
    SweepSpec &spec = pc.spec;

    std::istringstream is(text);
    std::string line;
    unsigned lineno = 0;
    while (std::getline(is, line))
    {
        lineno++;
        size_t hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("Expected key=value on line " + std::to_string(lineno) + ".");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty())
            throw config_error("Missing key on line " + std::to_string(lineno) + ".");
        if (val.empty())
            throw config_error("Missing value for " + where(key, lineno) + ".");

        if (key == "n_t")
            scn.n_t = (unsigned)parse_uint(val, key, lineno);
        else if (key == "n_r")
            scn.n_r = (unsigned)parse_uint(val, key, lineno);
        else if (key == "t_samples")
            scn.T = (unsigned)parse_uint(val, key, lineno);
        else if (key == "p_dbm")
            p_dbm = parse_double(val, key, lineno);
        else if (key == "sigma_s_dbm")
            sigma_s_dbm = parse_double(val, key, lineno);
        else if (key == "sigma_c_dbm")
            sigma_c_dbm = parse_double(val, key, lineno);
        else if (key == "theta_deg")
            theta_deg = parse_list(val, key, lineno);
        else if (key == "alpha_re")
            alpha_re = parse_list(val, key, lineno);
        else if (key == "alpha_im")
            alpha_im = parse_list(val, key, lineno);
        else if (key == "seed")
            scn.seed = parse_uint(val, key, lineno);
        else if (key == "gamma_points")
            spec.gamma_points = (unsigned)parse_uint(val, key, lineno);
        else if (key == "gamma_min_frac")
            spec.gamma_min_frac = parse_double(val, key, lineno);
        else if (key == "gamma_max_frac")
            spec.gamma_max_frac = parse_double(val, key, lineno);
        else if (key == "channels")
            spec.channels = (unsigned)parse_uint(val, key, lineno);
        else if (key == "normalize_channels")
            spec.normalize_channels = parse_bool(val, key, lineno);
        else if (key == "gamma1_frac")
            spec.Gamma1_frac = parse_double(val, key, lineno);
        else if (key == "gamma2_frac")
            spec.Gamma2_frac = parse_double(val, key, lineno);
        else
            throw config_error("Unknown " + where(key, lineno) + ".");
    }

    scn.P = dbm_to_mw(p_dbm);
    scn.sigma_s_sq = dbm_to_mw(sigma_s_dbm);
    scn.sigma_c_sq = dbm_to_mw(sigma_c_dbm);

    if (alpha_im.size() == 1 && alpha_re.size() > 1)
        alpha_im.assign(alpha_re.size(), alpha_im[0]);
    if (alpha_re.size() != theta_deg.size() || alpha_im.size() != theta_deg.size())
        throw config_error("theta_deg, alpha_re and alpha_im must list the same number of targets.");
    scn.targets.clear();
    const double deg = 0.017453292519943295;
    for (size_t k = 0; k < theta_deg.size(); k++)
        scn.targets.push_back({theta_deg[k] * deg, {alpha_re[k], alpha_im[k]}});

    try
    {
        scn.validate();
        spec.validate();
    }
    catch (const std::invalid_argument &e)
    {
        throw config_error(e.what());
    }
    return pc;
}

ParsedConfig load_config(const std::string &path)
{
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw config_error("Cannot open config file '" + path + "'.");
    std::ostringstream buf;
    buf << is.rdbuf();
    return parse_config_text(buf.str());
}

} // namespace isac
