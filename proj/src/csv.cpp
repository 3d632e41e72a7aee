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
#include <stdexcept>

#include "isac/csv.hpp"

namespace isac
{

std::string fmt_g17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

CsvWriter::CsvWriter(const std::string &path, const std::vector<std::string> &columns)
    : os(path, std::ios::binary), n_cols(columns.size())
{
    if (!os)
        throw std::runtime_error("Cannot open '" + path + "' for writing.");
    if (columns.empty())
        throw std::invalid_argument("CSV needs at least one column.");
    for (size_t i = 0; i < columns.size(); i++)
        os << (i ? "," : "") << columns[i];
    os << "\n";
}

void CsvWriter::row(const std::vector<std::string> &cells)
{
    if (cells.size() != n_cols)
        throw std::invalid_argument("Row width does not match the header.");
    for (size_t i = 0; i < cells.size(); i++)
        os << (i ? "," : "") << cells[i];
    os << "\n";
    if (!os)
        throw std::runtime_error("CSV write failed.");
    n_rows++;
}

} // namespace isac
