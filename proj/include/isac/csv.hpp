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

#ifndef isac_csv_H
#define isac_csv_H

#include <fstream>
#include <string>
#include <vector>

namespace isac
{

// Shortest representation that round-trips a double exactly. Used for every
// numeric CSV cell so that repeated runs produce byte-identical files.
std::string fmt_g17(double v);

// Minimal CSV emitter. Cells are written verbatim (no quoting), rows end in
// "\n", the header is written on construction. Callers are expected to keep
// cell content free of commas and newlines; empty cells are fine.
class CsvWriter
{
  public:
    CsvWriter(const std::string &path, const std::vector<std::string> &columns);

    void row(const std::vector<std::string> &cells);

    size_t rows_written() const
    {
        return n_rows;
    }

  private:
    std::ofstream os;
    size_t n_cols;
    size_t n_rows = 0;
};

} // namespace isac

#endif
