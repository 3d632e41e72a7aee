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

#ifndef isac_errors_H
#define isac_errors_H

#include <stdexcept>
#include <string>

namespace isac
{

// Configuration file or CLI argument problem. Messages carry the key name
// and, where available, the line number.
class config_error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Requested SNR threshold exceeds the maximum achievable received power.
class infeasible_error : public std::runtime_error
{
  public:
    infeasible_error(const std::string &msg, double gamma_max_mw) : std::runtime_error(msg), gamma_max(gamma_max_mw) {}
    double gamma_max; // largest feasible threshold, linear mW
};

// Fisher information is singular or ill-conditioned; the message names the
// parameter direction that cannot be estimated.
class unidentifiable_error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

} // namespace isac

#endif
