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

#ifndef isac_validate_H
#define isac_validate_H

#include <cstdint>
#include <string>
#include <vector>

#include "isac/scenario.hpp"

namespace isac
{

struct CheckResult
{
    std::string name;
    bool pass = false;
    double measured = 0.0; // residual, count or flag, see the check
    double tol = 0.0;      // threshold the measurement was held against
};

struct ValidationReport
{
    std::vector<CheckResult> checks;

    bool all_pass() const;

    // One line per check: "check=<name> status=pass|fail measured=<v> tol=<t>".
    std::string text() const;
};

/*!
Cross-validation suite

Runs every oracle comparison the library is built on and reports one
machine-readable line per invariant:

 - steering vector identities against their closed forms
 - Fisher information against a finite-difference oracle
 - the single-target blocks against the general assembly
 - determinant and Schur-complement closed forms against direct algebra
 - invariance of the information and the rate under subspace projection
 - the closed-form solver against bisection and grid oracles, including
   the constraint-boundary case and the criterion identity
 - the correlation coefficient against adaptive quadrature and the
   aligned-channel special case
 - beampattern ordering at the target angle across seeded channels
 - a deliberately corrupted solver constant, which must break the oracle
   equivalence (guards the regression the suite exists to catch)
 - byte-identical output rows across repeated runs

`seed` drives every randomized instance; a fixed seed reproduces the report
byte for byte.
*/
ValidationReport validate_suite(const Scenario &scn, std::uint64_t seed);

} // namespace isac

#endif
