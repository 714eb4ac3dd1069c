// Copyright 2026 The qccdts Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCCDTS_VERIFY_H
#define QCCDTS_VERIFY_H

#include <optional>
#include <string>
#include <vector>

#include "qccdts/csoc.h"
#include "qccdts/distance.h"
#include "qccdts/dts.h"
#include "qccdts/reflect.h"
#include "qccdts/symplectic.h"

namespace qccdts {

/// A code description with all sets already in 0-based exponents.
struct CodeInput {
    size_t n = 0;
    std::vector<SupportSet> x_sets;
    /// When absent, Z is built by reflection with `pi`.
    std::optional<std::vector<SupportSet>> z_sets;
    /// When absent, default_permutation is used.
    std::optional<Permutation> pi;
    std::optional<int> declared_m;
    std::optional<int> declared_w;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    /// Informational checks are reported but do not decide the verdict.
    bool gating = true;
    std::string detail;
};

struct VerificationReport {
    StabilizerPair pair;
    std::vector<SupportSet> z_sets;
    Classification x_class;
    Classification z_class;
    CsocReport csoc_x;
    CsocReport csoc_z;
    PreservationReport preservation;
    SymplecticReport symplectic;
    SymmetryReport symmetry;
    std::optional<DistanceCertificate> dfree;
    std::vector<CheckResult> checks;
    std::vector<std::string> warnings;

    bool passed() const;
    const CheckResult *find(const std::string &name) const;
};

/// Throws std::invalid_argument on structurally invalid input (empty family,
/// unequal weights, n inconsistent with the family, bad permutation).
VerificationReport verify_code(const CodeInput &input);

/// Sets the pair's certification flags from a finished report.
void certify_pair(StabilizerPair &pair, const VerificationReport &report);

}  // namespace qccdts

#endif
