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

// Reference constructions for rates 1/3, 2/4 and 3/5, stored in both the
// 1-based DTS-set notation and the 0-based exponent notation so that each
// column can be checked against the other.

#ifndef QCCDTS_GOLDEN_H
#define QCCDTS_GOLDEN_H

#include <span>
#include <string>
#include <vector>

#include "qccdts/verify.h"

namespace qccdts {

struct TableRow {
    int table_id;
    int row_no;
    const char *rate_label;
    int m;
    int w;
    std::vector<std::vector<int>> t_sets;  // 1-based
    std::vector<std::vector<int>> z_sets;  // 1-based
    std::vector<std::vector<int>> g_x;     // 0-based
    std::vector<std::vector<int>> g_z;     // 0-based
};

std::span<const TableRow> golden_rows();

/// Rows of one table (1..3), or all rows for table 0.
std::vector<const TableRow *> select_rows(int table_id, int row_no = 0);

/// Transcription consistency: g columns against the 1-based columns, m
/// against the largest exponent, w against the set sizes. Returns one message
/// per mismatch.
std::vector<std::string> cross_check_transcription(const TableRow &row);

struct TableRowReport {
    const TableRow *row = nullptr;
    std::vector<std::string> transcription_errors;
    /// Reflected family equals g_z as an unordered family.
    bool z_matches = false;
    /// Reflection with the default permutation reproduces g_z in order.
    bool z_matches_in_order = false;
    VerificationReport verification;

    bool passed() const {
        return transcription_errors.empty() && z_matches && verification.passed();
    }
};

/// Rebuilds X from the 1-based T column, reflects it, matches the result
/// against the Z column, and verifies the pair as printed (X with the table's
/// Z in its stated order).
TableRowReport verify_table_row(const TableRow &row);

}  // namespace qccdts

#endif
