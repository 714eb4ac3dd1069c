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

#include "qccdts/golden.h"

#include <algorithm>

namespace qccdts {

namespace {

// clang-format off
const std::vector<TableRow> kRows = {
    {1, 1, "1/3", 2, 2,
     {{1, 2}, {1, 3}}, {{1, 3}, {2, 3}},
     {{0, 1}, {0, 2}}, {{0, 2}, {1, 2}}},
    {1, 2, "1/3", 3, 2,
     {{1, 2}, {1, 4}}, {{1, 4}, {3, 4}},
     {{0, 1}, {0, 3}}, {{0, 3}, {2, 3}}},
    {1, 3, "1/3", 9, 3,
     {{1, 2, 4}, {1, 5, 10}}, {{1, 6, 10}, {7, 9, 10}},
     {{0, 1, 3}, {0, 4, 9}}, {{0, 5, 9}, {6, 8, 9}}},
    {1, 4, "1/3", 10, 3,
     {{1, 2, 4}, {1, 5, 11}}, {{1, 7, 11}, {8, 10, 11}},
     {{0, 1, 3}, {0, 4, 10}}, {{0, 6, 10}, {7, 9, 10}}},
    {1, 5, "1/3", 22, 4,
     {{1, 2, 4, 8}, {1, 6, 14, 23}}, {{1, 10, 18, 23}, {16, 20, 22, 23}},
     {{0, 1, 3, 7}, {0, 5, 13, 22}}, {{0, 9, 17, 22}, {15, 19, 21, 22}}},

    {2, 1, "2/4", 5, 2,
     {{1, 2}, {1, 3}, {1, 6}}, {{4, 6}, {5, 6}, {1, 6}},
     {{0, 1}, {0, 2}, {0, 5}}, {{3, 5}, {4, 5}, {0, 5}}},
    {2, 2, "2/4", 6, 2,
     {{1, 2}, {1, 3}, {1, 7}}, {{5, 7}, {6, 7}, {1, 7}},
     {{0, 1}, {0, 2}, {0, 6}}, {{4, 6}, {5, 6}, {0, 6}}},
    {2, 3, "2/4", 7, 2,
     {{1, 2}, {1, 3}, {1, 8}}, {{6, 8}, {7, 8}, {1, 8}},
     {{0, 1}, {0, 2}, {0, 7}}, {{5, 7}, {6, 7}, {0, 7}}},
    {2, 4, "2/4", 8, 2,
     {{1, 2}, {1, 3}, {1, 9}}, {{7, 9}, {8, 9}, {1, 9}},
     {{0, 1}, {0, 2}, {0, 8}}, {{6, 8}, {7, 8}, {0, 8}}},
    {2, 5, "2/4", 9, 2,
     {{1, 2}, {1, 3}, {1, 10}}, {{8, 10}, {9, 10}, {1, 10}},
     {{0, 1}, {0, 2}, {0, 9}}, {{7, 9}, {8, 9}, {0, 9}}},

    {3, 1, "3/5", 18, 3,
     {{1, 2, 4}, {1, 5, 10}, {1, 7, 14}, {1, 9, 19}},
     {{10, 15, 19}, {16, 18, 19}, {1, 11, 19}, {6, 13, 19}},
     {{0, 1, 3}, {0, 4, 9}, {0, 6, 13}, {0, 8, 18}},
     {{9, 14, 18}, {15, 17, 18}, {0, 10, 18}, {5, 12, 18}}},
    {3, 2, "3/5", 19, 3,
     {{1, 2, 4}, {1, 5, 10}, {1, 7, 14}, {1, 9, 20}},
     {{11, 16, 20}, {17, 19, 20}, {1, 12, 20}, {7, 14, 20}},
     {{0, 1, 3}, {0, 4, 9}, {0, 6, 13}, {0, 8, 19}},
     {{10, 15, 19}, {16, 18, 19}, {0, 11, 19}, {6, 13, 19}}},
    {3, 3, "3/5", 39, 4,
     {{1, 2, 4, 8}, {1, 6, 14, 24}, {1, 10, 25, 39}, {1, 12, 28, 40}},
     {{17, 27, 35, 40}, {33, 37, 39, 40}, {1, 13, 29, 40}, {2, 16, 31, 40}},
     {{0, 1, 3, 7}, {0, 5, 13, 23}, {0, 9, 24, 38}, {0, 11, 27, 39}},
     {{16, 26, 34, 39}, {32, 36, 38, 39}, {0, 12, 28, 39}, {1, 15, 30, 39}}},
    // The source lists w = 3 for this row, but every set has four elements.
    {3, 4, "3/5", 39, 4,
     {{1, 2, 4, 8}, {1, 6, 14, 24}, {1, 10, 25, 39}, {1, 13, 29, 40}},
     {{17, 27, 35, 40}, {33, 37, 39, 40}, {1, 12, 28, 40}, {2, 16, 31, 40}},
     {{0, 1, 3, 7}, {0, 5, 13, 23}, {0, 9, 24, 38}, {0, 12, 28, 39}},
     {{16, 26, 34, 39}, {32, 36, 38, 39}, {0, 11, 27, 39}, {1, 15, 30, 39}}},
};
// clang-format on

std::vector<SupportSet> zero_based(const std::vector<std::vector<int>> &sets) {
    std::vector<SupportSet> out;
    for (const auto &s : sets) {
        out.emplace_back(s);
    }
    return out;
}

std::vector<SupportSet> convert_one_based(const std::vector<std::vector<int>> &sets) {
    std::vector<SupportSet> out;
    for (const auto &s : sets) {
        out.push_back(from_one_based(s));
    }
    return out;
}

}  // namespace

std::span<const TableRow> golden_rows() {
    return kRows;
}

std::vector<const TableRow *> select_rows(int table_id, int row_no) {
    std::vector<const TableRow *> out;
    for (const auto &r : kRows) {
        if ((table_id == 0 || r.table_id == table_id) && (row_no == 0 || r.row_no == row_no)) {
            out.push_back(&r);
        }
    }
    return out;
}

std::vector<std::string> cross_check_transcription(const TableRow &row) {
    std::vector<std::string> errors;
    std::string where = "table " + std::to_string(row.table_id) + " row " + std::to_string(row.row_no) + ": ";
    if (convert_one_based(row.t_sets) != zero_based(row.g_x)) {
        errors.push_back(where + "X exponent sets disagree with the 1-based T column");
    }
    if (convert_one_based(row.z_sets) != zero_based(row.g_z)) {
        errors.push_back(where + "Z exponent sets disagree with the 1-based Z column");
    }
    int largest = 0;
    for (const auto &s : row.g_x) {
        largest = std::max(largest, s.back());
    }
    if (largest != row.m) {
        errors.push_back(where + "m = " + std::to_string(row.m) + " but the largest exponent is " +
                         std::to_string(largest));
    }
    for (const auto &s : row.g_x) {
        if (static_cast<int>(s.size()) != row.w) {
            errors.push_back(where + "w = " + std::to_string(row.w) + " but a set has " + std::to_string(s.size()) +
                             " elements");
            break;
        }
    }
    return errors;
}

TableRowReport verify_table_row(const TableRow &row) {
    TableRowReport out;
    out.row = &row;
    out.transcription_errors = cross_check_transcription(row);

    auto x_sets = convert_one_based(row.t_sets);
    auto z_table = convert_one_based(row.z_sets);
    auto reflected = reflect_family(x_sets);
    out.z_matches = canonical_order(reflected) == canonical_order(z_table);

    PolyMatrix x = systematic_row(x_sets);
    PolyMatrix z_default = build_z(x, default_permutation(x_sets.size()));
    out.z_matches_in_order = parity_supports(z_default) == z_table;

    CodeInput input;
    input.n = x_sets.size() + 1;
    input.x_sets = x_sets;
    input.z_sets = z_table;
    input.declared_m = row.m;
    input.declared_w = row.w;
    out.verification = verify_code(input);
    return out;
}

}  // namespace qccdts
