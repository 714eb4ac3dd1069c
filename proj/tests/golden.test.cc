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

#include "gtest/gtest.h"

#include "test_oracles.h"

using namespace qccdts;

namespace {

std::vector<SupportSet> sets_of(const std::vector<std::vector<int>> &raw) {
    return {raw.begin(), raw.end()};
}

}  // namespace

TEST(golden, row_counts) {
    ASSERT_EQ(golden_rows().size(), 14u);
    ASSERT_EQ(select_rows(1).size(), 5u);
    ASSERT_EQ(select_rows(2).size(), 5u);
    ASSERT_EQ(select_rows(3).size(), 4u);
    ASSERT_EQ(select_rows(1, 3).size(), 1u);
    ASSERT_TRUE(select_rows(2, 9).empty());
}

TEST(golden, transcription_is_consistent) {
    for (const auto &row : golden_rows()) {
        ASSERT_TRUE(cross_check_transcription(row).empty()) << row.table_id << "/" << row.row_no;
    }
}

TEST(golden, cross_check_catches_a_typo) {
    TableRow row = golden_rows()[2];
    row.g_x[1][2] = 8;
    ASSERT_EQ(cross_check_transcription(row).size(), 2u);
    row = golden_rows()[0];
    row.w = 3;
    ASSERT_EQ(cross_check_transcription(row).size(), 1u);
}

TEST(golden, differences_distinct_in_every_row) {
    for (const auto &row : golden_rows()) {
        ASSERT_TRUE(oracle::all_differences_distinct(row.g_x)) << row.table_id << "/" << row.row_no;
        ASSERT_TRUE(oracle::all_differences_distinct(row.g_z)) << row.table_id << "/" << row.row_no;
    }
}

TEST(golden, printed_z_commutes_with_x) {
    for (const auto &row : golden_rows()) {
        auto x = systematic_row(sets_of(row.g_x));
        auto z = systematic_row(sets_of(row.g_z));
        ASSERT_TRUE(oracle::symplectic_exponents(x, z).empty()) << row.table_id << "/" << row.row_no;
    }
}

TEST(golden, every_row_verifies) {
    for (const auto &row : golden_rows()) {
        auto r = verify_table_row(row);
        ASSERT_TRUE(r.passed()) << row.table_id << "/" << row.row_no;
        ASSERT_TRUE(r.z_matches);
        ASSERT_TRUE(r.z_matches_in_order);
        ASSERT_EQ(r.verification.x_class.kind == DtsKind::kStrong ||
                      r.verification.x_class.kind == DtsKind::kFullStrong,
                  true);
        ASSERT_EQ(r.verification.dfree->d_free, row.w + 1);
    }
}

TEST(golden, rate_labels) {
    for (const auto &row : golden_rows()) {
        size_t k = row.g_x.size();
        ASSERT_EQ(std::string(row.rate_label), std::to_string(k - 1) + "/" + std::to_string(k + 1));
    }
}
