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

#include "qccdts/distance.h"

#include "gtest/gtest.h"

#include "qccdts/csoc.h"
#include "test_oracles.h"

using namespace qccdts;

namespace {

Gf2Poly P(std::initializer_list<int> e) {
    return Gf2Poly::from_support(e);
}

PolyMatrix example_x() {
    return PolyMatrix::row({P({0, 1}), P({0, 2}), P({0})});
}

PolyMatrix row_of(std::vector<SupportSet> sets) {
    return systematic_row(sets);
}

}  // namespace

TEST(distance, column_distance_example) {
    ASSERT_EQ(column_distance(example_x(), 0), 2);
    ASSERT_EQ(column_distance(example_x(), 2), 3);
    ASSERT_EQ(column_distance(PolyMatrix::row({P({0}), P({0})}), 0), 2);
    ASSERT_THROW(column_distance(example_x(), -1), std::invalid_argument);
}

TEST(distance, column_distance_matches_kernel_enumeration) {
    for (const auto &x : {example_x(), row_of({{0, 1}, {0, 2}, {0, 5}}), row_of({{0, 1, 3}, {0, 4, 9}})}) {
        int j_max = static_cast<int>(20 / x.cols()) - 1;
        for (int j = 0; j <= j_max; j++) {
            ASSERT_EQ(column_distance(x, j), oracle::column_distance_by_kernel(x, j)) << x.str() << " j=" << j;
        }
    }
}

TEST(distance, column_distances_nondecreasing) {
    auto d = column_distances(row_of({{0, 1}, {0, 2}, {0, 9}}), 18);
    ASSERT_EQ(d.size(), 19u);
    for (size_t k = 1; k < d.size(); k++) {
        ASSERT_LE(d[k - 1], d[k]);
    }
    ASSERT_EQ(d.back(), 3);
}

TEST(distance, column_distance_guard) {
    auto x = row_of({{0, 1}, {0, 2}, {0, 5}, {0, 9}});
    ASSERT_NO_THROW(column_distance(x, 15));
    ASSERT_THROW(column_distance(x, 16), std::invalid_argument);
}

TEST(distance, dfree_upper_witnesses) {
    auto ex = dfree_upper(example_x());
    ASSERT_EQ(ex.d_free, 3);
    ASSERT_EQ(ex.method, DistanceMethod::kWitnessUpperBound);
    ASSERT_EQ(ex.witness, (Codeword{{0, {1, 0, 1}}, {1, {0, 0, 1}}}));
    ASSERT_TRUE(is_codeword(example_x(), ex.witness));

    auto t2 = row_of({{0, 1}, {0, 2}, {0, 5}});
    ASSERT_EQ(dfree_upper(t2).d_free, 3);
    ASSERT_TRUE(is_codeword(t2, dfree_upper(t2).witness));

    auto t15 = row_of({{0, 1, 3, 7}, {0, 5, 13, 22}});
    ASSERT_EQ(dfree_upper(t15).d_free, 5);
    ASSERT_TRUE(is_codeword(t15, dfree_upper(t15).witness));
}

TEST(distance, is_codeword_rejects_perturbation) {
    Codeword c = dfree_upper(example_x()).witness;
    c[1].bits[2] = 0;
    ASSERT_FALSE(is_codeword(example_x(), c));
    ASSERT_THROW(is_codeword(example_x(), Codeword{{0, {1, 1}}}), std::invalid_argument);
}

TEST(distance, dfree_exact_example) {
    auto four = dfree_exact(example_x(), 4);
    ASSERT_EQ(four.str(), "3");
    ASSERT_TRUE(is_codeword(example_x(), four.witness));
    ASSERT_EQ(codeword_weight(four.witness), 3u);
    ASSERT_EQ(four.witness.front().time, 0);

    auto two = dfree_exact(example_x(), 2);
    ASSERT_FALSE(two.distance.has_value());
    ASSERT_EQ(two.str(), ">2");

    ASSERT_EQ(dfree_exact(PolyMatrix::row({P({0}), P({0})}), 3).str(), "2");
}

TEST(distance, dfree_exact_guards) {
    ASSERT_THROW(dfree_exact(example_x(), 0), std::invalid_argument);
    ASSERT_THROW(dfree_exact(example_x(), kMaxExactBudget + 1), std::invalid_argument);
    ASSERT_THROW(dfree_exact(row_of({{0, 1}, {0, 13}}), 3), std::invalid_argument);
}

TEST(distance, dfree_exact_matches_enumeration) {
    std::vector<std::vector<std::vector<int>>> families = {
        {{0, 1}, {0, 2}},
        {{0, 1}, {0, 3}},
        {{0, 1}, {0, 2}, {0, 5}},
        {{0, 1, 3}, {0, 4, 9}},
        {{0, 2}, {0, 3}},
        {{0, 1, 2}},
        {{0, 1}, {0, 1}},
    };
    for (const auto &f : families) {
        std::vector<SupportSet> sets(f.begin(), f.end());
        PolyMatrix x = systematic_row(sets);
        int frames = static_cast<int>(18 / f.size());
        int expected = oracle::free_distance_by_enumeration(f, frames);
        auto got = dfree_exact(x, std::min(expected, kMaxExactBudget));
        ASSERT_EQ(got.distance, expected) << x.str();
        ASSERT_TRUE(is_codeword(x, got.witness));
    }
}

TEST(distance, certify_dfree) {
    auto ex = certify_dfree(example_x());
    ASSERT_EQ(ex.d_free, 3);
    ASSERT_EQ(ex.method, DistanceMethod::kCsocCertificate);
    ASSERT_TRUE(ex.exact_agrees());

    auto t13 = certify_dfree(row_of({{0, 1, 3}, {0, 4, 9}}));
    ASSERT_EQ(t13.d_free, 4);
    ASSERT_TRUE(t13.exact_agrees());

    auto t33 = certify_dfree(row_of({{0, 1, 3, 7}, {0, 5, 13, 23}, {0, 9, 24, 38}, {0, 11, 27, 39}}));
    ASSERT_EQ(t33.d_free, 5);
    ASSERT_FALSE(t33.exact.has_value());
    ASSERT_FALSE(t33.exact_skipped_reason.empty());

    ASSERT_THROW(certify_dfree(row_of({{0, 1}, {0, 1}})), std::invalid_argument);
}
