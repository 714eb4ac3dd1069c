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

#include "qccdts/reflect.h"

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

std::vector<SupportSet> random_strong_family(std::mt19937_64 &rng, int r, int w, int scope) {
    while (true) {
        std::vector<SupportSet> sets;
        std::vector<std::vector<int>> raw;
        for (int i = 0; i < r; i++) {
            raw.push_back(oracle::random_set(rng, w, scope));
            sets.emplace_back(raw.back());
        }
        if (oracle::all_differences_distinct(raw)) {
            return sets;
        }
    }
}

}  // namespace

TEST(reflect, permutation_validation) {
    ASSERT_THROW(Permutation({0, 0}), std::invalid_argument);
    ASSERT_THROW(Permutation({1, 2}), std::invalid_argument);
    std::vector<int> one_based{2, 1, 3};
    Permutation p = Permutation::from_one_based(one_based);
    ASSERT_EQ(p(0), 1);
    ASSERT_EQ(p.str(), "(2,1,3)");
    ASSERT_TRUE(p.is_involution());
    ASSERT_EQ(p.fixed_points(), (std::vector<int>{2}));
    std::vector<int> zero{0, 1};
    ASSERT_THROW(Permutation::from_one_based(zero), std::invalid_argument);
}

TEST(reflect, adjacent_pairs) {
    ASSERT_EQ(Permutation::adjacent_pairs(2).str(), "(2,1)");
    ASSERT_EQ(Permutation::adjacent_pairs(3).str(), "(2,1,3)");
    ASSERT_EQ(Permutation::adjacent_pairs(4).str(), "(2,1,4,3)");
    ASSERT_EQ(Permutation::adjacent_pairs(1).str(), "(1)");
    ASSERT_EQ(default_permutation(4), Permutation::adjacent_pairs(4));
}

TEST(reflect, all_permutations) {
    auto all = Permutation::all(3);
    ASSERT_EQ(all.size(), 6u);
    ASSERT_TRUE(all.front().is_identity());
    ASSERT_EQ(all[1].str(), "(1,3,2)");
    ASSERT_EQ(all.back().str(), "(3,2,1)");
}

TEST(reflect, reflect_family) {
    std::vector<SupportSet> ex{{0, 1}, {0, 2}};
    ASSERT_EQ(reflect_family(ex), (std::vector<SupportSet>{{1, 2}, {0, 2}}));
    std::vector<SupportSet> t13{{0, 1, 3}, {0, 4, 9}};
    ASSERT_EQ(reflect_family(t13), (std::vector<SupportSet>{{6, 8, 9}, {0, 5, 9}}));
    std::vector<SupportSet> pal{{0, 2}};
    ASSERT_EQ(reflect_family(pal, 2), pal);
}

TEST(reflect, reflect_family_window_checks) {
    std::vector<SupportSet> ex{{0, 1}, {0, 2}};
    ASSERT_THROW(reflect_family(ex, 1), std::domain_error);
    ASSERT_THROW(reflect_family(ex, 3), std::invalid_argument);
}

TEST(reflect, build_z) {
    ASSERT_EQ(build_z(example_x(), Permutation::adjacent_pairs(2)), PolyMatrix::row({P({0, 2}), P({1, 2}), P({0})}));
    ASSERT_EQ(build_z(example_x(), Permutation::identity(2)), PolyMatrix::row({P({1, 2}), P({0, 2}), P({0})}));
    auto trivial = PolyMatrix::row({P({0}), P({0})});
    ASSERT_EQ(build_z(trivial, Permutation::identity(1)), trivial);
    ASSERT_THROW(build_z(example_x(), Permutation::identity(3)), std::invalid_argument);
}

TEST(reflect, preservation) {
    auto z = build_z(example_x(), Permutation::adjacent_pairs(2));
    ASSERT_TRUE(check_preservation(example_x(), z).all());

    auto x = PolyMatrix::row({P({0, 1}), P({0})});
    auto bad = PolyMatrix::row({P({0, 2}), P({0})});
    auto r = check_preservation(x, bad);
    ASSERT_FALSE(r.spectrum_equal);
    ASSERT_FALSE(r.memory_equal);
    ASSERT_TRUE(r.weights_equal);
}

TEST(reflect, preservation_holds_for_every_permutation) {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 200; k++) {
        auto sets = random_strong_family(rng, 3, 3, 20);
        PolyMatrix x = systematic_row(sets);
        for (const auto &pi : Permutation::all(3)) {
            ASSERT_TRUE(check_preservation(x, build_z(x, pi)).all());
        }
    }
}

TEST(reflect, qcc_params) {
    for (auto [family, expected] : std::vector<std::pair<std::vector<SupportSet>, std::string>>{
             {{{0, 1}, {0, 2}}, "1/3"},
             {{{0, 1}, {0, 2}, {0, 5}}, "2/4"},
             {{{0, 1, 3}, {0, 4, 9}, {0, 6, 13}, {0, 8, 18}}, "3/5"},
         }) {
        DtsFamily f(family);
        StabilizerPair pair = make_pair(f, default_permutation(f.size()));
        ASSERT_THROW(qcc_params(pair), std::invalid_argument);
        pair.certified.commuting = true;
        ASSERT_EQ(qcc_params(pair).quantum_rate.str(), expected);
    }
}

TEST(reflect, identity_permutation_does_not_commute_on_two_stream_family) {
    auto z = build_z(example_x(), Permutation::identity(2));
    ASSERT_EQ(oracle::symplectic_exponents(example_x(), z), (std::vector<int>{-2, 2}));
    std::vector<SupportSet> parity{{0, 1}, {0, 2}};
    ASSERT_FALSE(is_commutation_safe(parity, 2, Permutation::identity(2)));
    ASSERT_TRUE(is_commutation_safe(parity, 2, Permutation::adjacent_pairs(2)));
}

TEST(reflect, safe_permutations_commute) {
    std::mt19937_64 rng(17);
    size_t safe_seen = 0;
    for (int k = 0; k < 300; k++) {
        auto sets = random_strong_family(rng, 3, 2, 12);
        PolyMatrix x = systematic_row(sets);
        int m = x.max_degree().value();
        for (const auto &pi : Permutation::all(3)) {
            if (is_commutation_safe(sets, m, pi)) {
                safe_seen++;
                ASSERT_TRUE(oracle::symplectic_exponents(x, build_z(x, pi)).empty());
            }
        }
    }
    ASSERT_GT(safe_seen, 0u);
}

TEST(reflect, safety_is_not_necessary) {
    // Identity permutation, no palindromic entry, yet the pair commutes.
    std::vector<SupportSet> parity{{0, 1}, {0, 4}, {0, 5}};
    PolyMatrix x = systematic_row(parity);
    ASSERT_FALSE(is_commutation_safe(parity, 5, Permutation::identity(3)));
    ASSERT_TRUE(oracle::symplectic_exponents(x, build_z(x, Permutation::identity(3))).empty());
}

TEST(reflect, reflection_is_an_involution) {
    std::mt19937_64 rng(23);
    for (int k = 0; k < 300; k++) {
        auto sets = random_strong_family(rng, 2, 3, 15);
        ASSERT_EQ(canonical_order(reflect_family(reflect_family(sets))), canonical_order(sets));
    }
}
