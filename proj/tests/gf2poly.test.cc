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

#include "qccdts/gf2poly.h"

#include "gtest/gtest.h"

#include "test_oracles.h"

using namespace qccdts;

namespace {

Gf2Poly P(std::initializer_list<int> e) {
    return Gf2Poly::from_support(e);
}

std::vector<int> support(const Gf2Poly &p) {
    return {p.support().begin(), p.support().end()};
}

}  // namespace

TEST(gf2poly, from_support_sorts_and_rejects_duplicates) {
    ASSERT_EQ(support(P({3, 0, 1})), (std::vector<int>{0, 1, 3}));
    ASSERT_THROW(P({1, 1}), std::invalid_argument);
    ASSERT_TRUE(Gf2Poly().is_zero());
}

TEST(gf2poly, from_terms_cancels_pairs) {
    ASSERT_EQ(Gf2Poly::from_terms({1, 1, 2}), P({2}));
    ASSERT_EQ(Gf2Poly::from_terms({5, 5, 5}), P({5}));
    ASSERT_TRUE(Gf2Poly::from_terms({4, 4}).is_zero());
}

TEST(gf2poly, add) {
    ASSERT_EQ(P({0, 1}) + P({1, 2}), P({0, 2}));
    ASSERT_TRUE((P({0, 3, 7}) + P({0, 3, 7})).is_zero());
    ASSERT_EQ(P({0}) + Gf2Poly(), P({0}));
}

TEST(gf2poly, mul) {
    ASSERT_EQ(P({0, 1}) * P({0, 1}), P({0, 2}));
    ASSERT_TRUE((P({0, 1}) * Gf2Poly()).is_zero());
    ASSERT_EQ(P({0, 1}) * P({0, 2}), P({0, 1, 2, 3}));
    ASSERT_EQ(P({-1}) * P({1}), Gf2Poly::one());
}

TEST(gf2poly, degree) {
    ASSERT_TRUE(Gf2Poly().degree().is_minus_infinity());
    ASSERT_EQ(P({0, 4}).degree(), Degree::finite(4));
    ASSERT_LT(Gf2Poly().degree(), Degree::finite(-100));
    ASSERT_EQ(Gf2Poly().degree().str(), "-inf");
    ASSERT_THROW(Gf2Poly().degree().value(), std::logic_error);
    ASSERT_THROW(Gf2Poly().low_exponent(), std::logic_error);
}

TEST(gf2poly, reverse) {
    ASSERT_EQ(poly_reverse(P({0, 2}), 2), P({0, 2}));
    ASSERT_EQ(poly_reverse(P({0, 1}), 2), P({1, 2}));
    ASSERT_EQ(poly_reverse(P({0, 4, 9}), 9), P({0, 5, 9}));
    ASSERT_TRUE(poly_reverse(Gf2Poly(), 3).is_zero());
    ASSERT_THROW(poly_reverse(P({0, 3}), 2), std::domain_error);
    ASSERT_THROW(poly_reverse(P({-1, 1}), 2), std::domain_error);
}

TEST(gf2poly, substitute_inverse) {
    ASSERT_EQ(substitute_inverse(P({0, 2})), P({-2, 0}));
    ASSERT_TRUE(substitute_inverse(Gf2Poly()).is_zero());
    ASSERT_EQ(substitute_inverse(P({-1, 3})), P({-3, 1}));
}

TEST(gf2poly, str) {
    ASSERT_EQ(P({0, 1, 3}).str(), "1+D+D^3");
    ASSERT_EQ(Gf2Poly().str(), "0");
    ASSERT_EQ(P({-2, 0}).str(), "D^-2+1");
    ASSERT_EQ(P({1}).str(), "D");
}

TEST(gf2poly, parse_round_trip) {
    for (auto p : {P({0, 1, 3}), Gf2Poly(), P({-2, 0, 5}), P({1}), P({0})}) {
        ASSERT_EQ(parse_poly(p.str()), p) << p.str();
    }
    ASSERT_EQ(parse_poly(" 1 + D^2 "), P({0, 2}));
    ASSERT_THROW(parse_poly("1+X"), std::invalid_argument);
    ASSERT_THROW(parse_poly("1+"), std::invalid_argument);
    ASSERT_THROW(parse_poly(""), std::invalid_argument);
}

TEST(gf2poly, bit_matrix_ops) {
    BitMatrix a{{1, 1}, {0, 1}};
    BitMatrix b{{1, 0}, {1, 1}};
    ASSERT_EQ(a * b, (BitMatrix{{0, 1}, {1, 1}}));
    ASSERT_EQ(a + a, BitMatrix(2, 2));
    ASSERT_EQ(a.transposed(), (BitMatrix{{1, 0}, {1, 1}}));
    ASSERT_THROW(a * BitMatrix(3, 1), std::invalid_argument);
}

TEST(gf2poly, mat_mul_transpose) {
    auto x = PolyMatrix::row({P({0, 1}), P({0, 2}), P({0})});
    auto z = PolyMatrix::row({P({0, 2}), P({1, 2}), P({0})});
    auto prod = mat_mul_transpose(x, z, true);
    ASSERT_EQ(prod.rows(), 1u);
    ASSERT_EQ(prod.cols(), 1u);
    ASSERT_EQ(prod.at(0, 0), Gf2Poly::one());

    auto one = PolyMatrix::row({P({0})});
    ASSERT_EQ(mat_mul_transpose(one, one, false).at(0, 0), P({0}));
    ASSERT_TRUE(mat_mul_transpose(x, PolyMatrix(2, 3), true).is_zero());
    ASSERT_THROW(mat_mul_transpose(x, PolyMatrix(1, 2), true), std::invalid_argument);
}

TEST(gf2poly, coefficient_matrix) {
    auto a = PolyMatrix::row({P({0, 1}), P({0, 2}), P({0})});
    ASSERT_EQ(coefficient_matrix(a, 0), (BitMatrix{{1, 1, 1}}));
    ASSERT_EQ(coefficient_matrix(a, 2), (BitMatrix{{0, 1, 0}}));
    ASSERT_EQ(coefficient_matrix(a, 5), (BitMatrix{{0, 0, 0}}));
}

TEST(gf2poly, poly_matrix_degree) {
    ASSERT_TRUE(PolyMatrix(2, 2).max_degree().is_minus_infinity());
    auto a = PolyMatrix::row({P({0, 1}), P({0, 5}), P({0})});
    ASSERT_EQ(a.max_degree(), Degree::finite(5));
    ASSERT_EQ(a.str(), "(1+D, 1+D^5, 1)");
}

TEST(gf2poly, mul_matches_dense_oracle) {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 500; k++) {
        auto p = oracle::random_poly(rng, -4, 8);
        auto q = oracle::random_poly(rng, -3, 9);
        ASSERT_EQ(support(p * q), oracle::exponents(oracle::dense_mul(oracle::dense(p), oracle::dense(q))));
    }
}
