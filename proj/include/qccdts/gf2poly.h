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

#ifndef QCCDTS_GF2POLY_H
#define QCCDTS_GF2POLY_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qccdts {

/// Degree of a polynomial. The zero polynomial has degree minus infinity,
/// which compares below every finite degree.
class Degree {
   public:
    static constexpr Degree minus_infinity() {
        return Degree();
    }
    static constexpr Degree finite(int value) {
        Degree d;
        d.finite_ = true;
        d.value_ = value;
        return d;
    }

    constexpr bool is_minus_infinity() const {
        return !finite_;
    }
    /// Only meaningful when finite; throws std::logic_error otherwise.
    int value() const;

    constexpr bool operator==(const Degree &other) const = default;
    constexpr std::strong_ordering operator<=>(const Degree &other) const {
        if (finite_ != other.finite_) {
            return finite_ ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        return finite_ ? value_ <=> other.value_ : std::strong_ordering::equal;
    }

    std::string str() const;

   private:
    constexpr Degree() = default;
    bool finite_ = false;
    int value_ = 0;
};

/// A binary Laurent polynomial in the delay operator D, stored as the sorted
/// list of exponents whose coefficient is 1.
class Gf2Poly {
   public:
    Gf2Poly() = default;

    /// Builds from a list of exponents. The list is sorted; a repeated exponent
    /// is rejected with std::invalid_argument.
    static Gf2Poly from_support(std::vector<int> exponents);
    static Gf2Poly from_support(std::initializer_list<int> exponents) {
        return from_support(std::vector<int>(exponents));
    }
    /// Builds from a list of terms, cancelling repeated exponents pairwise.
    static Gf2Poly from_terms(std::vector<int> exponents);
    static Gf2Poly monomial(int exponent) {
        Gf2Poly p;
        p.support_.push_back(exponent);
        return p;
    }
    static Gf2Poly one() {
        return monomial(0);
    }

    std::span<const int> support() const {
        return support_;
    }
    bool is_zero() const {
        return support_.empty();
    }
    size_t weight() const {
        return support_.size();
    }
    bool coefficient(int exponent) const;
    Degree degree() const;
    /// Lowest exponent present (the zero polynomial has none; throws).
    int low_exponent() const;

    /// Renders as "1+D+D^3" with ascending exponents. Zero renders as "0";
    /// negative exponents render as "D^-2".
    std::string str() const;

    bool operator==(const Gf2Poly &other) const = default;
    auto operator<=>(const Gf2Poly &other) const = default;

   private:
    std::vector<int> support_;
};

Gf2Poly poly_add(const Gf2Poly &p, const Gf2Poly &q);
Gf2Poly poly_mul(const Gf2Poly &p, const Gf2Poly &q);
/// Reversal inside the window [0, window]: a -> window - a. Throws
/// std::domain_error("reversal window violated") if p does not fit.
Gf2Poly poly_reverse(const Gf2Poly &p, int window);
/// The D -> D^-1 substitution: a -> -a.
Gf2Poly substitute_inverse(const Gf2Poly &p);

inline Gf2Poly operator+(const Gf2Poly &p, const Gf2Poly &q) {
    return poly_add(p, q);
}
inline Gf2Poly operator*(const Gf2Poly &p, const Gf2Poly &q) {
    return poly_mul(p, q);
}

/// Parses the textual rendering produced by Gf2Poly::str(). Throws
/// std::invalid_argument on malformed text.
Gf2Poly parse_poly(std::string_view text);

/// Dense binary matrix; entries are 0 or 1.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols, 0) {
    }
    BitMatrix(std::initializer_list<std::initializer_list<int>> rows);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    uint8_t get(size_t r, size_t c) const {
        return bits_[r * cols_ + c];
    }
    void set(size_t r, size_t c, bool v) {
        bits_[r * cols_ + c] = v ? 1 : 0;
    }
    void flip(size_t r, size_t c) {
        bits_[r * cols_ + c] ^= 1;
    }
    bool is_zero() const;
    BitMatrix transposed() const;
    std::string str() const;

    bool operator==(const BitMatrix &other) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<uint8_t> bits_;
};

/// Product over GF(2). Throws std::invalid_argument on a shape mismatch.
BitMatrix operator*(const BitMatrix &a, const BitMatrix &b);
BitMatrix operator+(const BitMatrix &a, const BitMatrix &b);

/// An r x n grid of Gf2Poly, row-major.
class PolyMatrix {
   public:
    PolyMatrix() = default;
    PolyMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
    }
    /// A single-row matrix.
    static PolyMatrix row(std::vector<Gf2Poly> entries);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    const Gf2Poly &at(size_t r, size_t c) const {
        return entries_[r * cols_ + c];
    }
    Gf2Poly &at(size_t r, size_t c) {
        return entries_[r * cols_ + c];
    }

    bool is_zero() const;
    Degree max_degree() const;
    /// Smallest exponent over all entries; throws on the zero matrix.
    int min_exponent() const;

    /// "(1+D, 1+D^2, 1)" for one row; rows separated by "; " otherwise.
    std::string str() const;

    bool operator==(const PolyMatrix &other) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Gf2Poly> entries_;
};

/// Entry (i, j) = sum_k A[i,k] * B[j,k], with B's entries taken at D^-1 when
/// invert_b is set. Throws std::invalid_argument when column counts differ.
PolyMatrix mat_mul_transpose(const PolyMatrix &a, const PolyMatrix &b, bool invert_b);

PolyMatrix mat_add(const PolyMatrix &a, const PolyMatrix &b);

/// The binary matrix of D^s coefficients.
BitMatrix coefficient_matrix(const PolyMatrix &a, int s);

}  // namespace qccdts

#endif
