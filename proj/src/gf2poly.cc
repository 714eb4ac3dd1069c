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

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace qccdts {

int Degree::value() const {
    if (!finite_) {
        throw std::logic_error("degree of the zero polynomial is minus infinity");
    }
    return value_;
}

std::string Degree::str() const {
    return finite_ ? std::to_string(value_) : "-inf";
}

Gf2Poly Gf2Poly::from_support(std::vector<int> exponents) {
    std::sort(exponents.begin(), exponents.end());
    if (std::adjacent_find(exponents.begin(), exponents.end()) != exponents.end()) {
        throw std::invalid_argument("polynomial support has a repeated exponent");
    }
    Gf2Poly p;
    p.support_ = std::move(exponents);
    return p;
}

Gf2Poly Gf2Poly::from_terms(std::vector<int> exponents) {
    std::sort(exponents.begin(), exponents.end());
    Gf2Poly p;
    for (size_t k = 0; k < exponents.size();) {
        size_t run = k;
        while (run < exponents.size() && exponents[run] == exponents[k]) {
            run++;
        }
        if ((run - k) % 2 == 1) {
            p.support_.push_back(exponents[k]);
        }
        k = run;
    }
    return p;
}

bool Gf2Poly::coefficient(int exponent) const {
    return std::binary_search(support_.begin(), support_.end(), exponent);
}

Degree Gf2Poly::degree() const {
    return support_.empty() ? Degree::minus_infinity() : Degree::finite(support_.back());
}

int Gf2Poly::low_exponent() const {
    if (support_.empty()) {
        throw std::logic_error("zero polynomial has no lowest exponent");
    }
    return support_.front();
}

std::string Gf2Poly::str() const {
    if (support_.empty()) {
        return "0";
    }
    std::string out;
    for (int e : support_) {
        if (!out.empty()) {
            out += '+';
        }
        if (e == 0) {
            out += '1';
        } else if (e == 1) {
            out += 'D';
        } else {
            out += "D^" + std::to_string(e);
        }
    }
    return out;
}

Gf2Poly poly_add(const Gf2Poly &p, const Gf2Poly &q) {
    std::vector<int> out;
    out.reserve(p.weight() + q.weight());
    std::set_symmetric_difference(
        p.support().begin(), p.support().end(), q.support().begin(), q.support().end(), std::back_inserter(out));
    return Gf2Poly::from_support(std::move(out));
}

Gf2Poly poly_mul(const Gf2Poly &p, const Gf2Poly &q) {
    std::vector<int> sums;
    sums.reserve(p.weight() * q.weight());
    for (int a : p.support()) {
        for (int b : q.support()) {
            sums.push_back(a + b);
        }
    }
    return Gf2Poly::from_terms(std::move(sums));
}

Gf2Poly poly_reverse(const Gf2Poly &p, int window) {
    std::vector<int> out;
    out.reserve(p.weight());
    for (int a : p.support()) {
        if (a < 0 || a > window) {
            throw std::domain_error("reversal window violated");
        }
        out.push_back(window - a);
    }
    return Gf2Poly::from_support(std::move(out));
}

Gf2Poly substitute_inverse(const Gf2Poly &p) {
    std::vector<int> out;
    out.reserve(p.weight());
    for (int a : p.support()) {
        out.push_back(-a);
    }
    return Gf2Poly::from_support(std::move(out));
}

namespace {

int parse_int(std::string_view text, std::string_view whole) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw std::invalid_argument("malformed polynomial: '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

Gf2Poly parse_poly(std::string_view text) {
    std::string compact;
    for (char c : text) {
        if (c != ' ') {
            compact += c;
        }
    }
    if (compact == "0") {
        return Gf2Poly();
    }
    if (compact.empty()) {
        throw std::invalid_argument("malformed polynomial: empty text");
    }
    std::vector<int> exps;
    std::string_view rest = compact;
    while (true) {
        size_t plus = rest.find('+');
        std::string_view term = rest.substr(0, plus);
        if (term == "1") {
            exps.push_back(0);
        } else if (term == "D") {
            exps.push_back(1);
        } else if (term.size() > 2 && term.substr(0, 2) == "D^") {
            exps.push_back(parse_int(term.substr(2), text));
        } else {
            throw std::invalid_argument("malformed polynomial: '" + std::string(text) + "'");
        }
        if (plus == std::string_view::npos) {
            break;
        }
        rest = rest.substr(plus + 1);
    }
    return Gf2Poly::from_support(std::move(exps));
}

BitMatrix::BitMatrix(std::initializer_list<std::initializer_list<int>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("ragged BitMatrix literal");
        }
        for (int v : row) {
            bits_.push_back(v ? 1 : 0);
        }
    }
}

bool BitMatrix::is_zero() const {
    return std::all_of(bits_.begin(), bits_.end(), [](uint8_t b) {
        return b == 0;
    });
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            t.set(c, r, get(r, c));
        }
    }
    return t;
}

std::string BitMatrix::str() const {
    std::ostringstream out;
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out << (get(r, c) ? '1' : '0');
        }
        out << '\n';
    }
    return out.str();
}

BitMatrix operator*(const BitMatrix &a, const BitMatrix &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("BitMatrix product shape mismatch");
    }
    BitMatrix out(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t k = 0; k < a.cols(); k++) {
            if (!a.get(i, k)) {
                continue;
            }
            for (size_t j = 0; j < b.cols(); j++) {
                if (b.get(k, j)) {
                    out.flip(i, j);
                }
            }
        }
    }
    return out;
}

BitMatrix operator+(const BitMatrix &a, const BitMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("BitMatrix sum shape mismatch");
    }
    BitMatrix out = a;
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            if (b.get(i, j)) {
                out.flip(i, j);
            }
        }
    }
    return out;
}

PolyMatrix PolyMatrix::row(std::vector<Gf2Poly> entries) {
    PolyMatrix m(1, entries.size());
    m.entries_ = std::move(entries);
    return m;
}

bool PolyMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Gf2Poly &p) {
        return p.is_zero();
    });
}

Degree PolyMatrix::max_degree() const {
    Degree best = Degree::minus_infinity();
    for (const auto &p : entries_) {
        best = std::max(best, p.degree());
    }
    return best;
}

int PolyMatrix::min_exponent() const {
    bool found = false;
    int best = 0;
    for (const auto &p : entries_) {
        if (!p.is_zero() && (!found || p.low_exponent() < best)) {
            best = p.low_exponent();
            found = true;
        }
    }
    if (!found) {
        throw std::logic_error("zero matrix has no lowest exponent");
    }
    return best;
}

std::string PolyMatrix::str() const {
    std::string out;
    for (size_t r = 0; r < rows_; r++) {
        if (r > 0) {
            out += "; ";
        }
        out += '(';
        for (size_t c = 0; c < cols_; c++) {
            if (c > 0) {
                out += ", ";
            }
            out += at(r, c).str();
        }
        out += ')';
    }
    return out;
}

PolyMatrix mat_mul_transpose(const PolyMatrix &a, const PolyMatrix &b, bool invert_b) {
    if (a.cols() != b.cols()) {
        throw std::invalid_argument(
            "dimension mismatch: " + std::to_string(a.cols()) + " vs " + std::to_string(b.cols()) + " columns");
    }
    PolyMatrix out(a.rows(), b.rows());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < b.rows(); j++) {
            std::vector<int> terms;
            for (size_t k = 0; k < a.cols(); k++) {
                for (int x : a.at(i, k).support()) {
                    for (int y : b.at(j, k).support()) {
                        terms.push_back(invert_b ? x - y : x + y);
                    }
                }
            }
            out.at(i, j) = Gf2Poly::from_terms(std::move(terms));
        }
    }
    return out;
}

PolyMatrix mat_add(const PolyMatrix &a, const PolyMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("dimension mismatch in matrix sum");
    }
    PolyMatrix out(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            out.at(i, j) = a.at(i, j) + b.at(i, j);
        }
    }
    return out;
}

BitMatrix coefficient_matrix(const PolyMatrix &a, int s) {
    BitMatrix out(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            out.set(i, j, a.at(i, j).coefficient(s));
        }
    }
    return out;
}

}  // namespace qccdts
