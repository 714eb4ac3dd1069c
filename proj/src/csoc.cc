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

#include "qccdts/csoc.h"

#include <algorithm>
#include <stdexcept>

namespace qccdts {

PolyMatrix build_parity_check(
    std::span<const SupportSet> row_sets, std::span<const SupportSet> col_sets, size_t n) {
    if (col_sets.size() != n) {
        throw std::invalid_argument("expected " + std::to_string(n) + " column sets, got " +
                                    std::to_string(col_sets.size()));
    }
    auto check_one_based = [](const SupportSet &s) {
        if (!s.empty() && s.min() < 1) {
            throw std::invalid_argument("row and column sets are 1-based; found element 0");
        }
    };
    std::for_each(row_sets.begin(), row_sets.end(), check_one_based);
    std::for_each(col_sets.begin(), col_sets.end(), check_one_based);

    PolyMatrix h(row_sets.size(), n);
    for (size_t i = 0; i < row_sets.size(); i++) {
        bool any = false;
        for (size_t j = 0; j < n; j++) {
            std::vector<int> exps;
            for (int t : row_sets[i].elements()) {
                if (col_sets[j].contains(t)) {
                    exps.push_back(t - 1);
                }
            }
            any = any || !exps.empty();
            h.at(i, j) = Gf2Poly::from_support(std::move(exps));
        }
        if (!any) {
            throw std::invalid_argument("vacuous parity row " + std::to_string(i + 1));
        }
    }
    return h;
}

PolyMatrix systematic_row(std::span<const SupportSet> parity) {
    std::vector<Gf2Poly> entries;
    entries.reserve(parity.size() + 1);
    for (const auto &s : parity) {
        entries.push_back(Gf2Poly::from_support(std::vector<int>(s.elements().begin(), s.elements().end())));
    }
    entries.push_back(Gf2Poly::one());
    return PolyMatrix::row(std::move(entries));
}

BuiltMatrix build_systematic_x(const DtsFamily &family) {
    BuiltMatrix out{systematic_row(family.sets()), {}};
    if (!is_strong(family.kind())) {
        out.warnings.push_back(std::string("family classifies as ") + dts_kind_name(family.kind()) +
                               ", not STRONG; CSOC and distance guarantees do not apply");
    }
    return out;
}

bool is_systematic(const PolyMatrix &x) {
    return x.rows() == 1 && x.cols() >= 1 && x.at(0, x.cols() - 1) == Gf2Poly::one();
}

std::vector<SupportSet> parity_supports(const PolyMatrix &x) {
    if (!is_systematic(x)) {
        throw std::invalid_argument("expected a systematic row [x_1, ..., x_{n-1}, 1]");
    }
    std::vector<SupportSet> out;
    for (size_t j = 0; j + 1 < x.cols(); j++) {
        auto s = x.at(0, j).support();
        out.emplace_back(std::vector<int>(s.begin(), s.end()));
    }
    return out;
}

int memory(const PolyMatrix &h, int n, int k) {
    if (h.is_zero()) {
        throw std::invalid_argument("memory of the zero matrix is undefined");
    }
    if (h.min_exponent() < 0) {
        throw std::invalid_argument("memory requires a polynomial (non-Laurent) matrix");
    }
    if (k >= n) {
        throw std::invalid_argument("memory requires k < n");
    }
    int taps = h.max_degree().value() + 1;
    int rows = n - k;
    return (taps + rows - 1) / rows - 1;
}

int constraint_length(const PolyMatrix &h) {
    if (h.is_zero()) {
        throw std::invalid_argument("constraint length of the zero matrix is undefined");
    }
    int total = 0;
    for (size_t i = 0; i < h.rows(); i++) {
        Degree row_deg = Degree::minus_infinity();
        for (size_t j = 0; j < h.cols(); j++) {
            row_deg = std::max(row_deg, h.at(i, j).degree());
        }
        if (!row_deg.is_minus_infinity()) {
            total += row_deg.value();
        }
    }
    return total;
}

CsocReport is_csoc(const PolyMatrix &x) {
    auto supports = parity_supports(x);
    CsocReport out;
    out.collisions = find_difference_collisions(supports);
    out.is_csoc = out.collisions.empty();
    return out;
}

BitMatrix block_toeplitz(const PolyMatrix &h, int j) {
    if (j < 0) {
        throw std::invalid_argument("window length must be non-negative");
    }
    size_t r = h.rows();
    size_t n = h.cols();
    size_t blocks = static_cast<size_t>(j) + 1;
    BitMatrix out(blocks * r, blocks * n);
    for (size_t t = 0; t < blocks; t++) {
        for (size_t u = 0; u <= t; u++) {
            BitMatrix coeff = coefficient_matrix(h, static_cast<int>(t - u));
            for (size_t a = 0; a < r; a++) {
                for (size_t b = 0; b < n; b++) {
                    out.set(t * r + a, u * n + b, coeff.get(a, b));
                }
            }
        }
    }
    return out;
}

}  // namespace qccdts
