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

#include "qccdts/symplectic.h"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "qccdts/csoc.h"

namespace qccdts {

namespace {

void require_compatible(const PolyMatrix &x, const PolyMatrix &z) {
    if (x.cols() != z.cols()) {
        throw std::invalid_argument("dimension mismatch: X has " + std::to_string(x.cols()) + " columns, Z has " +
                                    std::to_string(z.cols()));
    }
    if (x.rows() != z.rows()) {
        throw std::invalid_argument("unsupported: symplectic sum needs equal X and Z row counts (got " +
                                    std::to_string(x.rows()) + " and " + std::to_string(z.rows()) + ")");
    }
}

// Lowest and highest exponent over all entries, or nullopt for a zero matrix.
std::optional<std::pair<int, int>> exponent_range(const PolyMatrix &a) {
    if (a.is_zero()) {
        return std::nullopt;
    }
    return std::make_pair(a.min_exponent(), a.max_degree().value());
}

}  // namespace

PolyMatrix symplectic_sum(const PolyMatrix &x, const PolyMatrix &z) {
    require_compatible(x, z);
    return mat_add(mat_mul_transpose(x, z, true), mat_mul_transpose(z, x, true));
}

BitMatrix symplectic_coefficient_by_convolution(const PolyMatrix &x, const PolyMatrix &z, int s) {
    require_compatible(x, z);
    BitMatrix out(x.rows(), z.rows());
    auto rx = exponent_range(x);
    auto rz = exponent_range(z);
    if (!rx || !rz) {
        return out;
    }
    // Outside the union of both exponent ranges every X_l and Z_l is zero.
    int lo = std::min(rx->first, rz->first);
    int hi = std::max(rx->second, rz->second);
    for (int l = lo; l <= hi; l++) {
        out = out + coefficient_matrix(x, l) * coefficient_matrix(z, l + s).transposed();
        out = out + coefficient_matrix(z, l) * coefficient_matrix(x, l + s).transposed();
    }
    return out;
}

SymplecticReport is_commuting(const PolyMatrix &x, const PolyMatrix &z) {
    SymplecticReport out;
    out.sum = symplectic_sum(x, z);
    for (size_t i = 0; i < out.sum.rows(); i++) {
        for (size_t j = 0; j < out.sum.cols(); j++) {
            for (int s : out.sum.at(i, j).support()) {
                out.violations.push_back({s, i, j});
            }
        }
    }
    std::sort(out.violations.begin(), out.violations.end(), [](const Violation &a, const Violation &b) {
        return std::tie(a.s, a.i, a.j) < std::tie(b.s, b.i, b.j);
    });
    out.commuting = out.violations.empty();
    return out;
}

BitMatrix sum_index_matrix(const PolyMatrix &x, int s) {
    BitMatrix out(x.rows(), x.rows());
    for (size_t a = 0; a < x.rows(); a++) {
        for (size_t b = 0; b < x.rows(); b++) {
            size_t count = 0;
            for (size_t k = 0; k < x.cols(); k++) {
                auto lb = x.at(b, k).support();
                for (int t : x.at(a, k).support()) {
                    count += std::binary_search(lb.begin(), lb.end(), s - t) ? 1 : 0;
                }
            }
            out.set(a, b, count % 2 == 1);
        }
    }
    return out;
}

SymmetryReport check_reflection_symmetry(const PolyMatrix &x, int window) {
    if (!x.is_zero() && (x.min_exponent() < 0 || x.max_degree().value() > window)) {
        throw std::domain_error("entries leave the window [0, " + std::to_string(window) + "]");
    }
    SymmetryReport out;
    for (int s = 0; s <= 2 * window; s++) {
        BitMatrix lo = sum_index_matrix(x, s);
        BitMatrix hi = sum_index_matrix(x, 2 * window - s);
        for (size_t a = 0; a < lo.rows(); a++) {
            for (size_t b = 0; b < lo.cols(); b++) {
                if (lo.get(a, b) != hi.get(b, a)) {
                    out.counterexample = SymmetryWitness{s, a, b};
                    return out;
                }
            }
        }
    }
    out.holds = true;
    return out;
}

PolyMatrix parity_column(const PolyMatrix &x) {
    if (!is_systematic(x)) {
        throw std::invalid_argument("expected a systematic row [x_1, ..., x_{n-1}, 1]");
    }
    PolyMatrix col(x.cols() - 1, 1);
    for (size_t j = 0; j + 1 < x.cols(); j++) {
        col.at(j, 0) = x.at(0, j);
    }
    return col;
}

DecompositionReport decompose_reflected_sum(const PolyMatrix &x, const Permutation &pi) {
    PolyMatrix z = build_z(x, pi);
    PolyMatrix col = parity_column(x);
    int m = memory(x, static_cast<int>(x.cols()), static_cast<int>(x.cols()) - 1);
    PolyMatrix forward = mat_mul_transpose(x, z, true);
    PolyMatrix backward = mat_mul_transpose(z, x, true);
    PolyMatrix sum = symplectic_sum(x, z);

    DecompositionReport out;
    out.window = m;
    out.identity_holds = true;
    out.cancels = true;
    for (int tau = -m; tau <= m; tau++) {
        BitMatrix c_plus = sum_index_matrix(col, m + tau);
        BitMatrix c_minus = sum_index_matrix(col, m - tau);
        SplitCoefficient term;
        term.tau = tau;
        uint8_t identity_column = tau == 0 ? 1 : 0;
        term.plus = identity_column;
        term.minus = identity_column;
        for (size_t j = 0; j < pi.size(); j++) {
            term.plus ^= c_plus.get(j, pi(j));
            term.minus ^= c_minus.get(pi(j), j);
        }
        term.direct_plus = forward.at(0, 0).coefficient(tau);
        term.direct_minus = backward.at(0, 0).coefficient(tau);
        term.observed = sum.at(0, 0).coefficient(tau);
        if (term.plus != term.direct_plus || term.minus != term.direct_minus ||
            term.observed != (term.plus ^ term.minus)) {
            out.identity_holds = false;
        }
        if (term.plus != term.minus) {
            out.cancels = false;
        }
        out.terms.push_back(term);
    }
    return out;
}

}  // namespace qccdts
