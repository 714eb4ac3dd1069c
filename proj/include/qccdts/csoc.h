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

// Classical convolutional self-orthogonal codes (CSOCs) built from
// difference-triangle-set supports.
//
// A systematic rate (n-1)/n code has a single parity-check row
//
//     X(D) = [x_1(D), ..., x_{n-1}(D), 1]
//
// where x_i is the indicator polynomial of the i-th support set. The identity
// entry is always the last column.

#ifndef QCCDTS_CSOC_H
#define QCCDTS_CSOC_H

#include <span>
#include <string>
#include <vector>

#include "qccdts/dts.h"
#include "qccdts/gf2poly.h"

namespace qccdts {

struct CodeParams {
    int n = 0;
    int parity_rows = 0;
    int mu = 0;
    int w = 0;
    int nu = 0;
};

/// General construction from 1-based row sets T_i and column sets S_j: entry
/// (i, j) has support { t-1 : t in T_i and S_j }. Only the systematic
/// specialization is exercised by known constructions; treat this path as
/// experimental. Throws std::invalid_argument on a 0 element, a column count
/// other than n, or a row that meets no column ("vacuous parity row").
PolyMatrix build_parity_check(
    std::span<const SupportSet> row_sets, std::span<const SupportSet> col_sets, size_t n);

struct BuiltMatrix {
    PolyMatrix matrix;
    std::vector<std::string> warnings;
};

/// [x_1, ..., x_{n-1}, 1] from a 0-based family. A family that is not strong
/// still builds, with a warning attached.
BuiltMatrix build_systematic_x(const DtsFamily &family);

/// True when the matrix has one row whose last entry is the constant 1.
bool is_systematic(const PolyMatrix &x);

/// Supports of the parity entries x_1..x_{n-1}; throws if not systematic.
std::vector<SupportSet> parity_supports(const PolyMatrix &x);

/// [x_1, ..., x_{n-1}, 1] from explicit parity supports.
PolyMatrix systematic_row(std::span<const SupportSet> parity);

/// Memory ceil((max exponent + 1) / (n - k)) - 1. For a single parity row this
/// is the highest exponent present. Throws on a zero matrix, a matrix with
/// negative exponents, or k >= n.
int memory(const PolyMatrix &h, int n, int k);

/// Sum over rows of the highest degree in that row. Throws on a zero matrix.
int constraint_length(const PolyMatrix &h);

struct CsocReport {
    bool is_csoc = false;
    /// Indices refer to parity entries (0-based column numbers).
    std::vector<DifferenceCollision> collisions;
};

/// Every parity entry must have distinct positive differences, and the
/// entries' difference sets must be pairwise disjoint. Throws
/// std::invalid_argument when x is not systematic.
CsocReport is_csoc(const PolyMatrix &x);

/// The truncated block-Toeplitz parity-check matrix for the window [0:j]:
/// block (t, u) is the D^(t-u) coefficient matrix for 0 <= t-u <= mu.
BitMatrix block_toeplitz(const PolyMatrix &h, int j);

}  // namespace qccdts

#endif
