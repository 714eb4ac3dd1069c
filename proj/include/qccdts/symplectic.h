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

// Stabilizer commutation for polynomial X/Z check matrices:
//
//     S(D) = X(D) Z(D^-1)^T + Z(D) X(D^-1)^T
//
// The pair commutes iff S(D) = 0 over GF(2)[D, D^-1], i.e. iff every
// coefficient matrix C_s = sum_l (X_l Z_{l+s}^T + Z_l X_{l+s}^T) vanishes.

#ifndef QCCDTS_SYMPLECTIC_H
#define QCCDTS_SYMPLECTIC_H

#include <cstdint>
#include <optional>
#include <vector>

#include "qccdts/gf2poly.h"
#include "qccdts/reflect.h"

namespace qccdts {

/// Throws std::invalid_argument on a column-count mismatch, and for
/// r_x != r_z, where the two products have transposed shapes.
PolyMatrix symplectic_sum(const PolyMatrix &x, const PolyMatrix &z);

/// The same coefficient computed from the coefficient matrices X_l, Z_l by
/// direct convolution, without going through polynomial products.
BitMatrix symplectic_coefficient_by_convolution(const PolyMatrix &x, const PolyMatrix &z, int s);

struct Violation {
    int s;
    size_t i;
    size_t j;

    bool operator==(const Violation &other) const = default;
};

struct SymplecticReport {
    PolyMatrix sum;
    bool commuting = false;
    /// Sorted by (s, i, j).
    std::vector<Violation> violations;
};

SymplecticReport is_commuting(const PolyMatrix &x, const PolyMatrix &z);

/// Entry (a, b) is the parity of the number of tap pairs (t, u) taken from
/// entries (a, k) and (b, k) with t + u = s, summed over every column k.
BitMatrix sum_index_matrix(const PolyMatrix &x, int s);

struct SymmetryWitness {
    int s;
    size_t a;
    size_t b;
};

struct SymmetryReport {
    bool holds = false;
    std::optional<SymmetryWitness> counterexample;
};

/// Checks (C_s)_{ab} = (C_{2M-s})_{ba} for every s in [0, 2M]. Throws
/// std::domain_error if an entry of x leaves the window [0, M].
SymmetryReport check_reflection_symmetry(const PolyMatrix &x, int window);

/// The parity entries of a systematic row as an (n-1) x 1 column, so that
/// sum_index_matrix on it indexes pairs of parity entries.
PolyMatrix parity_column(const PolyMatrix &x);

/// One coefficient of the symplectic sum for Z = build_z(X, pi), split into
/// its two addends. With C_s taken over parity_column(X):
///
///     plus(tau)  = sum_j (C_{M+tau})_{j,pi(j)}  (+1 at tau = 0, identity column)
///     minus(tau) = sum_j (C_{M-tau})_{pi(j),j}  (+1 at tau = 0)
///
/// direct_plus/direct_minus are the same coefficients read off the one-sided
/// products X Z(D^-1)^T and Z X(D^-1)^T.
struct SplitCoefficient {
    int tau = 0;
    uint8_t plus = 0;
    uint8_t minus = 0;
    uint8_t direct_plus = 0;
    uint8_t direct_minus = 0;
    uint8_t observed = 0;
};

struct DecompositionReport {
    int window = 0;
    std::vector<SplitCoefficient> terms;
    /// plus/minus agree with the direct products and observed = plus + minus.
    bool identity_holds = false;
    /// plus == minus for every tau, so S(D) = 0.
    bool cancels = false;
};

/// Evaluates the split for tau in [-M, M], M = memory(X).
DecompositionReport decompose_reflected_sum(const PolyMatrix &x, const Permutation &pi);

}  // namespace qccdts

#endif
