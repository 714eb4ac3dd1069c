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

// The reflection-permutation map taking the X-type supports of a QCC to its
// Z-type supports. In 0-based exponents the reflection about the degree bound
// M is a -> M - a, so on polynomials z_j(D) = D^M x_{pi(j)}(D^-1).

#ifndef QCCDTS_REFLECT_H
#define QCCDTS_REFLECT_H

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qccdts/dts.h"
#include "qccdts/gf2poly.h"

namespace qccdts {

/// A permutation of {0, ..., k-1}; image(j) is where parity entry j of Z takes
/// its support from.
class Permutation {
   public:
    Permutation() = default;
    /// Throws std::invalid_argument("not a permutation ...") on bad input.
    explicit Permutation(std::vector<int> zero_based_images);
    static Permutation from_one_based(std::span<const int> images);
    static Permutation identity(size_t k);
    /// The transposition pairing (0 1)(2 3)...; an odd last index is fixed.
    static Permutation adjacent_pairs(size_t k);
    /// Every permutation of {0..k-1} in lexicographic order.
    static std::vector<Permutation> all(size_t k);

    size_t size() const {
        return images_.size();
    }
    int operator()(size_t j) const {
        return images_[j];
    }
    std::span<const int> images() const {
        return images_;
    }
    bool is_identity() const;
    bool is_involution() const;
    std::vector<int> fixed_points() const;
    /// "(2,1,3)", 1-based.
    std::string str() const;

    bool operator==(const Permutation &other) const = default;

   private:
    std::vector<int> images_;
};

/// Reflects every set about `window` (default: the family scope). A window
/// below the scope is rejected as an out-of-window exponent; a window above it
/// is rejected too, since it would silently pad the reflected supports.
std::vector<SupportSet> reflect_family(std::span<const SupportSet> sets, std::optional<int> window = std::nullopt);

/// Z(D) from a systematic X(D): parity entry j of Z is the reversal of parity
/// entry pi(j) of X about M = memory(X); the identity column stays 1.
PolyMatrix build_z(const PolyMatrix &x, const Permutation &pi);

/// The default permutation used when none is supplied: adjacent_pairs.
Permutation default_permutation(size_t parity_entries);

/// True when pi is an involution whose fixed points all index supports that
/// are palindromic inside [0, M]. This is sufficient for X and build_z(X, pi)
/// to commute: swapped pairs contribute x_a x_b twice, and a palindromic fixed
/// entry contributes a self-reciprocal square.
bool is_commutation_safe(std::span<const SupportSet> parity, int window, const Permutation &pi);

struct PreservationReport {
    bool spectrum_equal = false;
    bool memory_equal = false;
    bool weights_equal = false;
    int memory_x = 0;
    int memory_z = 0;

    bool all() const {
        return spectrum_equal && memory_equal && weights_equal;
    }
};

/// Compares the difference spectra (as a multiset of multisets), the memories
/// and the entry weights of two systematic rows.
PreservationReport check_preservation(const PolyMatrix &x, const PolyMatrix &z);

struct Certification {
    bool strong_dts = false;
    bool csoc_x = false;
    bool csoc_z = false;
    bool commuting = false;
    bool dfree = false;
};

struct StabilizerPair {
    size_t n = 0;
    PolyMatrix x;
    PolyMatrix z;
    int degree_bound = 0;
    int w = 0;
    Permutation pi;
    Certification certified;
};

/// Builds X from the family and Z by reflection. Certification flags are left
/// unset; see certify_pair in verify.h.
StabilizerPair make_pair(const DtsFamily &family, const Permutation &pi);

struct Rate {
    int numerator = 0;
    int denominator = 1;
    /// Unreduced: "2/4", not "1/2".
    std::string str() const {
        return std::to_string(numerator) + "/" + std::to_string(denominator);
    }
};

struct QccParams {
    int n = 0;
    int r_x = 0;
    int r_z = 0;
    Rate quantum_rate;
};

/// Throws std::invalid_argument("cannot report parameters for non-commuting
/// pair") unless the pair is certified commuting.
QccParams qcc_params(const StabilizerPair &pair);

}  // namespace qccdts

#endif
