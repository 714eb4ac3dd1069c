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

// Distances of the systematic code with parity check [x_1, ..., x_{n-1}, 1].
// A code sequence is c_t = (u_t, p_t) with information frame u_t of n-1 bits
// and parity p_t = sum_i sum_{a in supp x_i} u_{t-a, i}. Sequences are
// normalized so that the first nonzero frame is at t = 0.

#ifndef QCCDTS_DISTANCE_H
#define QCCDTS_DISTANCE_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qccdts/gf2poly.h"

namespace qccdts {

/// A nonzero frame of a code sequence; bits has n entries, parity last.
struct CodeFrame {
    int time = 0;
    std::vector<uint8_t> bits;

    bool operator==(const CodeFrame &other) const = default;
};

using Codeword = std::vector<CodeFrame>;

size_t codeword_weight(const Codeword &c);

/// Checks H(D) c(D)^T = 0 by polynomial arithmetic; works for any r x n H.
bool is_codeword(const PolyMatrix &h, const Codeword &c);

/// Largest window (j+1)(n-1) accepted by column_distance.
constexpr int kMaxColumnWindowBits = 64;

/// Minimum weight of frames 0..j over code sequences with c_0 != 0, by
/// weight-pruned exhaustive search over information windows. Throws
/// std::invalid_argument("window too large for exact oracle") past
/// kMaxColumnWindowBits, and for non-systematic input.
int column_distance(const PolyMatrix &h, int j);

/// d_c^(0..j).
std::vector<int> column_distances(const PolyMatrix &h, int j);

enum class DistanceMethod { kExactSearch, kCsocCertificate, kWitnessUpperBound };

const char *distance_method_name(DistanceMethod m);

struct ExactDistance {
    /// Unset when no codeword of weight <= budget exists.
    std::optional<int> distance;
    int budget = 0;
    Codeword witness;
    uint64_t nodes = 0;

    /// "3" or ">2".
    std::string str() const;
};

constexpr int kMaxExactBudget = 6;
constexpr int kMaxExactMemory = 12;

/// Bounded-weight depth-first search for the free distance. Returns the exact
/// d_free if it is at most `budget`. Prefixes heavier than the current best
/// are pruned; a prefix whose last mu information frames are zero closes a
/// codeword. Paths are cut at `horizon` frames, default budget * (mu + 1),
/// which no codeword of weight <= budget can exceed. Ties go to the
/// lexicographically smallest (time, position) support. Throws
/// std::invalid_argument beyond kMaxExactBudget or kMaxExactMemory.
ExactDistance dfree_exact(const PolyMatrix &x, int budget, std::optional<int> horizon = std::nullopt);

struct DistanceCertificate {
    int d_free = 0;
    DistanceMethod method = DistanceMethod::kWitnessUpperBound;
    Codeword witness;
    /// Set when the exhaustive search ran alongside the certificate.
    std::optional<ExactDistance> exact;
    /// Why the search did not run, if it did not.
    std::string exact_skipped_reason;

    bool exact_agrees() const {
        return exact && exact->distance == d_free;
    }
};

/// The weight-(w+1) codeword from a single information impulse on the
/// lightest parity stream. Establishes only an upper bound.
DistanceCertificate dfree_upper(const PolyMatrix &x);

/// d_free = w + 1 for a CSOC, with the dfree_upper witness attached; the
/// exact search also runs when within its guards. Throws
/// std::invalid_argument("certificate requires CSOC") otherwise.
DistanceCertificate certify_dfree(const PolyMatrix &x);

}  // namespace qccdts

#endif
