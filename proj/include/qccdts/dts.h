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

#ifndef QCCDTS_DTS_H
#define QCCDTS_DTS_H

#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qccdts {

/// A finite set of distinct non-negative integers, kept sorted.
class SupportSet {
   public:
    SupportSet() = default;
    /// Sorts the input. Throws std::invalid_argument on a negative or repeated
    /// element.
    explicit SupportSet(std::vector<int> elements);
    SupportSet(std::initializer_list<int> elements) : SupportSet(std::vector<int>(elements)) {
    }

    std::span<const int> elements() const {
        return elements_;
    }
    size_t weight() const {
        return elements_.size();
    }
    bool empty() const {
        return elements_.empty();
    }
    /// Largest element; throws on the empty set.
    int scope() const;
    int min() const;
    bool contains(int v) const;

    /// "{0, 1, 3}"
    std::string str() const;

    bool operator==(const SupportSet &other) const = default;
    auto operator<=>(const SupportSet &other) const = default;

   private:
    std::vector<int> elements_;
};

enum class DtsKind { kNotWdts, kWdts, kDts, kStrong, kFullStrong };

const char *dts_kind_name(DtsKind kind);

/// True for kStrong and kFullStrong.
bool is_strong(DtsKind kind);

/// A repeated positive difference. Within one set when first == second.
struct DifferenceCollision {
    size_t first;
    size_t second;
    int difference;

    bool operator==(const DifferenceCollision &other) const = default;
};

struct Classification {
    DtsKind kind = DtsKind::kNotWdts;
    /// Difference budget M; 0 unless the family is strong.
    int budget = 0;
    std::vector<DifferenceCollision> collisions;
};

/// All C(w,2) positive pairwise differences, with multiplicity, in the order
/// (t_a, t_b) for a < b.
std::vector<int> positive_differences(const SupportSet &set);

/// Every repeated difference: first those inside a single set, then those
/// shared across sets.
std::vector<DifferenceCollision> find_difference_collisions(std::span<const SupportSet> sets);

/// Places the family in the wDTS/DTS/strong/full-strong hierarchy. Without an
/// explicit budget the tightest one (the largest difference present) is used.
/// Throws std::invalid_argument for an empty family, an empty set or unequal
/// cardinalities.
Classification classify(std::span<const SupportSet> sets, std::optional<int> budget = std::nullopt);

SupportSet normalize(const SupportSet &set);

/// Converts 1-based table notation to 0-based delay exponents. Throws
/// std::invalid_argument("input is already 0-based or malformed") if any
/// element is below 1.
SupportSet from_one_based(std::span<const int> elements);
SupportSet to_one_based(const SupportSet &set);

/// An ordered family of equal-weight sets with its recomputed classification.
class DtsFamily {
   public:
    explicit DtsFamily(std::vector<SupportSet> sets, std::optional<int> budget = std::nullopt);

    std::span<const SupportSet> sets() const {
        return sets_;
    }
    size_t size() const {
        return sets_.size();
    }
    size_t weight() const {
        return sets_.front().weight();
    }
    int scope() const {
        return scope_;
    }
    const Classification &classification() const {
        return classification_;
    }
    DtsKind kind() const {
        return classification_.kind;
    }

    /// "{{0, 1}, {0, 2}}"
    std::string str() const;

   private:
    std::vector<SupportSet> sets_;
    int scope_ = 0;
    Classification classification_;
};

/// Sorted copy of the sets, for comparing families as unordered collections.
std::vector<SupportSet> canonical_order(std::span<const SupportSet> sets);

struct SearchLimits {
    int max_sets = 5;
    int max_weight = 5;
    int max_scope = 40;
};

/// Hard ceiling on the scope the enumerator can represent.
constexpr int kSearchScopeCeiling = 255;

/// Enumerates every family of `sets` normalized `weight`-sets with scope at
/// most `max_scope` that classifies as strong. Families are visited once each,
/// with member sets in increasing lexicographic order, and in lexicographic
/// order of the whole family. The visitor returns false to stop early.
/// Returns the number of families visited.
size_t search_strong_dts(
    int sets, int weight, int max_scope, const std::function<bool(const DtsFamily &)> &visit);

/// Convenience wrapper collecting at most `limit` families (0 = unlimited).
std::vector<DtsFamily> collect_strong_dts(int sets, int weight, int max_scope, size_t limit = 0);

}  // namespace qccdts

#endif
