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

#include "qccdts/dts.h"

#include <algorithm>
#include <bitset>
#include <map>
#include <stdexcept>

namespace qccdts {

SupportSet::SupportSet(std::vector<int> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    if (!elements_.empty() && elements_.front() < 0) {
        throw std::invalid_argument("support set element is negative");
    }
    if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
        throw std::invalid_argument("support set has a repeated element");
    }
}

int SupportSet::scope() const {
    if (elements_.empty()) {
        throw std::logic_error("empty support set has no scope");
    }
    return elements_.back();
}

int SupportSet::min() const {
    if (elements_.empty()) {
        throw std::logic_error("empty support set has no minimum");
    }
    return elements_.front();
}

bool SupportSet::contains(int v) const {
    return std::binary_search(elements_.begin(), elements_.end(), v);
}

std::string SupportSet::str() const {
    std::string out = "{";
    for (size_t k = 0; k < elements_.size(); k++) {
        if (k > 0) {
            out += ", ";
        }
        out += std::to_string(elements_[k]);
    }
    return out + "}";
}

const char *dts_kind_name(DtsKind kind) {
    switch (kind) {
        case DtsKind::kNotWdts:
            return "NOT_WDTS";
        case DtsKind::kWdts:
            return "WDTS";
        case DtsKind::kDts:
            return "DTS";
        case DtsKind::kStrong:
            return "STRONG";
        case DtsKind::kFullStrong:
            return "FULL_STRONG";
    }
    return "?";
}

bool is_strong(DtsKind kind) {
    return kind == DtsKind::kStrong || kind == DtsKind::kFullStrong;
}

std::vector<int> positive_differences(const SupportSet &set) {
    std::vector<int> out;
    auto e = set.elements();
    out.reserve(e.size() * (e.size() - (e.empty() ? 0 : 1)) / 2);
    for (size_t a = 0; a < e.size(); a++) {
        for (size_t b = a + 1; b < e.size(); b++) {
            out.push_back(e[b] - e[a]);
        }
    }
    return out;
}

std::vector<DifferenceCollision> find_difference_collisions(std::span<const SupportSet> sets) {
    std::vector<DifferenceCollision> within;
    std::vector<DifferenceCollision> across;
    // difference -> first set index it was seen in
    std::map<int, size_t> owner;
    for (size_t i = 0; i < sets.size(); i++) {
        auto diffs = positive_differences(sets[i]);
        std::sort(diffs.begin(), diffs.end());
        for (size_t k = 0; k < diffs.size(); k++) {
            if (k > 0 && diffs[k] == diffs[k - 1]) {
                if (k < 2 || diffs[k - 2] != diffs[k]) {
                    within.push_back({i, i, diffs[k]});
                }
                continue;
            }
            auto [it, inserted] = owner.emplace(diffs[k], i);
            if (!inserted) {
                across.push_back({it->second, i, diffs[k]});
            }
        }
    }
    within.insert(within.end(), across.begin(), across.end());
    return within;
}

Classification classify(std::span<const SupportSet> sets, std::optional<int> budget) {
    if (sets.empty()) {
        throw std::invalid_argument("cannot classify an empty family");
    }
    size_t w = sets.front().weight();
    for (const auto &s : sets) {
        if (s.empty()) {
            throw std::invalid_argument("cannot classify a family containing an empty set");
        }
        if (s.weight() != w) {
            throw std::invalid_argument("classification error: member sets have unequal cardinalities");
        }
    }

    Classification out;
    out.collisions = find_difference_collisions(sets);
    bool within_ok = std::none_of(out.collisions.begin(), out.collisions.end(), [](const DifferenceCollision &c) {
        return c.first == c.second;
    });
    if (!within_ok) {
        out.kind = DtsKind::kNotWdts;
        return out;
    }
    if (w < 2 || !out.collisions.empty()) {
        // Weight-1 families carry no differences and stay at the bottom rung.
        out.kind = DtsKind::kWdts;
        return out;
    }

    int largest = 0;
    size_t total = 0;
    for (const auto &s : sets) {
        largest = std::max(largest, s.scope() - s.min());
        total += positive_differences(s).size();
    }
    int m = budget.value_or(largest);
    if (m < 1 || largest > m) {
        out.kind = DtsKind::kDts;
        return out;
    }
    out.budget = m;
    out.kind = total == static_cast<size_t>(m) ? DtsKind::kFullStrong : DtsKind::kStrong;
    if (out.kind == DtsKind::kFullStrong) {
        // Distinct differences inside {1..M} numbering exactly M of them must
        // cover the whole range; recount directly.
        std::vector<bool> seen(m + 1, false);
        for (const auto &s : sets) {
            for (int d : positive_differences(s)) {
                seen[d] = true;
            }
        }
        if (std::count(seen.begin() + 1, seen.end(), true) != m) {
            throw std::logic_error("full-strong coverage count disagrees with the difference total");
        }
    }
    return out;
}

SupportSet normalize(const SupportSet &set) {
    if (set.empty()) {
        throw std::invalid_argument("cannot normalize an empty set");
    }
    std::vector<int> out(set.elements().begin(), set.elements().end());
    int lo = out.front();
    for (int &v : out) {
        v -= lo;
    }
    return SupportSet(std::move(out));
}

SupportSet from_one_based(std::span<const int> elements) {
    std::vector<int> out;
    out.reserve(elements.size());
    for (int v : elements) {
        if (v < 1) {
            throw std::invalid_argument("input is already 0-based or malformed");
        }
        out.push_back(v - 1);
    }
    return SupportSet(std::move(out));
}

SupportSet to_one_based(const SupportSet &set) {
    std::vector<int> out(set.elements().begin(), set.elements().end());
    for (int &v : out) {
        v += 1;
    }
    return SupportSet(std::move(out));
}

DtsFamily::DtsFamily(std::vector<SupportSet> sets, std::optional<int> budget) : sets_(std::move(sets)) {
    classification_ = classify(sets_, budget);
    for (const auto &s : sets_) {
        scope_ = std::max(scope_, s.scope());
    }
}

std::string DtsFamily::str() const {
    std::string out = "{";
    for (size_t k = 0; k < sets_.size(); k++) {
        if (k > 0) {
            out += ", ";
        }
        out += sets_[k].str();
    }
    return out + "}";
}

std::vector<SupportSet> canonical_order(std::span<const SupportSet> sets) {
    std::vector<SupportSet> out(sets.begin(), sets.end());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

using DiffMask = std::bitset<kSearchScopeCeiling + 1>;

class StrongDtsEnumerator {
   public:
    StrongDtsEnumerator(int sets, int weight, int max_scope, const std::function<bool(const DtsFamily &)> &visit)
        : sets_(sets), weight_(weight), max_scope_(max_scope), visit_(visit), family_(sets) {
    }

    size_t run() {
        for (auto &s : family_) {
            s.reserve(weight_);
        }
        place_set(0, DiffMask());
        return visited_;
    }

   private:
    // Fills set `index` element by element. Sets after the first must compare
    // lexicographically greater than their predecessor.
    bool place_set(int index, const DiffMask &used) {
        if (index == sets_) {
            std::vector<SupportSet> members;
            members.reserve(sets_);
            for (const auto &s : family_) {
                members.emplace_back(s);
            }
            visited_++;
            return visit_(DtsFamily(std::move(members)));
        }
        auto &cur = family_[index];
        cur.assign(1, 0);
        return extend(index, used, index > 0);
    }

    // `tied` is true while the current set equals the previous one on the
    // prefix placed so far.
    bool extend(int index, const DiffMask &used, bool tied) {
        auto &cur = family_[index];
        if (static_cast<int>(cur.size()) == weight_) {
            if (tied) {
                return true;  // identical to predecessor; skipped
            }
            return place_set(index + 1, used);
        }
        int lo = cur.back() + 1;
        if (tied) {
            lo = std::max(lo, family_[index - 1][cur.size()]);
        }
        int remaining = weight_ - static_cast<int>(cur.size()) - 1;
        for (int v = lo; v + remaining <= max_scope_; v++) {
            DiffMask next = used;
            bool clash = false;
            for (int prev : cur) {
                int d = v - prev;
                if (next.test(d)) {
                    clash = true;
                    break;
                }
                next.set(d);
            }
            if (clash) {
                continue;
            }
            bool still_tied = tied && v == family_[index - 1][cur.size()];
            cur.push_back(v);
            bool keep_going = extend(index, next, still_tied);
            cur.pop_back();
            if (!keep_going) {
                return false;
            }
        }
        return true;
    }

    int sets_;
    int weight_;
    int max_scope_;
    const std::function<bool(const DtsFamily &)> &visit_;
    std::vector<std::vector<int>> family_;
    size_t visited_ = 0;
};

}  // namespace

size_t search_strong_dts(
    int sets, int weight, int max_scope, const std::function<bool(const DtsFamily &)> &visit) {
    if (sets < 1 || weight < 2 || max_scope < weight - 1) {
        throw std::invalid_argument("search requires sets >= 1, weight >= 2 and max_scope >= weight - 1");
    }
    if (max_scope > kSearchScopeCeiling) {
        throw std::invalid_argument("max_scope exceeds " + std::to_string(kSearchScopeCeiling));
    }
    return StrongDtsEnumerator(sets, weight, max_scope, visit).run();
}

std::vector<DtsFamily> collect_strong_dts(int sets, int weight, int max_scope, size_t limit) {
    std::vector<DtsFamily> out;
    search_strong_dts(sets, weight, max_scope, [&](const DtsFamily &f) {
        out.push_back(f);
        return limit == 0 || out.size() < limit;
    });
    return out;
}

}  // namespace qccdts
