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

#include "qccdts/distance.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include "qccdts/csoc.h"

namespace qccdts {

size_t codeword_weight(const Codeword &c) {
    size_t w = 0;
    for (const auto &f : c) {
        w += std::count(f.bits.begin(), f.bits.end(), 1);
    }
    return w;
}

bool is_codeword(const PolyMatrix &h, const Codeword &c) {
    std::vector<std::vector<int>> streams(h.cols());
    for (const auto &f : c) {
        if (f.bits.size() != h.cols()) {
            throw std::invalid_argument("frame width does not match the code length");
        }
        for (size_t k = 0; k < f.bits.size(); k++) {
            if (f.bits[k]) {
                streams[k].push_back(f.time);
            }
        }
    }
    for (size_t i = 0; i < h.rows(); i++) {
        Gf2Poly syndrome;
        for (size_t k = 0; k < h.cols(); k++) {
            syndrome = syndrome + h.at(i, k) * Gf2Poly::from_terms(streams[k]);
        }
        if (!syndrome.is_zero()) {
            return false;
        }
    }
    return true;
}

namespace {

// Information frames are bit masks over the n-1 streams.
class SystematicEncoder {
   public:
    explicit SystematicEncoder(const PolyMatrix &x) {
        if (!is_systematic(x)) {
            throw std::invalid_argument("expected a systematic row [x_1, ..., x_{n-1}, 1]");
        }
        streams_ = static_cast<int>(x.cols()) - 1;
        if (streams_ > 63) {
            throw std::invalid_argument("too many information streams");
        }
        if (!x.is_zero() && x.min_exponent() < 0) {
            throw std::invalid_argument("distance search requires non-negative exponents");
        }
        memory_ = std::max(0, x.max_degree().value());
        taps_by_delay_.assign(memory_ + 1, 0);
        for (int i = 0; i < streams_; i++) {
            for (int a : x.at(0, i).support()) {
                taps_by_delay_[a] |= uint64_t{1} << i;
            }
        }
    }

    int streams() const {
        return streams_;
    }
    int memory() const {
        return memory_;
    }
    uint64_t frame_limit() const {
        return uint64_t{1} << streams_;
    }

    // Parity at time t given frames 0..t in `history`.
    int parity(const std::vector<uint64_t> &history, int t) const {
        uint64_t acc = 0;
        for (int d = 0; d <= memory_ && d <= t; d++) {
            acc ^= history[t - d] & taps_by_delay_[d];
        }
        return std::popcount(acc) & 1;
    }

    // True when frames t-mu+1..t are all zero.
    bool state_is_zero(const std::vector<uint64_t> &history, int t) const {
        for (int d = 0; d < memory_ && d <= t; d++) {
            if (history[t - d] != 0) {
                return false;
            }
        }
        return true;
    }

    Codeword to_codeword(const std::vector<uint64_t> &history, int last) const {
        Codeword out;
        for (int t = 0; t <= last; t++) {
            CodeFrame f{t, std::vector<uint8_t>(streams_ + 1, 0)};
            for (int i = 0; i < streams_; i++) {
                f.bits[i] = (history[t] >> i) & 1;
            }
            f.bits[streams_] = static_cast<uint8_t>(parity(history, t));
            if (std::count(f.bits.begin(), f.bits.end(), 1) > 0) {
                out.push_back(std::move(f));
            }
        }
        return out;
    }

   private:
    int streams_ = 0;
    int memory_ = 0;
    std::vector<uint64_t> taps_by_delay_;
};

std::vector<std::pair<int, int>> support_of(const Codeword &c) {
    std::vector<std::pair<int, int>> out;
    for (const auto &f : c) {
        for (size_t k = 0; k < f.bits.size(); k++) {
            if (f.bits[k]) {
                out.emplace_back(f.time, static_cast<int>(k));
            }
        }
    }
    return out;
}

class ColumnDistanceSearch {
   public:
    ColumnDistanceSearch(const SystematicEncoder &enc, int j) : enc_(enc), last_(j), history_(j + 1, 0) {
    }

    int run() {
        visit(0, 0);
        return best_;
    }

   private:
    void visit(int t, int weight) {
        if (t > last_) {
            best_ = std::min(best_, weight);
            return;
        }
        for (uint64_t u = t == 0 ? 1 : 0; u < enc_.frame_limit(); u++) {
            history_[t] = u;
            int w = weight + std::popcount(u) + enc_.parity(history_, t);
            if (w < best_) {
                visit(t + 1, w);
            }
        }
        history_[t] = 0;
    }

    const SystematicEncoder &enc_;
    int last_;
    std::vector<uint64_t> history_;
    int best_ = std::numeric_limits<int>::max();
};

class FreeDistanceSearch {
   public:
    FreeDistanceSearch(const SystematicEncoder &enc, int budget, int horizon)
        : enc_(enc), budget_(budget), horizon_(horizon), history_(horizon, 0) {
    }

    ExactDistance run() {
        if (horizon_ > 0) {
            visit(0, 0);
        }
        ExactDistance out;
        out.budget = budget_;
        out.nodes = nodes_;
        if (found_) {
            out.distance = best_weight_;
            out.witness = best_;
        }
        return out;
    }

   private:
    void visit(int t, int weight) {
        for (uint64_t u = t == 0 ? 1 : 0; u < enc_.frame_limit(); u++) {
            nodes_++;
            history_[t] = u;
            int w = weight + std::popcount(u) + enc_.parity(history_, t);
            if (w > (found_ ? best_weight_ : budget_)) {
                continue;
            }
            if (enc_.state_is_zero(history_, t)) {
                offer(t, w);
            } else if (t + 1 < horizon_) {
                visit(t + 1, w);
            }
        }
        history_[t] = 0;
    }

    void offer(int t, int weight) {
        Codeword c = enc_.to_codeword(history_, t);
        if (!found_ || weight < best_weight_ || (weight == best_weight_ && support_of(c) < support_of(best_))) {
            found_ = true;
            best_weight_ = weight;
            best_ = std::move(c);
        }
    }

    const SystematicEncoder &enc_;
    int budget_;
    int horizon_;
    std::vector<uint64_t> history_;
    bool found_ = false;
    int best_weight_ = 0;
    Codeword best_;
    uint64_t nodes_ = 0;
};

}  // namespace

int column_distance(const PolyMatrix &h, int j) {
    if (j < 0) {
        throw std::invalid_argument("column distance index must be non-negative");
    }
    SystematicEncoder enc(h);
    if (static_cast<long>(j + 1) * enc.streams() > kMaxColumnWindowBits) {
        throw std::invalid_argument("window too large for exact oracle");
    }
    return ColumnDistanceSearch(enc, j).run();
}

std::vector<int> column_distances(const PolyMatrix &h, int j) {
    std::vector<int> out;
    for (int k = 0; k <= j; k++) {
        out.push_back(column_distance(h, k));
    }
    return out;
}

const char *distance_method_name(DistanceMethod m) {
    switch (m) {
        case DistanceMethod::kExactSearch:
            return "EXACT_SEARCH";
        case DistanceMethod::kCsocCertificate:
            return "CSOC_CERTIFICATE";
        case DistanceMethod::kWitnessUpperBound:
            return "WITNESS_UPPER_BOUND";
    }
    return "?";
}

std::string ExactDistance::str() const {
    return distance ? std::to_string(*distance) : ">" + std::to_string(budget);
}

ExactDistance dfree_exact(const PolyMatrix &x, int budget, std::optional<int> horizon) {
    if (budget < 1 || budget > kMaxExactBudget) {
        throw std::invalid_argument("exact search budget must lie in [1, " + std::to_string(kMaxExactBudget) + "]");
    }
    SystematicEncoder enc(x);
    if (enc.memory() > kMaxExactMemory) {
        throw std::invalid_argument("exact search needs memory <= " + std::to_string(kMaxExactMemory) + ", got " +
                                    std::to_string(enc.memory()));
    }
    int h = horizon.value_or(budget * (enc.memory() + 1));
    return FreeDistanceSearch(enc, budget, h).run();
}

DistanceCertificate dfree_upper(const PolyMatrix &x) {
    if (!is_systematic(x) || x.cols() < 2) {
        throw std::invalid_argument("dfree_upper expects a systematic row with at least one parity entry");
    }
    size_t lightest = 0;
    for (size_t i = 1; i + 1 < x.cols(); i++) {
        if (x.at(0, i).weight() < x.at(0, lightest).weight()) {
            lightest = i;
        }
    }
    const Gf2Poly &taps = x.at(0, lightest);
    if (!taps.is_zero() && taps.low_exponent() < 0) {
        throw std::invalid_argument("dfree_upper requires non-negative exponents");
    }
    size_t n = x.cols();
    std::vector<int> times(taps.support().begin(), taps.support().end());
    if (times.empty() || times.front() != 0) {
        times.insert(times.begin(), 0);
    }
    DistanceCertificate out;
    for (int t : times) {
        CodeFrame f{t, std::vector<uint8_t>(n, 0)};
        if (t == 0) {
            f.bits[lightest] = 1;
        }
        f.bits[n - 1] = taps.coefficient(t) ? 1 : 0;
        out.witness.push_back(std::move(f));
    }
    out.d_free = static_cast<int>(codeword_weight(out.witness));
    out.method = DistanceMethod::kWitnessUpperBound;
    return out;
}

DistanceCertificate certify_dfree(const PolyMatrix &x) {
    if (!is_csoc(x).is_csoc) {
        throw std::invalid_argument("certificate requires CSOC");
    }
    DistanceCertificate out = dfree_upper(x);
    out.method = DistanceMethod::kCsocCertificate;
    int m = x.max_degree().value();
    if (out.d_free > kMaxExactBudget) {
        out.exact_skipped_reason = "w+1 = " + std::to_string(out.d_free) + " exceeds the search budget cap";
    } else if (m > kMaxExactMemory) {
        out.exact_skipped_reason = "memory " + std::to_string(m) + " exceeds " + std::to_string(kMaxExactMemory);
    } else {
        out.exact = dfree_exact(x, out.d_free);
    }
    return out;
}

}  // namespace qccdts
