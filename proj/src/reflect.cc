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

#include "qccdts/reflect.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qccdts/csoc.h"

namespace qccdts {

Permutation::Permutation(std::vector<int> zero_based_images) : images_(std::move(zero_based_images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || static_cast<size_t>(v) >= images_.size() || seen[v]) {
            throw std::invalid_argument("not a permutation of 1.." + std::to_string(images_.size()));
        }
        seen[v] = true;
    }
}

Permutation Permutation::from_one_based(std::span<const int> images) {
    std::vector<int> zero(images.begin(), images.end());
    for (int &v : zero) {
        v -= 1;
    }
    return Permutation(std::move(zero));
}

Permutation Permutation::identity(size_t k) {
    std::vector<int> images(k);
    std::iota(images.begin(), images.end(), 0);
    return Permutation(std::move(images));
}

Permutation Permutation::adjacent_pairs(size_t k) {
    std::vector<int> images(k);
    std::iota(images.begin(), images.end(), 0);
    for (size_t j = 0; j + 1 < k; j += 2) {
        std::swap(images[j], images[j + 1]);
    }
    return Permutation(std::move(images));
}

std::vector<Permutation> Permutation::all(size_t k) {
    std::vector<int> images(k);
    std::iota(images.begin(), images.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

bool Permutation::is_identity() const {
    for (size_t j = 0; j < images_.size(); j++) {
        if (images_[j] != static_cast<int>(j)) {
            return false;
        }
    }
    return true;
}

bool Permutation::is_involution() const {
    for (size_t j = 0; j < images_.size(); j++) {
        if (images_[images_[j]] != static_cast<int>(j)) {
            return false;
        }
    }
    return true;
}

std::vector<int> Permutation::fixed_points() const {
    std::vector<int> out;
    for (size_t j = 0; j < images_.size(); j++) {
        if (images_[j] == static_cast<int>(j)) {
            out.push_back(static_cast<int>(j));
        }
    }
    return out;
}

std::string Permutation::str() const {
    std::string out = "(";
    for (size_t j = 0; j < images_.size(); j++) {
        if (j > 0) {
            out += ',';
        }
        out += std::to_string(images_[j] + 1);
    }
    return out + ")";
}

std::vector<SupportSet> reflect_family(std::span<const SupportSet> sets, std::optional<int> window) {
    int scope = 0;
    for (const auto &s : sets) {
        if (s.empty()) {
            throw std::invalid_argument("cannot reflect an empty set");
        }
        scope = std::max(scope, s.scope());
    }
    int m = window.value_or(scope);
    if (m < scope) {
        throw std::domain_error("exponent " + std::to_string(scope) + " exceeds reflection window " + std::to_string(m));
    }
    if (m > scope) {
        throw std::invalid_argument("reflection window " + std::to_string(m) + " exceeds the family scope " +
                                    std::to_string(scope) + "; padding is not supported");
    }
    std::vector<SupportSet> out;
    out.reserve(sets.size());
    for (const auto &s : sets) {
        std::vector<int> v;
        for (int a : s.elements()) {
            v.push_back(m - a);
        }
        out.emplace_back(std::move(v));
    }
    return out;
}

PolyMatrix build_z(const PolyMatrix &x, const Permutation &pi) {
    if (!is_systematic(x)) {
        throw std::invalid_argument("build_z expects a systematic row [x_1, ..., x_{n-1}, 1]");
    }
    size_t k = x.cols() - 1;
    if (pi.size() != k) {
        throw std::invalid_argument("not a permutation of the " + std::to_string(k) + " parity entries");
    }
    int m = memory(x, static_cast<int>(x.cols()), static_cast<int>(k));
    std::vector<Gf2Poly> entries;
    entries.reserve(x.cols());
    for (size_t j = 0; j < k; j++) {
        entries.push_back(poly_reverse(x.at(0, pi(j)), m));
    }
    entries.push_back(Gf2Poly::one());
    return PolyMatrix::row(std::move(entries));
}

Permutation default_permutation(size_t parity_entries) {
    return Permutation::adjacent_pairs(parity_entries);
}

bool is_commutation_safe(std::span<const SupportSet> parity, int window, const Permutation &pi) {
    if (pi.size() != parity.size() || !pi.is_involution()) {
        return false;
    }
    for (int j : pi.fixed_points()) {
        for (int a : parity[j].elements()) {
            if (a > window || !parity[j].contains(window - a)) {
                return false;
            }
        }
    }
    return true;
}

namespace {

std::vector<std::vector<int>> spectrum(std::span<const SupportSet> sets) {
    std::vector<std::vector<int>> out;
    for (const auto &s : sets) {
        auto d = positive_differences(s);
        std::sort(d.begin(), d.end());
        out.push_back(std::move(d));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

PreservationReport check_preservation(const PolyMatrix &x, const PolyMatrix &z) {
    auto lx = parity_supports(x);
    auto lz = parity_supports(z);
    PreservationReport out;
    int n = static_cast<int>(x.cols());
    out.memory_x = memory(x, n, n - 1);
    out.memory_z = memory(z, static_cast<int>(z.cols()), static_cast<int>(z.cols()) - 1);
    out.memory_equal = out.memory_x == out.memory_z;
    out.spectrum_equal = lx.size() == lz.size() && spectrum(lx) == spectrum(lz);
    std::vector<size_t> wx;
    std::vector<size_t> wz;
    for (const auto &s : lx) {
        wx.push_back(s.weight());
    }
    for (const auto &s : lz) {
        wz.push_back(s.weight());
    }
    std::sort(wx.begin(), wx.end());
    std::sort(wz.begin(), wz.end());
    out.weights_equal = wx == wz;
    return out;
}

StabilizerPair make_pair(const DtsFamily &family, const Permutation &pi) {
    StabilizerPair pair;
    pair.x = build_systematic_x(family).matrix;
    pair.z = build_z(pair.x, pi);
    pair.n = pair.x.cols();
    pair.degree_bound = family.scope();
    pair.w = static_cast<int>(family.weight());
    pair.pi = pi;
    return pair;
}

QccParams qcc_params(const StabilizerPair &pair) {
    if (!pair.certified.commuting) {
        throw std::invalid_argument("cannot report parameters for non-commuting pair");
    }
    QccParams p;
    p.n = static_cast<int>(pair.n);
    p.r_x = static_cast<int>(pair.x.rows());
    p.r_z = static_cast<int>(pair.z.rows());
    p.quantum_rate = Rate{p.n - p.r_x - p.r_z, p.n};
    return p;
}

}  // namespace qccdts
