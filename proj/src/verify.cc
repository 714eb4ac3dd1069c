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

#include "qccdts/verify.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qccdts {

namespace {

std::string describe_collisions(const std::vector<DifferenceCollision> &collisions) {
    std::ostringstream out;
    for (size_t k = 0; k < collisions.size(); k++) {
        const auto &c = collisions[k];
        if (k > 0) {
            out << "; ";
        }
        if (c.first == c.second) {
            out << "difference " << c.difference << " repeated in entry " << c.first + 1;
        } else {
            out << "difference " << c.difference << " shared by entries " << c.first + 1 << " and " << c.second + 1;
        }
    }
    return out.str();
}

std::string describe_violations(const std::vector<Violation> &violations) {
    std::ostringstream out;
    out << "nonzero coefficients at s =";
    for (const auto &v : violations) {
        out << ' ' << v.s;
    }
    return out.str();
}

void add(VerificationReport &r, std::string name, bool pass, std::string detail, bool gating = true) {
    r.checks.push_back(CheckResult{std::move(name), pass, gating, std::move(detail)});
}

}  // namespace

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) {
        return c.pass || !c.gating;
    });
}

const CheckResult *VerificationReport::find(const std::string &name) const {
    for (const auto &c : checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

VerificationReport verify_code(const CodeInput &input) {
    if (input.x_sets.empty()) {
        throw std::invalid_argument("the X family is empty");
    }
    if (input.n != input.x_sets.size() + 1) {
        throw std::invalid_argument("n = " + std::to_string(input.n) + " but the family has " +
                                    std::to_string(input.x_sets.size()) + " sets (expected n - 1)");
    }
    VerificationReport r;
    DtsFamily family(input.x_sets);
    r.x_class = family.classification();

    BuiltMatrix built = build_systematic_x(family);
    r.warnings = built.warnings;
    Permutation pi = input.pi.value_or(default_permutation(input.x_sets.size()));
    if (pi.size() != input.x_sets.size()) {
        throw std::invalid_argument("not a permutation of the " + std::to_string(input.x_sets.size()) +
                                    " parity entries");
    }

    r.pair.n = input.n;
    r.pair.x = built.matrix;
    r.pair.degree_bound = family.scope();
    r.pair.w = static_cast<int>(family.weight());
    r.pair.pi = pi;
    if (input.z_sets) {
        if (input.z_sets->size() != input.x_sets.size()) {
            throw std::invalid_argument("the Z family must have as many sets as the X family");
        }
        r.z_sets = *input.z_sets;
        r.pair.z = systematic_row(r.z_sets);
    } else {
        r.pair.z = build_z(r.pair.x, pi);
        r.z_sets = parity_supports(r.pair.z);
    }
    r.z_class = classify(r.z_sets);

    add(r, "strong_dts", is_strong(r.x_class.kind),
        std::string(dts_kind_name(r.x_class.kind)) +
            (r.x_class.collisions.empty() ? "" : ": " + describe_collisions(r.x_class.collisions)));
    add(r, "strong_dts_z", is_strong(r.z_class.kind),
        std::string(dts_kind_name(r.z_class.kind)) +
            (r.z_class.collisions.empty() ? "" : ": " + describe_collisions(r.z_class.collisions)));

    auto reflected = canonical_order(reflect_family(input.x_sets));
    bool z_is_reflection = reflected == canonical_order(r.z_sets);
    add(r, "z_reflection", z_is_reflection,
        z_is_reflection ? "Z family is the reflected X family" : "Z family is not a reflection of the X family");

    r.csoc_x = is_csoc(r.pair.x);
    r.csoc_z = is_csoc(r.pair.z);
    add(r, "csoc_x", r.csoc_x.is_csoc,
        r.csoc_x.is_csoc ? "parity difference sets disjoint" : describe_collisions(r.csoc_x.collisions));
    add(r, "csoc_z", r.csoc_z.is_csoc,
        r.csoc_z.is_csoc ? "parity difference sets disjoint" : describe_collisions(r.csoc_z.collisions));

    r.preservation = check_preservation(r.pair.x, r.pair.z);
    add(r, "memory", r.preservation.memory_equal,
        "mu_X = " + std::to_string(r.preservation.memory_x) + ", mu_Z = " + std::to_string(r.preservation.memory_z));
    add(r, "spectrum", r.preservation.spectrum_equal && r.preservation.weights_equal,
        r.preservation.spectrum_equal ? "difference spectra and weights agree" : "difference spectra differ");
    if (input.declared_m) {
        add(r, "declared_m", *input.declared_m == r.preservation.memory_x,
            "declared " + std::to_string(*input.declared_m) + ", computed " + std::to_string(r.preservation.memory_x));
    }
    if (input.declared_w) {
        add(r, "declared_w", *input.declared_w == r.pair.w,
            "declared " + std::to_string(*input.declared_w) + ", computed " + std::to_string(r.pair.w));
    }

    r.symplectic = is_commuting(r.pair.x, r.pair.z);
    add(r, "commuting", r.symplectic.commuting,
        r.symplectic.commuting ? "S(D) = 0" : "S(D) = " + r.symplectic.sum.str() + "; " +
                                                  describe_violations(r.symplectic.violations));

    r.symmetry = check_reflection_symmetry(r.pair.x, r.preservation.memory_x);
    std::string symmetry_detail = "C_s(X) = C_{2M-s}(X)^T for all s in [0, 2M]";
    if (r.symmetry.counterexample) {
        symmetry_detail = "fails at s = " + std::to_string(r.symmetry.counterexample->s);
    }
    // Not gating: the symmetry fails on valid commuting constructions.
    add(r, "reflection_symmetry", r.symmetry.holds, symmetry_detail, false);

    if (r.csoc_x.is_csoc) {
        r.dfree = certify_dfree(r.pair.x);
        std::string detail = "d_free = " + std::to_string(r.dfree->d_free) + " (w+1), witness of weight " +
                             std::to_string(codeword_weight(r.dfree->witness));
        bool witness_ok = is_codeword(r.pair.x, r.dfree->witness) &&
                          codeword_weight(r.dfree->witness) == static_cast<size_t>(r.dfree->d_free);
        bool ok = witness_ok;
        if (r.dfree->exact) {
            detail += "; exact search: " + r.dfree->exact->str();
            ok = ok && r.dfree->exact_agrees();
        } else {
            detail += "; exact search skipped (" + r.dfree->exact_skipped_reason + ")";
        }
        add(r, "dfree", ok, detail);
    } else {
        add(r, "dfree", false, "certificate requires CSOC");
    }

    certify_pair(r.pair, r);
    return r;
}

void certify_pair(StabilizerPair &pair, const VerificationReport &report) {
    auto ok = [&](const char *name) {
        const CheckResult *c = report.find(name);
        return c != nullptr && c->pass;
    };
    pair.certified.strong_dts = ok("strong_dts");
    pair.certified.csoc_x = ok("csoc_x");
    pair.certified.csoc_z = ok("csoc_z");
    pair.certified.commuting = ok("commuting");
    pair.certified.dfree = ok("dfree");
}

}  // namespace qccdts
