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

#include "gtest/gtest.h"

#include "test_oracles.h"

using namespace qccdts;

namespace {

CodeInput example_input() {
    CodeInput in;
    in.n = 3;
    in.x_sets = {{0, 1}, {0, 2}};
    return in;
}

bool passes(const VerificationReport &r, const char *name) {
    const CheckResult *c = r.find(name);
    return c != nullptr && c->pass;
}

}  // namespace

TEST(verify, x_only_input_passes) {
    auto r = verify_code(example_input());
    ASSERT_TRUE(r.passed());
    ASSERT_EQ(r.pair.pi.str(), "(2,1)");
    ASSERT_EQ(r.pair.z.str(), "(1+D^2, D+D^2, 1)");
    ASSERT_TRUE(r.pair.certified.commuting);
    ASSERT_TRUE(r.pair.certified.dfree);
    ASSERT_EQ(r.dfree->d_free, 3);
}

TEST(verify, identity_permutation_fails_commutation) {
    auto in = example_input();
    in.pi = Permutation::identity(2);
    auto r = verify_code(in);
    ASSERT_FALSE(r.passed());
    ASSERT_FALSE(passes(r, "commuting"));
    ASSERT_TRUE(passes(r, "csoc_z"));
    ASSERT_EQ(r.symplectic.violations, (std::vector<Violation>{{-2, 0, 0}, {2, 0, 0}}));
}

TEST(verify, perturbed_z_fails_commutation) {
    auto in = example_input();
    in.x_sets = {{0, 1, 3}, {0, 4, 9}};
    std::vector<SupportSet> mutant{{0, 5, 9}, {6, 7, 9}};
    in.z_sets = mutant;
    auto x = systematic_row(in.x_sets);
    auto z = systematic_row(mutant);
    ASSERT_FALSE(oracle::symplectic_exponents(x, z).empty());

    auto r = verify_code(in);
    ASSERT_FALSE(r.passed());
    ASSERT_FALSE(passes(r, "commuting"));
    ASSERT_FALSE(r.symplectic.violations.empty());
    ASSERT_NE(r.find("commuting")->detail.find("nonzero coefficients at s ="), std::string::npos);
}

TEST(verify, repeated_difference_family_rejected) {
    auto in = example_input();
    in.x_sets = {{0, 1}, {0, 1}};
    auto r = verify_code(in);
    ASSERT_FALSE(r.passed());
    ASSERT_FALSE(passes(r, "strong_dts"));
    ASSERT_EQ(r.find("strong_dts")->detail, "WDTS: difference 1 shared by entries 1 and 2");
    ASSERT_FALSE(r.warnings.empty());
}

TEST(verify, declared_parameters) {
    auto in = example_input();
    in.declared_m = 2;
    in.declared_w = 2;
    ASSERT_TRUE(verify_code(in).passed());
    in.declared_m = 3;
    auto r = verify_code(in);
    ASSERT_FALSE(passes(r, "declared_m"));
    ASSERT_FALSE(r.passed());
}

TEST(verify, structural_errors) {
    auto in = example_input();
    in.n = 4;
    ASSERT_THROW(verify_code(in), std::invalid_argument);
    in = example_input();
    in.x_sets.clear();
    ASSERT_THROW(verify_code(in), std::invalid_argument);
    in = example_input();
    in.pi = Permutation::identity(3);
    ASSERT_THROW(verify_code(in), std::invalid_argument);
    in = example_input();
    in.x_sets = {{0, 1}, {0, 2, 4}};
    in.n = 3;
    ASSERT_THROW(verify_code(in), std::invalid_argument);
}

TEST(verify, informational_checks_do_not_gate) {
    auto in = example_input();
    in.x_sets = {{0, 1, 3}, {0, 4, 9}};
    auto r = verify_code(in);
    const CheckResult *sym = r.find("reflection_symmetry");
    ASSERT_NE(sym, nullptr);
    ASSERT_FALSE(sym->gating);
    ASSERT_TRUE(r.passed());
}
