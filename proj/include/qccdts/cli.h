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

#ifndef QCCDTS_CLI_H
#define QCCDTS_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

#include "qccdts/verify.h"

namespace qccdts {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

/// Parses a code description. Recognized keys: "n", "T" (or "sets"), "Z" (or
/// "Z_expected"), "pi" (1-based images), "one_based", "m", "w". A non-null
/// `one_based_override` wins over the "one_based" key, which defaults to true.
/// Throws std::invalid_argument on malformed input.
CodeInput parse_code_json(const std::string &text, const bool *one_based_override = nullptr);

/// Runs one command line. `args` excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qccdts

#endif
