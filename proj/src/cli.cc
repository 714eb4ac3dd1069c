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

#include "qccdts/cli.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "qccdts/golden.h"

namespace qccdts {

using nlohmann::json;

namespace {

std::vector<SupportSet> convert_sets(const std::vector<std::vector<int>> &raw, bool one_based, const char *what) {
    std::vector<SupportSet> out;
    for (const auto &s : raw) {
        if (s.empty()) {
            throw std::invalid_argument(std::string("empty set in ") + what);
        }
        out.push_back(one_based ? from_one_based(s) : SupportSet(s));
    }
    return out;
}

SupportSet display_set(const SupportSet &s, bool one_based) {
    return one_based ? to_one_based(s) : s;
}

std::string render_family(std::span<const SupportSet> sets, bool one_based) {
    std::string out;
    for (size_t k = 0; k < sets.size(); k++) {
        if (k > 0) {
            out += "; ";
        }
        out += display_set(sets[k], one_based).str();
    }
    return out;
}

std::string render_raw(const std::vector<std::vector<int>> &sets) {
    std::vector<SupportSet> tmp;
    for (const auto &s : sets) {
        tmp.emplace_back(s);
    }
    return render_family(tmp, false);
}

json family_json(std::span<const SupportSet> sets, bool one_based) {
    json out = json::array();
    for (const auto &s : sets) {
        auto d = display_set(s, one_based);
        out.push_back(std::vector<int>(d.elements().begin(), d.elements().end()));
    }
    return out;
}

json permutation_json(const Permutation &pi) {
    json out = json::array();
    for (size_t i = 0; i < pi.size(); i++) {
        out.push_back(pi(i) + 1);
    }
    return out;
}

json checks_json(const std::vector<CheckResult> &checks) {
    json out = json::array();
    for (const auto &c : checks) {
        out.push_back({{"name", c.name}, {"pass", c.pass}, {"gating", c.gating}, {"detail", c.detail}});
    }
    return out;
}

json witness_json(const Codeword &c) {
    json out = json::array();
    for (const auto &f : c) {
        out.push_back({{"time", f.time}, {"bits", f.bits}});
    }
    return out;
}

std::string render_witness(const Codeword &c) {
    std::ostringstream out;
    for (size_t k = 0; k < c.size(); k++) {
        out << (k > 0 ? "; " : "") << "t=" << c[k].time << ":";
        for (auto b : c[k].bits) {
            out << ' ' << static_cast<int>(b);
        }
    }
    return out.str();
}

void print_checks(std::ostream &out, const std::vector<CheckResult> &checks, const std::string &indent) {
    size_t width = 0;
    for (const auto &c : checks) {
        width = std::max(width, c.name.size());
    }
    for (const auto &c : checks) {
        out << indent << (c.pass ? "PASS " : "FAIL ") << std::left << std::setw(static_cast<int>(width)) << c.name
            << "  " << c.detail << (c.gating ? "" : " [informational]") << '\n';
    }
}

std::string read_text(const std::string &path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open input file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Options {
    std::string input;
    bool one_based_flag = false;
    bool zero_based_flag = false;
    bool json_out = false;
    int table = 0;
    int row = 0;
    bool full_strong = false;
    size_t limit = 0;
    std::optional<int> budget;
    std::optional<int> columns;
    int sets = 2;
    int weight = 2;
    int max_scope = 10;

    std::optional<bool> one_based() const {
        if (one_based_flag) {
            return true;
        }
        if (zero_based_flag) {
            return false;
        }
        return std::nullopt;
    }
};

struct Loaded {
    CodeInput code;
    bool one_based = true;
};

Loaded load(const Options &opt) {
    std::string text = read_text(opt.input);
    auto override_value = opt.one_based();
    Loaded out;
    out.code = parse_code_json(text, override_value ? &*override_value : nullptr);
    if (override_value) {
        out.one_based = *override_value;
    } else {
        json j = json::parse(text);
        out.one_based = j.value("one_based", true);
    }
    return out;
}

void check_length(const CodeInput &in) {
    if (in.n != in.x_sets.size() + 1) {
        throw std::invalid_argument("n = " + std::to_string(in.n) + " but the family has " +
                                    std::to_string(in.x_sets.size()) + " sets (expected n - 1)");
    }
}

int cmd_build(const Options &opt, std::ostream &out, std::ostream &err) {
    Loaded in = load(opt);
    check_length(in.code);
    DtsFamily family(in.code.x_sets);
    Permutation pi = in.code.pi.value_or(default_permutation(family.size()));
    StabilizerPair pair = make_pair(family, pi);
    auto warnings = build_systematic_x(family).warnings;
    if (in.code.z_sets) {
        pair.z = systematic_row(*in.code.z_sets);
    }
    pair.certified.commuting = is_commuting(pair.x, pair.z).commuting;
    std::optional<QccParams> params;
    if (pair.certified.commuting) {
        params = qcc_params(pair);
    }
    int mu = memory(pair.x, static_cast<int>(pair.n), static_cast<int>(pair.n) - 1);
    if (opt.json_out) {
        json j = {
            {"one_based", in.one_based},
            {"X", pair.x.str()},
            {"Z", pair.z.str()},
            {"X_sets", family_json(in.code.x_sets, in.one_based)},
            {"Z_sets", family_json(parity_supports(pair.z), in.one_based)},
            {"pi", permutation_json(pi)},
            {"memory", mu},
            {"w", pair.w},
            {"commuting", pair.certified.commuting},
            {"quantum_rate", params ? json(params->quantum_rate.str()) : json(nullptr)},
            {"warnings", warnings},
        };
        out << j.dump(2) << '\n';
    } else {
        for (const auto &w : warnings) {
            err << "warning: " << w << '\n';
        }
        out << "X(D) = " << pair.x.str() << '\n';
        out << "Z(D) = " << pair.z.str() << '\n';
        out << "pi = " << pi.str() << '\n';
        out << "memory = " << mu << '\n';
        out << "w = " << pair.w << '\n';
        if (params) {
            out << "quantum rate = " << params->quantum_rate.str() << '\n';
        } else {
            out << "quantum rate = unavailable (X and Z do not commute)\n";
        }
    }
    return kExitOk;
}

int cmd_reflect(const Options &opt, std::ostream &out) {
    Loaded in = load(opt);
    check_length(in.code);
    PolyMatrix x = systematic_row(in.code.x_sets);
    Permutation pi = in.code.pi.value_or(default_permutation(in.code.x_sets.size()));
    PolyMatrix z = build_z(x, pi);
    auto z_sets = parity_supports(z);
    if (opt.json_out) {
        json j = {
            {"one_based", in.one_based},
            {"sets", family_json(z_sets, in.one_based)},
            {"pi", permutation_json(pi)},
            {"X", x.str()},
            {"Z", z.str()},
        };
        out << j.dump(2) << '\n';
    } else {
        out << "Z family = " << render_family(z_sets, in.one_based) << '\n';
        out << "X(D) = " << x.str() << '\n';
        out << "Z(D) = " << z.str() << '\n';
        out << "pi = " << pi.str() << '\n';
    }
    return kExitOk;
}

json verify_json(const VerificationReport &r, bool one_based) {
    json violations = json::array();
    for (const auto &v : r.symplectic.violations) {
        violations.push_back({{"s", v.s}, {"i", v.i}, {"j", v.j}});
    }
    json j = {
        {"commuting", r.symplectic.commuting},
        {"csoc_x", r.csoc_x.is_csoc},
        {"csoc_z", r.csoc_z.is_csoc},
        {"strong_dts", is_strong(r.x_class.kind)},
        {"classification", dts_kind_name(r.x_class.kind)},
        {"memory", r.preservation.memory_equal},
        {"reflection_symmetry", r.symmetry.holds},
        {"violations", violations},
        {"X", r.pair.x.str()},
        {"Z", r.pair.z.str()},
        {"Z_sets", family_json(r.z_sets, one_based)},
        {"pi", permutation_json(r.pair.pi)},
        {"checks", checks_json(r.checks)},
        {"warnings", r.warnings},
        {"passed", r.passed()},
    };
    if (r.dfree) {
        j["d_free"] = r.dfree->d_free;
    }
    return j;
}

int cmd_verify(const Options &opt, std::ostream &out) {
    Loaded in = load(opt);
    VerificationReport r = verify_code(in.code);
    if (opt.json_out) {
        out << verify_json(r, in.one_based).dump(2) << '\n';
    } else {
        out << "X(D) = " << r.pair.x.str() << '\n';
        out << "Z(D) = " << r.pair.z.str() << '\n';
        for (const auto &w : r.warnings) {
            out << "warning: " << w << '\n';
        }
        print_checks(out, r.checks, "");
        out << "verdict: " << (r.passed() ? "PASS" : "FAIL") << '\n';
    }
    return r.passed() ? kExitOk : kExitFailure;
}

int default_column_index(const PolyMatrix &x) {
    int streams = static_cast<int>(x.cols()) - 1;
    int cap = kMaxColumnWindowBits / std::max(1, streams) - 1;
    int mu = std::max(0, x.max_degree().value());
    return std::max(0, std::min(2 * mu, cap));
}

int cmd_distance(const Options &opt, std::ostream &out) {
    Loaded in = load(opt);
    check_length(in.code);
    classify(in.code.x_sets);  // rejects unequal weights
    PolyMatrix x = systematic_row(in.code.x_sets);
    DistanceCertificate cert = is_csoc(x).is_csoc ? certify_dfree(x) : dfree_upper(x);
    std::optional<ExactDistance> exact;
    if (opt.budget) {
        exact = dfree_exact(x, *opt.budget);
    } else if (cert.exact) {
        exact = cert.exact;
    }
    int j = opt.columns.value_or(default_column_index(x));
    std::vector<int> columns = column_distances(x, j);
    if (opt.json_out) {
        json e = nullptr;
        if (exact) {
            e = {{"budget", exact->budget}, {"result", exact->str()}, {"nodes", exact->nodes}};
        }
        json jout = {
            {"d_free", cert.d_free},
            {"method", distance_method_name(cert.method)},
            {"witness", witness_json(cert.witness)},
            {"exact", e},
            {"column_distances", columns},
        };
        out << jout.dump(2) << '\n';
    } else {
        out << "X(D) = " << x.str() << '\n';
        out << "d_free = " << cert.d_free << " (" << distance_method_name(cert.method) << ")\n";
        out << "witness = " << render_witness(cert.witness) << '\n';
        if (exact) {
            out << "exact search (budget " << exact->budget << ") = " << exact->str() << '\n';
        } else if (!cert.exact_skipped_reason.empty()) {
            out << "exact search skipped: " << cert.exact_skipped_reason << '\n';
        }
        out << "column distances [0.." << j << "] =";
        for (int d : columns) {
            out << ' ' << d;
        }
        out << '\n';
    }
    return kExitOk;
}

std::vector<std::string> failing_checks(const TableRowReport &r) {
    std::vector<std::string> names = r.transcription_errors;
    if (!r.z_matches) {
        names.push_back("z_family");
    }
    for (const auto &c : r.verification.checks) {
        if (!c.pass && c.gating) {
            names.push_back(c.name);
        }
    }
    return names;
}

int cmd_tables(const Options &opt, std::ostream &out, std::ostream &err) {
    // The two transcriptions of every row are cross-checked before anything
    // else, whatever subset was requested.
    bool transcription_ok = true;
    for (const auto &row : golden_rows()) {
        for (const auto &e : cross_check_transcription(row)) {
            err << "transcription error: " << e << '\n';
            transcription_ok = false;
        }
    }
    if (opt.table < 0 || opt.table > 3) {
        throw std::invalid_argument("--table must be 1, 2 or 3");
    }
    auto rows = select_rows(opt.table, opt.row);
    if (rows.empty()) {
        throw std::invalid_argument("no such table row");
    }
    std::vector<TableRowReport> reports;
    for (const TableRow *row : rows) {
        reports.push_back(verify_table_row(*row));
    }
    size_t passed = std::count_if(reports.begin(), reports.end(), [](const auto &r) { return r.passed(); });
    bool ok = transcription_ok && passed == reports.size();

    if (opt.json_out) {
        json jrows = json::array();
        for (const auto &r : reports) {
            const TableRow &t = *r.row;
            json jr = {
                {"table", t.table_id},
                {"row", t.row_no},
                {"rate", t.rate_label},
                {"m", t.m},
                {"w", t.w},
                {"T", t.t_sets},
                {"Z", t.z_sets},
                {"g_x", t.g_x},
                {"g_z", t.g_z},
                {"z_matches", r.z_matches},
                {"z_matches_in_order", r.z_matches_in_order},
                {"transcription_errors", r.transcription_errors},
                {"checks", checks_json(r.verification.checks)},
                {"passed", r.passed()},
            };
            if (opt.row != 0) {
                jr["X_poly"] = r.verification.pair.x.str();
                jr["Z_poly"] = r.verification.pair.z.str();
            }
            jrows.push_back(std::move(jr));
        }
        json j = {{"rows", jrows}, {"passed", passed}, {"total", reports.size()}, {"ok", ok}};
        out << j.dump(2) << '\n';
        return ok ? kExitOk : kExitFailure;
    }

    size_t t_width = 1, z_width = 1, g_width = 1;
    for (const auto &r : reports) {
        t_width = std::max(t_width, render_raw(r.row->t_sets).size());
        z_width = std::max(z_width, render_raw(r.row->z_sets).size());
        g_width = std::max(g_width, render_raw(r.row->g_x).size());
    }
    int current_table = 0;
    for (const auto &r : reports) {
        const TableRow &t = *r.row;
        if (t.table_id != current_table) {
            current_table = t.table_id;
            out << (current_table == rows.front()->table_id ? "" : "\n");
            out << "Table " << t.table_id << ": rate " << t.rate_label << '\n';
            out << std::left << std::setw(4) << "row" << std::setw(4) << "m" << std::setw(3) << "w"
                << std::setw(static_cast<int>(t_width) + 2) << "T" << std::setw(static_cast<int>(z_width) + 2) << "Z"
                << std::setw(static_cast<int>(g_width) + 2) << "g" << "status\n";
        }
        out << std::left << std::setw(4) << t.row_no << std::setw(4) << t.m << std::setw(3) << t.w
            << std::setw(static_cast<int>(t_width) + 2) << render_raw(t.t_sets)
            << std::setw(static_cast<int>(z_width) + 2) << render_raw(t.z_sets)
            << std::setw(static_cast<int>(g_width) + 2) << render_raw(t.g_x) << (r.passed() ? "PASS" : "FAIL")
            << '\n';
        if (opt.row != 0) {
            out << "  X(D) = " << r.verification.pair.x.str() << '\n';
            out << "  Z(D) = " << r.verification.pair.z.str() << '\n';
            out << "  reflected X family " << (r.z_matches ? "matches" : "does not match") << " the Z column"
                << (r.z_matches_in_order ? ", in order under pi = " + default_permutation(t.g_x.size()).str() : "")
                << '\n';
            print_checks(out, r.verification.checks, "  ");
        }
    }
    for (const auto &r : reports) {
        if (!r.passed()) {
            out << "table " << r.row->table_id << " row " << r.row->row_no << ": FAIL (";
            auto names = failing_checks(r);
            for (size_t k = 0; k < names.size(); k++) {
                out << (k > 0 ? ", " : "") << names[k];
            }
            out << ")\n";
        }
    }
    out << passed << "/" << reports.size() << " rows pass\n";
    return ok ? kExitOk : kExitFailure;
}

SearchLimits search_limits() {
    SearchLimits limits;
    if (const char *env = std::getenv("QCCDTS_MAX_SEARCH")) {
        int v = 0;
        try {
            v = std::stoi(env);
        } catch (const std::exception &) {
            throw std::invalid_argument("QCCDTS_MAX_SEARCH must be an integer");
        }
        v = std::clamp(v, 1, kSearchScopeCeiling);
        limits = SearchLimits{v, v, v};
    }
    return limits;
}

int cmd_search(const Options &opt, std::ostream &out) {
    SearchLimits limits = search_limits();
    if (opt.sets < 1 || opt.sets > limits.max_sets) {
        throw std::invalid_argument("--sets must lie in [1, " + std::to_string(limits.max_sets) + "]");
    }
    if (opt.weight < 1 || opt.weight > limits.max_weight) {
        throw std::invalid_argument("--weight must lie in [1, " + std::to_string(limits.max_weight) + "]");
    }
    if (opt.max_scope < 0 || opt.max_scope > limits.max_scope) {
        throw std::invalid_argument("--max-scope must lie in [0, " + std::to_string(limits.max_scope) + "]");
    }
    bool one_based = opt.one_based().value_or(false);
    size_t emitted = 0;
    search_strong_dts(opt.sets, opt.weight, opt.max_scope, [&](const DtsFamily &family) {
        if (opt.full_strong && family.kind() != DtsKind::kFullStrong) {
            return true;
        }
        json j = {{"one_based", one_based}, {"sets", family_json(family.sets(), one_based)}};
        out << j.dump() << '\n';
        emitted++;
        return opt.limit == 0 || emitted < opt.limit;
    });
    return kExitOk;
}

}  // namespace

CodeInput parse_code_json(const std::string &text, const bool *one_based_override) {
    try {
        json j = json::parse(text);
        if (!j.is_object()) {
            throw std::invalid_argument("code description must be a JSON object");
        }
        bool one_based = one_based_override ? *one_based_override : j.value("one_based", true);
        const char *x_key = j.contains("T") ? "T" : "sets";
        if (!j.contains(x_key)) {
            throw std::invalid_argument("missing \"T\" (or \"sets\")");
        }
        CodeInput in;
        in.x_sets = convert_sets(j.at(x_key).get<std::vector<std::vector<int>>>(), one_based, "T");
        if (in.x_sets.empty()) {
            throw std::invalid_argument("the X family is empty");
        }
        for (const char *z_key : {"Z", "Z_expected"}) {
            if (j.contains(z_key) && !j.at(z_key).is_null()) {
                in.z_sets = convert_sets(j.at(z_key).get<std::vector<std::vector<int>>>(), one_based, "Z");
                break;
            }
        }
        if (j.contains("pi") && !j.at("pi").is_null()) {
            auto images = j.at("pi").get<std::vector<int>>();
            in.pi = Permutation::from_one_based(images);
        }
        if (j.contains("n")) {
            int n = j.at("n").get<int>();
            if (n < 2) {
                throw std::invalid_argument("n must be at least 2");
            }
            in.n = static_cast<size_t>(n);
        } else {
            in.n = in.x_sets.size() + 1;
        }
        if (j.contains("m")) {
            in.declared_m = j.at("m").get<int>();
        }
        if (j.contains("w")) {
            in.declared_w = j.at("w").get<int>();
        }
        return in;
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Build and verify quantum convolutional CSS codes", "qccdts"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;

    auto *one = app.add_flag("--one-based", opt.one_based_flag, "Sets use 1-based elements");
    auto *zero = app.add_flag("--zero-based", opt.zero_based_flag, "Sets use 0-based exponents");
    one->excludes(zero);
    app.add_flag("--json", opt.json_out, "Machine-readable output");

    auto add_input = [&](CLI::App *sub) {
        sub->add_option("--input,-i", opt.input, "Code description JSON file ('-' for stdin)");
    };

    auto *build = app.add_subcommand("build", "Build X(D) and Z(D) from a family");
    add_input(build);
    auto *reflect = app.add_subcommand("reflect", "Reflect the family and print Z");
    add_input(reflect);
    auto *verify = app.add_subcommand("verify", "Run every check on a code");
    add_input(verify);
    auto *distance = app.add_subcommand("distance", "Free and column distances of X");
    add_input(distance);
    distance->add_option("--budget", opt.budget, "Run the exact free-distance search with this weight budget");
    distance->add_option("--columns", opt.columns, "Largest column-distance index");
    auto *tables = app.add_subcommand("tables", "Reproduce the embedded reference constructions");
    tables->add_option("--table", opt.table, "Only this table (1-3)");
    tables->add_option("--row", opt.row, "Only this row, with polynomials shown");
    auto *search = app.add_subcommand("search", "Enumerate strong DTS families as JSON lines");
    search->add_option("--sets,-r", opt.sets, "Number of sets")->capture_default_str();
    search->add_option("--weight,-w", opt.weight, "Elements per set")->capture_default_str();
    search->add_option("--max-scope", opt.max_scope, "Largest allowed element")->capture_default_str();
    search->add_option("--limit", opt.limit, "Stop after this many families (0 = no limit)");
    search->add_flag("--full-strong", opt.full_strong, "Only families covering every difference exactly once");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*build) {
            return cmd_build(opt, out, err);
        }
        if (*reflect) {
            return cmd_reflect(opt, out);
        }
        if (*verify) {
            return cmd_verify(opt, out);
        }
        if (*distance) {
            return cmd_distance(opt, out);
        }
        if (*tables) {
            return cmd_tables(opt, out, err);
        }
        if (*search) {
            return cmd_search(opt, out);
        }
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const json::exception &e) {
        err << "error: malformed JSON: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    std::vector<std::string> args;
    for (int k = 1; k < argc; k++) {
        args.emplace_back(argv[k]);
    }
    return run_cli(args, out, err);
}

}  // namespace qccdts
