// Copyright 2026 The mgh Authors
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

#include "mgh/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include <fmt/format.h>

#include "mgh/acceptance.hpp"
#include "mgh/circuits.hpp"
#include "mgh/hierarchy.hpp"
#include "mgh/json_io.hpp"
#include "mgh/random.hpp"
#include "mgh/svn.hpp"
#include "mgh/teleport.hpp"

namespace mgh {

namespace {

// Bad user input; reported on stderr with exit code 1.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json read_json_file(const std::string& path) {
    try {
        return Json::parse(read_file(path));
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
    return s;
}

int parse_int_arg(const std::string& s) {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) {
        throw std::invalid_argument("expected an integer, got '" + s + "'");
    }
    return v;
}

struct GateOptions {
    std::string gate;
    std::string circuit;
    std::string matrix;
    std::optional<int> n;
    int at = 1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--gate", gate, "gate shorthand, e.g. SWAP, CPHASE(pi/4), F(1,*,1)");
        cmd->add_option("--circuit", circuit, "circuit file");
        cmd->add_option("--matrix", matrix, "matrix JSON file");
        cmd->add_option("-n,--qubits", n, "register size for --gate");
        cmd->add_option("--at", at, "first wire when embedding --gate into n qubits");
    }

    bool given() const { return !gate.empty() || !circuit.empty() || !matrix.empty(); }

    std::pair<std::string, Operator> resolve(const Tolerances& tol) const {
        const int count = int{!gate.empty()} + int{!circuit.empty()} + int{!matrix.empty()};
        if (count != 1) {
            throw InputError("give exactly one of --gate, --circuit, --matrix");
        }
        if (!gate.empty()) {
            return {gate, gate_from_spec(gate, n, at)};
        }
        if (!circuit.empty()) {
            return {circuit, circuit_to_operator(parse_circuit(read_file(circuit), tol))};
        }
        return {matrix, operator_from_json(read_json_file(matrix))};
    }
};

std::string format_real(double v) { return fmt::format("{:.6g}", v); }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_classify(const GateOptions& g, int k_max, bool text, const Tolerances& tol, std::ostream& out) {
    const auto [label, u] = g.resolve(tol);
    if (!u.is_unitary(tol.unitary)) {
        throw InputError(label + " is not unitary");
    }
    const HierarchyReport r = classify(u, k_max, tol);
    if (text) {
        out << "gate: " << label << '\n';
        out << "qubits: " << r.n_qubits << '\n';
        out << "parity: " << to_string(r.parity) << '\n';
        out << "gaussian: " << (r.is_gaussian ? "yes" : "no") << '\n';
        out << "rotation_det: " << (r.rotation_det ? std::to_string(*r.rotation_det) : "-") << '\n';
        out << "min_level: " << (r.min_level ? std::to_string(*r.min_level) : "> " + std::to_string(k_max)) << '\n';
        if (r.two_qubit) {
            out << "phi: " << format_real(r.two_qubit->phi) << '\n';
            out << "class_representative: CPHASE(" << format_real(r.two_qubit->class_representative_phi) << ")\n";
        }
    } else {
        Json j = report_to_json(r);
        j["gate"] = label;
        emit(out, j);
    }
    return r.min_level ? kExitOk : kExitInconclusive;
}

int cmd_teleport(const GateOptions& g, int trials, std::uint64_t seed, int k_max, bool full, bool text,
                 const Tolerances& tol, std::ostream& out) {
    const auto [label, u] = g.resolve(tol);
    if (!u.is_unitary(tol.unitary)) {
        throw InputError(label + " is not unitary");
    }
    if (parity_of(u, tol) == Parity::None) {
        throw InputError(label + " is not fermionic; it has no matchgate magic state");
    }
    if (trials < 1) {
        throw InputError("--trials must be positive");
    }
    const MagicState m = magic_state(u, label, tol);
    const ProtocolSummary s = verify_protocol(u, trials, seed, k_max, tol);
    if (text) {
        out << (s.pass ? "PASS" : "FAIL") << ": " << label << ", " << s.branches_per_trial << " branches x "
            << s.trials << " trials\n";
        out << "max_residual: " << fmt::format("{:.3e}", s.max_residual) << '\n';
        out << "max_probability_deviation: " << fmt::format("{:.3e}", s.max_probability_deviation) << '\n';
        out << "magic_state: " << to_string(m.parity) << ", " << (m.is_gaussian ? "gaussian" : "non-gaussian") << '\n';
        out << "distinct_corrections: " << s.distinct_corrections << '\n';
        for (const auto& [level, count] : s.correction_levels) {
            out << "  level " << level << ": " << count << '\n';
        }
        if (s.corrections_unresolved > 0) {
            out << "  level > " << k_max << ": " << s.corrections_unresolved << '\n';
        }
    } else {
        Json j{{"gate", label},
               {"seed", seed},
               {"magic_state", Json{{"parity", std::string(to_string(m.parity))}, {"gaussian", m.is_gaussian}}},
               {"summary", summary_to_json(s)},
               {"status", s.pass ? "PASS" : "FAIL"}};
        if (full) {
            Rng rng(seed);
            j["transcript"] = transcript_to_json(simulate_protocol(u, random_state(u.n_qubits(), rng), tol), true);
        }
        emit(out, j);
    }
    return s.pass ? kExitOk : kExitVerificationFailure;
}

int cmd_svn(const std::string& tuple_path, const GateOptions& compare, bool text, const Tolerances& tol,
            std::ostream& out) {
    CarSet d;
    try {
        d = carset_from_json(read_json_file(tuple_path));
    } catch (const JsonFormatError& e) {
        throw InputError(tuple_path + ": " + e.what());
    }
    SvnResult r;
    try {
        r = svn_reconstruct(d, tol);
    } catch (const std::invalid_argument& e) {
        throw InputError(tuple_path + ": " + e.what());
    } catch (const std::runtime_error& e) {
        throw InputError(tuple_path + ": " + e.what());
    }
    const bool contract = r.max_residual() < tol.residual && r.u.is_unitary(tol.unitary);
    std::optional<bool> matches;
    std::string label;
    if (compare.given()) {
        const auto resolved = compare.resolve(tol);
        label = resolved.first;
        matches = equal_up_to_phase(r.u, resolved.second, tol).equal;
    }
    if (text) {
        out << (contract ? "PASS" : "FAIL") << ": n = " << d.n_modes << ", max residual "
            << fmt::format("{:.3e}", r.max_residual()) << '\n';
        if (matches) {
            out << "matches " << label << ": " << (*matches ? "yes" : "no") << '\n';
        }
    } else {
        Json j = svn_to_json(r);
        j["n"] = d.n_modes;
        j["status"] = contract ? "PASS" : "FAIL";
        if (matches) {
            j["compare"] = Json{{"gate", label}, {"equal_up_to_phase", *matches}};
        }
        emit(out, j);
    }
    return contract ? kExitOk : kExitVerificationFailure;
}

int cmd_parse(const std::string& path, const std::string& what, const Tolerances& tol, std::ostream& out) {
    const CircuitIR c = parse_circuit(read_file(path), tol);
    if (what == "canonical") {
        out << to_text(c);
    } else if (what == "matrix") {
        emit(out, operator_to_json(circuit_to_operator(c)));
    } else {
        emit(out, Json{{"n_qubits", c.n_qubits}, {"rotation", real_matrix_to_json(circuit_to_rotation(c, tol))}});
    }
    return kExitOk;
}

int cmd_classes(int k_max, bool text, const Tolerances& tol, std::ostream& out) {
    if (k_max < 2 || k_max > 12) {
        throw InputError("--k-max must lie in 2..12");
    }
    // Every C_phi with phi a 2^(k_max-2)-th root of unity, grouped by its level.
    const int roots = 1 << (k_max - 2);
    Json levels = Json::array();
    std::vector<std::vector<double>> even(static_cast<std::size_t>(k_max + 1));
    for (int j = 0; j < roots; ++j) {
        const double phi = 2.0 * std::numbers::pi * j / roots;
        const auto lvl = two_qubit_min_level(controlled_phase(phi), tol).level;
        for (int k = lvl.value_or(k_max + 1); k <= k_max; ++k) {
            even[static_cast<std::size_t>(k)].push_back(phi);
        }
    }
    for (int k = 2; k <= k_max; ++k) {
        std::vector<double> gen;
        for (double phi : even[static_cast<std::size_t>(k)]) {
            const double g = std::min(phi, 2.0 * std::numbers::pi - phi);
            if (std::none_of(gen.begin(), gen.end(), [&](double x) { return std::abs(x - g) < kDefaultAngleTol; })) {
                gen.push_back(g);
            }
        }
        std::sort(gen.begin(), gen.end());
        if (text) {
            out << "level " << k << ": " << even[static_cast<std::size_t>(k)].size() << " even classes, " << gen.size()
                << " generalised classes\n";
        }
        levels.push_back(Json{{"level", k}, {"even_phases", even[static_cast<std::size_t>(k)]}, {"generalised_phases", gen}});
    }
    if (!text) {
        emit(out, Json{{"levels", std::move(levels)}});
    }
    return kExitOk;
}

int cmd_selftest(std::uint64_t seed, bool text, std::ostream& out) {
    std::ostringstream lines;
    const auto results = run_acceptance(seed, text ? out : lines);
    const bool all = std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.pass; });
    if (!text) {
        Json arr = Json::array();
        for (const CriterionResult& r : results) {
            arr.push_back(Json{{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
        }
        emit(out, Json{{"seed", seed}, {"criteria", std::move(arr)}, {"pass", all}});
    }
    return all ? kExitOk : kExitVerificationFailure;
}

}  // namespace

Operator gate_from_spec(const std::string& spec, std::optional<int> n, int at) {
    std::string name = spec;
    std::vector<std::string> args;
    const auto open = spec.find('(');
    if (open != std::string::npos) {
        if (spec.back() != ')') {
            throw InputError("unbalanced parentheses in gate '" + spec + "'");
        }
        name = spec.substr(0, open);
        std::stringstream inner(spec.substr(open + 1, spec.size() - open - 2));
        std::string piece;
        while (std::getline(inner, piece, ',')) {
            args.push_back(piece);
        }
    }
    name = upper(name);
    if (n && (*n < 1 || *n > kMaxQubits)) {
        throw InputError("qubit count out of range");
    }

    Operator g = Operator::identity(1);
    if (name == "F") {
        std::string joined;
        for (const std::string& a : args) {
            joined += a + ",";
        }
        g = build_F(parse_pattern(joined));
    } else if (name == "CNZ" && args.size() == 1) {
        g = build_CnZ(parse_int_arg(args[0]));
    } else if (name == "CCZ" && args.empty()) {
        g = build_CnZ(3);
    } else if (name == "FSWAP" && args.size() == 2) {
        const int i = parse_int_arg(args[0]);
        const int j = parse_int_arg(args[1]);
        return fermionic_swap(i, j, n.value_or(std::max(i, j)));
    } else if (name == "MAJORANA" && args.size() == 1) {
        const int mu = parse_int_arg(args[0]);
        return jw_majorana(n.value_or((mu + 1) / 2), mu);
    } else if (name == "I" && args.empty()) {
        return Operator::identity(n.value_or(2));
    } else {
        std::vector<double> params;
        for (const std::string& a : args) {
            params.push_back(parse_angle(a));
        }
        g = named_gate(name, params);
    }
    if (!n || *n == g.n_qubits()) {
        return g;
    }
    if (g.n_qubits() == 1) {
        return embed_single_qubit(g, at, *n);
    }
    if (g.n_qubits() == 2) {
        return embed_two_qubit(g, at, *n);
    }
    throw InputError(fmt::format("gate '{}' acts on {} qubits, not {}", spec, g.n_qubits(), *n));
}

Tolerances tolerances_from_env() {
    Tolerances tol;
    if (const char* env = std::getenv("MGH_TOL")) {
        const std::string s(env);
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size() || !(v > 0.0) || !std::isfinite(v)) {
            throw InputError("MGH_TOL must be a positive number, got '" + s + "'");
        }
        tol.residual = v;
    }
    return tol;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Matchgate hierarchy toolkit", "mgh"};
    app.require_subcommand(1);

    std::string format = "json";
    int k_max = kDefaultKMax;
    std::uint64_t seed = 0;
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
    };

    GateOptions classify_gate;
    CLI::App* classify_cmd = app.add_subcommand("classify", "place a gate in the hierarchy");
    classify_gate.attach(classify_cmd);
    classify_cmd->add_option("--k-max", k_max, "highest level to test");
    add_format(classify_cmd);

    GateOptions teleport_gate;
    int trials = 5;
    int correction_k_max = kDefaultCorrectionKMax;
    bool full = false;
    CLI::App* teleport_cmd = app.add_subcommand("teleport", "verify gate teleportation through the magic state");
    teleport_gate.attach(teleport_cmd);
    teleport_cmd->add_option("--trials", trials, "random input states");
    teleport_cmd->add_option("--seed", seed, "random seed");
    teleport_cmd->add_option("--k-max", correction_k_max, "highest level tested for the corrections");
    teleport_cmd->add_flag("--full", full, "include the per-branch transcript of the first trial");
    add_format(teleport_cmd);

    std::string tuple_path;
    GateOptions svn_compare;
    CLI::App* svn_cmd = app.add_subcommand("svn", "reconstruct the unitary behind a Majorana tuple");
    svn_cmd->add_option("tuple,--tuple", tuple_path, "JSON tuple file")->required();
    svn_compare.attach(svn_cmd);
    add_format(svn_cmd);

    std::string circuit_path;
    std::string emit_what = "canonical";
    CLI::App* parse_cmd = app.add_subcommand("parse", "validate a circuit file");
    parse_cmd->add_option("circuit,--circuit", circuit_path, "circuit file")->required();
    parse_cmd->add_option("--emit", emit_what, "output artifact")
        ->check(CLI::IsMember({"canonical", "matrix", "rotation"}));

    int classes_k_max = 6;
    CLI::App* classes_cmd = app.add_subcommand("classes", "list two-qubit equivalence classes per level");
    classes_cmd->add_option("--k-max", classes_k_max, "highest level");
    add_format(classes_cmd);

    std::uint64_t selftest_seed = kAcceptanceSeed;
    CLI::App* selftest_cmd = app.add_subcommand("selftest", "run the acceptance corpus");
    selftest_cmd->add_option("--seed", selftest_seed, "random seed");
    std::string selftest_format = "text";
    selftest_cmd->add_option("--format", selftest_format, "output format")->check(CLI::IsMember({"json", "text"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    try {
        const Tolerances tol = tolerances_from_env();
        const bool text = format == "text";
        if (*classify_cmd) {
            return cmd_classify(classify_gate, k_max, text, tol, out);
        }
        if (*teleport_cmd) {
            return cmd_teleport(teleport_gate, trials, seed, correction_k_max, full, text, tol, out);
        }
        if (*svn_cmd) {
            return cmd_svn(tuple_path, svn_compare, text, tol, out);
        }
        if (*parse_cmd) {
            return cmd_parse(circuit_path, emit_what, tol, out);
        }
        if (*classes_cmd) {
            return cmd_classes(classes_k_max, text, tol, out);
        }
        return cmd_selftest(selftest_seed, selftest_format == "text", out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

}  // namespace mgh
