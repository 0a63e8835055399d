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

#include "mgh/circuits.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include <fmt/format.h>

#include "mgh/hierarchy.hpp"
#include "mgh/majorana.hpp"

namespace mgh {

namespace {

std::string upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char ch) { return std::toupper(ch); });
    return out;
}

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
    }
    return std::string(s.substr(b, e - b));
}

Operator mat2(Complex a, Complex b, Complex c, Complex d) {
    Matrix m(2, 2);
    m << a, b, c, d;
    return Operator(std::move(m));
}

void expect_params(std::string_view name, const std::vector<double>& params, std::size_t count) {
    if (params.size() != count) {
        throw std::invalid_argument(fmt::format("gate {} takes {} parameter(s), got {}", name, count, params.size()));
    }
}

bool is_two_qubit_name(const std::string& n) {
    return n == "FSWAP" || n == "GHH" || n == "SWAP" || n == "CZ" || n == "CPHASE";
}

bool is_single_qubit_name(const std::string& n) {
    return n == "I" || n == "X" || n == "Y" || n == "Z" || n == "H" || n == "P" || n == "RX" || n == "RY" ||
           n == "RZ";
}

std::string format_real(double x) { return fmt::format("{:.17g}", x); }

std::string format_params(const std::vector<double>& params) {
    if (params.empty()) {
        return {};
    }
    std::string out = "(";
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i != 0) {
            out += ",";
        }
        out += format_real(params[i]);
    }
    return out + ")";
}

std::string format_block(const BlockSpec& b) {
    std::string prefix;
    if (b.prefactor == Complex{-1.0, 0.0}) {
        prefix = "-";
    } else if (b.prefactor == kI) {
        prefix = "i*";
    } else if (b.prefactor == -kI) {
        prefix = "-i*";
    }
    return prefix + b.name + format_params(b.params);
}

// Determinant of the 2x2 blocks of an even two-qubit operator.
std::pair<Complex, Complex> even_block_dets(const Operator& g) {
    const Complex da = g(0, 0) * g(3, 3) - g(0, 3) * g(3, 0);
    const Complex db = g(1, 1) * g(2, 2) - g(1, 2) * g(2, 1);
    return {da, db};
}

std::pair<Complex, Complex> odd_block_dets(const Operator& g) {
    const Complex da = g(0, 1) * g(3, 2) - g(0, 2) * g(3, 1);
    const Complex db = g(1, 0) * g(2, 3) - g(1, 3) * g(2, 0);
    return {da, db};
}

// A lexical unit of a gate line with its 1-based column.
struct Word {
    std::string text;
    int column;
};

// Splits on whitespace, keeping parenthesised groups together.
std::vector<Word> split_words(std::string_view s, int base_column, int line_no) {
    std::vector<Word> out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        int depth = 0;
        while (i < s.size() && (depth > 0 || !std::isspace(static_cast<unsigned char>(s[i])))) {
            if (s[i] == '(') {
                ++depth;
            } else if (s[i] == ')') {
                if (--depth < 0) {
                    throw ParseError(line_no, base_column + static_cast<int>(i), "unbalanced ')'");
                }
            }
            ++i;
        }
        if (depth != 0) {
            throw ParseError(line_no, base_column + static_cast<int>(start), "unbalanced '('");
        }
        out.push_back({std::string(s.substr(start, i - start)), base_column + static_cast<int>(start)});
    }
    return out;
}

// NAME or NAME(p1,p2,...)
std::pair<std::string, std::vector<double>> split_call(const Word& w, int line_no) {
    const std::size_t open = w.text.find('(');
    if (open == std::string::npos) {
        return {upper(w.text), {}};
    }
    if (w.text.back() != ')') {
        throw ParseError(line_no, w.column + static_cast<int>(open), "expected ')' at end of parameter list");
    }
    std::vector<double> params;
    const std::string inner = w.text.substr(open + 1, w.text.size() - open - 2);
    std::size_t pos = 0;
    while (pos <= inner.size()) {
        std::size_t comma = inner.find(',', pos);
        if (comma == std::string::npos) {
            comma = inner.size();
        }
        const std::string tok = trim(std::string_view(inner).substr(pos, comma - pos));
        try {
            params.push_back(parse_angle(tok));
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, w.column + static_cast<int>(open + 1 + pos), e.what());
        }
        pos = comma + 1;
    }
    return {upper(w.text.substr(0, open)), params};
}

BlockSpec parse_block(const Word& w, int line_no) {
    BlockSpec b;
    std::string_view t = w.text;
    bool negative = false;
    bool imaginary = false;
    if (!t.empty() && t.front() == '-') {
        negative = true;
        t.remove_prefix(1);
    }
    if (t.size() >= 2 && (t[0] == 'i' || t[0] == 'I') && t[1] == '*') {
        imaginary = true;
        t.remove_prefix(2);
    }
    b.prefactor = imaginary ? kI : Complex{1.0, 0.0};
    if (negative) {
        b.prefactor = -b.prefactor;
    }
    const int offset = static_cast<int>(w.text.size() - t.size());
    auto [name, params] = split_call(Word{std::string(t), w.column + offset}, line_no);
    if (!is_single_qubit_name(name)) {
        throw ParseError(line_no, w.column + offset, fmt::format("unknown block '{}'", name));
    }
    b.name = name;
    b.params = std::move(params);
    try {
        (void)block_operator(b);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, w.column, e.what());
    }
    return b;
}

int parse_int(std::string_view tok, int line_no, int column, const char* what) {
    int v = 0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size()) {
        throw ParseError(line_no, column, fmt::format("expected integer {}, got '{}'", what, tok));
    }
    return v;
}

// Rotation of a 1- or 2-qubit gate embedded at wire pos in an n-qubit register.
RealMatrix embedded_rotation(const Operator& local, int pos, int n, const Tolerances& tol) {
    const auto r_local = extract_rotation(local, tol);
    if (!r_local) {
        throw std::invalid_argument("gate does not act linearly on Majoranas");
    }
    const Parity p = parity_of(local, tol);
    const int width = 2 * local.n_qubits();
    const int first = 2 * (pos - 1);
    RealMatrix r = RealMatrix::Identity(2 * n, 2 * n);
    r.block(first, first, width, width) = *r_local;
    if (p == Parity::Odd) {
        // c_mu past the window carries Z on the gate's wires.
        for (int mu = first + width; mu < 2 * n; ++mu) {
            r(mu, mu) = -1.0;
        }
    }
    return r;
}

}  // namespace

int GateApp::arity() const {
    if (kind != GateKind::Named) {
        return 2;
    }
    return is_two_qubit_name(name) ? 2 : 1;
}

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error(fmt::format("line {}, column {}: {}", line, column, message)),
      line_(line),
      column_(column) {}

double parse_angle(std::string_view token) {
    std::string t = trim(token);
    if (t.empty()) {
        throw std::invalid_argument("empty angle");
    }
    std::string lower = t;
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char ch) { return std::tolower(ch); });
    const std::size_t pi_at = lower.find("pi");
    if (pi_at == std::string::npos) {
        double v = 0.0;
        const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
        if (res.ec != std::errc{} || res.ptr != t.data() + t.size()) {
            throw std::invalid_argument(fmt::format("bad angle '{}'", t));
        }
        return v;
    }
    // [-][K*]pi[/M]
    std::string_view head = std::string_view(lower).substr(0, pi_at);
    std::string_view tail = std::string_view(lower).substr(pi_at + 2);
    double sign = 1.0;
    if (!head.empty() && head.front() == '-') {
        sign = -1.0;
        head.remove_prefix(1);
    }
    double numerator = 1.0;
    if (!head.empty()) {
        if (head.back() != '*') {
            throw std::invalid_argument(fmt::format("bad angle '{}'", t));
        }
        head.remove_suffix(1);
        const auto res = std::from_chars(head.data(), head.data() + head.size(), numerator);
        if (res.ec != std::errc{} || res.ptr != head.data() + head.size()) {
            throw std::invalid_argument(fmt::format("bad angle '{}'", t));
        }
    }
    double denominator = 1.0;
    if (!tail.empty()) {
        if (tail.front() != '/') {
            throw std::invalid_argument(fmt::format("bad angle '{}'", t));
        }
        tail.remove_prefix(1);
        const auto res = std::from_chars(tail.data(), tail.data() + tail.size(), denominator);
        if (res.ec != std::errc{} || res.ptr != tail.data() + tail.size() || denominator == 0.0) {
            throw std::invalid_argument(fmt::format("bad angle '{}'", t));
        }
    }
    return sign * numerator * std::numbers::pi / denominator;
}

Operator named_gate(std::string_view name_in, const std::vector<double>& params) {
    const std::string name = upper(name_in);
    const double r = std::numbers::sqrt2 / 2.0;
    if (name == "I") {
        expect_params(name, params, 0);
        return Operator::identity(1);
    }
    if (name == "X") {
        expect_params(name, params, 0);
        return mat2(0, 1, 1, 0);
    }
    if (name == "Y") {
        expect_params(name, params, 0);
        return mat2(0, -kI, kI, 0);
    }
    if (name == "Z") {
        expect_params(name, params, 0);
        return mat2(1, 0, 0, -1);
    }
    if (name == "H") {
        expect_params(name, params, 0);
        return mat2(r, r, r, -r);
    }
    if (name == "P") {
        expect_params(name, params, 1);
        return mat2(1, 0, 0, std::exp(kI * params[0]));
    }
    if (name == "RX" || name == "RY" || name == "RZ") {
        expect_params(name, params, 1);
        const double c = std::cos(params[0] / 2.0);
        const double s = std::sin(params[0] / 2.0);
        if (name == "RX") {
            return mat2(c, -kI * s, -kI * s, c);
        }
        if (name == "RY") {
            return mat2(c, -s, s, c);
        }
        return mat2(std::exp(-kI * (params[0] / 2.0)), 0, 0, std::exp(kI * (params[0] / 2.0)));
    }
    if (name == "FSWAP") {
        expect_params(name, params, 0);
        return build_G(named_gate("Z"), named_gate("X"));
    }
    if (name == "GHH") {
        expect_params(name, params, 0);
        return build_G(named_gate("H"), named_gate("H"));
    }
    if (name == "SWAP") {
        expect_params(name, params, 0);
        return build_G(named_gate("I"), named_gate("X"));
    }
    if (name == "CZ") {
        expect_params(name, params, 0);
        return build_G(named_gate("Z"), named_gate("I"));
    }
    if (name == "CPHASE") {
        expect_params(name, params, 1);
        return controlled_phase(params[0]);
    }
    throw std::invalid_argument(fmt::format("unknown gate '{}'", name_in));
}

Operator block_operator(const BlockSpec& b) {
    if (!is_single_qubit_name(b.name)) {
        throw std::invalid_argument(fmt::format("unknown block '{}'", b.name));
    }
    return b.prefactor * named_gate(b.name, b.params);
}

Operator controlled_phase(double phi) { return build_G(named_gate("P", {phi}), named_gate("I")); }

Operator build_G(const Operator& a, const Operator& b, const Tolerances& tol) {
    if (a.n_qubits() != 1 || b.n_qubits() != 1) {
        throw std::invalid_argument("build_G: blocks must be 2x2");
    }
    if (!a.is_unitary(tol.unitary) || !b.is_unitary(tol.unitary)) {
        throw std::invalid_argument("build_G: non-unitary block");
    }
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = a(0, 0);
    m(0, 3) = a(0, 1);
    m(3, 0) = a(1, 0);
    m(3, 3) = a(1, 1);
    m(1, 1) = b(0, 0);
    m(1, 2) = b(0, 1);
    m(2, 1) = b(1, 0);
    m(2, 2) = b(1, 1);
    return Operator(std::move(m));
}

Operator build_J(const Operator& a, const Operator& b, const Tolerances& tol) {
    if (a.n_qubits() != 1 || b.n_qubits() != 1) {
        throw std::invalid_argument("build_J: blocks must be 2x2");
    }
    if (!a.is_unitary(tol.unitary) || !b.is_unitary(tol.unitary)) {
        throw std::invalid_argument("build_J: non-unitary block");
    }
    Matrix m = Matrix::Zero(4, 4);
    m(0, 1) = a(0, 0);
    m(0, 2) = a(0, 1);
    m(3, 1) = a(1, 0);
    m(3, 2) = a(1, 1);
    m(1, 0) = b(0, 0);
    m(1, 3) = b(0, 1);
    m(2, 0) = b(1, 0);
    m(2, 3) = b(1, 1);
    return Operator(std::move(m));
}

Operator gate_operator(const GateApp& g) {
    switch (g.kind) {
        case GateKind::G:
            return build_G(block_operator(*g.block_a), block_operator(*g.block_b));
        case GateKind::J:
            return build_J(block_operator(*g.block_a), block_operator(*g.block_b));
        case GateKind::Named:
            return named_gate(g.name, g.params);
    }
    throw std::logic_error("unreachable gate kind");
}

CircuitIR parse_circuit(std::string_view text, const Tolerances& tol) {
    CircuitIR ir;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    bool have_header = false;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        std::vector<Word> words = split_words(line, 1, line_no);
        if (words.empty()) {
            continue;
        }
        const std::string head = upper(words[0].text);
        if (!have_header) {
            if (head != "QUBITS" || words.size() != 2) {
                throw ParseError(line_no, words[0].column, "expected 'qubits N' as the first statement");
            }
            ir.n_qubits = parse_int(words[1].text, line_no, words[1].column, "qubit count");
            if (ir.n_qubits < 1 || ir.n_qubits > kMaxQubits) {
                throw ParseError(line_no, words[1].column, fmt::format("qubit count {} out of range", ir.n_qubits));
            }
            have_header = true;
            continue;
        }
        if (head == "QUBITS") {
            throw ParseError(line_no, words[0].column, "duplicate 'qubits' statement");
        }
        if (head == "ALLOW") {
            if (words.size() != 2 || upper(words[1].text) != "FREEFORM") {
                throw ParseError(line_no, words[0].column, "expected 'allow freeform'");
            }
            ir.allow_freeform = true;
            continue;
        }

        // <gate words> @ k[,k+1]
        auto at = std::find_if(words.begin(), words.end(), [](const Word& w) { return w.text.starts_with('@'); });
        if (at == words.end()) {
            throw ParseError(line_no, static_cast<int>(line.size()) + 1, "expected '@ <wire>'");
        }
        std::string where = at->text.substr(1);
        int where_col = at->column + 1;
        for (auto it = std::next(at); it != words.end(); ++it) {
            if (where.empty()) {
                where_col = it->column;
            }
            where += it->text;
        }
        if (where.empty()) {
            throw ParseError(line_no, at->column, "missing wire index after '@'");
        }
        std::vector<Word> gate_words(words.begin(), at);
        if (gate_words.empty()) {
            throw ParseError(line_no, at->column, "missing gate before '@'");
        }

        GateApp g;
        const std::string kind = upper(gate_words[0].text);
        if (kind == "G" || kind == "J") {
            if (gate_words.size() != 3) {
                throw ParseError(line_no, gate_words[0].column, fmt::format("{} takes exactly two blocks", kind));
            }
            g.kind = (kind == "G") ? GateKind::G : GateKind::J;
            g.name = kind;
            g.block_a = parse_block(gate_words[1], line_no);
            g.block_b = parse_block(gate_words[2], line_no);
        } else {
            if (gate_words.size() != 1) {
                throw ParseError(line_no, gate_words[1].column, "unexpected token");
            }
            auto [name, params] = split_call(gate_words[0], line_no);
            if (!is_two_qubit_name(name) && !is_single_qubit_name(name)) {
                throw ParseError(line_no, gate_words[0].column, fmt::format("unknown gate '{}'", name));
            }
            g.kind = GateKind::Named;
            g.name = name;
            g.params = std::move(params);
        }

        // Wire specification.
        if (const std::size_t comma = where.find(','); comma != std::string::npos) {
            const int a = parse_int(std::string_view(where).substr(0, comma), line_no, where_col, "wire");
            const int b = parse_int(std::string_view(where).substr(comma + 1), line_no, where_col, "wire");
            if (g.arity() != 2) {
                throw ParseError(line_no, where_col, "single-qubit gate given two wires");
            }
            if (b != a + 1) {
                throw ParseError(line_no, where_col,
                                 fmt::format("gate on wires [{},{}] is not nearest-neighbour", a, b));
            }
            g.pos = a;
        } else {
            g.pos = parse_int(where, line_no, where_col, "wire");
        }
        const int last = ir.n_qubits - g.arity() + 1;
        if (g.pos < 1 || g.pos > last) {
            throw ParseError(line_no, where_col,
                             fmt::format("wire {} out of range for a {}-qubit gate on {} qubits", g.pos, g.arity(),
                                         ir.n_qubits));
        }

        Operator local = Operator::identity(1);
        try {
            local = gate_operator(g);
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, gate_words[0].column, e.what());
        }
        bool matchgate = false;
        std::string why;
        if (g.arity() == 2) {
            const Parity p = parity_of(local, tol);
            if (p == Parity::None) {
                why = "gate is not fermionic";
            } else {
                const auto [da, db] = (p == Parity::Even) ? even_block_dets(local) : odd_block_dets(local);
                matchgate = std::abs(da - db) < tol.residual;
                if (!matchgate) {
                    why = fmt::format("determinant mismatch: |A| = {:.6g}{:+.6g}i, |B| = {:.6g}{:+.6g}i", da.real(),
                                      da.imag(), db.real(), db.imag());
                }
            }
        } else {
            matchgate = parity_of(local, tol) != Parity::None;
            if (!matchgate) {
                why = fmt::format("single-qubit gate {} is not fermionic", g.name);
            }
        }
        if (!matchgate) {
            if (!ir.allow_freeform) {
                throw ParseError(line_no, gate_words[0].column, why + " (use 'allow freeform')");
            }
            g.freeform = true;
        }
        ir.gates.push_back(std::move(g));
    }
    if (!have_header) {
        throw ParseError(line_no + 1, 1, "missing 'qubits N' statement");
    }
    return ir;
}

std::string to_text(const CircuitIR& c) {
    std::string out = fmt::format("qubits {}\n", c.n_qubits);
    if (c.allow_freeform) {
        out += "allow freeform\n";
    }
    for (const GateApp& g : c.gates) {
        switch (g.kind) {
            case GateKind::G:
            case GateKind::J:
                out += fmt::format("{} {} {} @ {}\n", g.kind == GateKind::G ? "G" : "J", format_block(*g.block_a),
                                   format_block(*g.block_b), g.pos);
                break;
            case GateKind::Named:
                out += fmt::format("{}{} @ {}\n", g.name, format_params(g.params), g.pos);
                break;
        }
    }
    return out;
}

Operator circuit_to_operator(const CircuitIR& c) {
    Operator u = Operator::identity(c.n_qubits);
    for (const GateApp& g : c.gates) {
        const Operator local = gate_operator(g);
        const Operator full = (g.arity() == 2) ? embed_two_qubit(local, g.pos, c.n_qubits)
                                               : embed_single_qubit(local, g.pos, c.n_qubits);
        u = full * u;
    }
    return u;
}

RealMatrix circuit_to_rotation(const CircuitIR& c, const Tolerances& tol) {
    RealMatrix r = RealMatrix::Identity(2 * c.n_qubits, 2 * c.n_qubits);
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const GateApp& g = c.gates[i];
        if (g.freeform) {
            throw std::invalid_argument(fmt::format("gate {} ({}) is free-form, circuit is not Gaussian", i + 1, g.name));
        }
        r = r * embedded_rotation(gate_operator(g), g.pos, c.n_qubits, tol);
    }
    return r;
}

CircuitIR build_Bn(int n) {
    if (n < 2) {
        throw std::invalid_argument("build_Bn: n must be at least 2");
    }
    CircuitIR c;
    c.n_qubits = 2 * n;
    for (int k = 1; k <= n; ++k) {
        GateApp g;
        g.kind = GateKind::G;
        g.name = "G";
        g.block_a = BlockSpec{"H", {}, {1.0, 0.0}};
        g.block_b = BlockSpec{"H", {}, {1.0, 0.0}};
        g.pos = 2 * k - 1;
        c.gates.push_back(g);
    }
    // Widest layer first: fSWAP[2,3], [4,5], ..., [2n-2,2n-1]; each later layer
    // shifts in by one wire on both ends and ends with the single fSWAP[n,n+1].
    for (int layer = 0; layer < n - 1; ++layer) {
        for (int s = 2 + layer; s <= 2 * n - 2 - layer; s += 2) {
            GateApp g;
            g.kind = GateKind::Named;
            g.name = "FSWAP";
            g.pos = s;
            c.gates.push_back(g);
        }
    }
    return c;
}

Pattern parse_pattern(std::string_view text) {
    Pattern y;
    for (char ch : text) {
        if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
            continue;
        }
        if (ch == '0') {
            y.push_back(Trit::Zero);
        } else if (ch == '1') {
            y.push_back(Trit::One);
        } else if (ch == '*') {
            y.push_back(Trit::Star);
        } else {
            throw std::invalid_argument(fmt::format("bad pattern character '{}'", ch));
        }
    }
    if (y.empty()) {
        throw std::invalid_argument("empty pattern");
    }
    return y;
}

std::string pattern_to_string(const Pattern& y) {
    std::string out;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (i != 0) {
            out += ",";
        }
        out += (y[i] == Trit::Zero) ? "0" : (y[i] == Trit::One) ? "1" : "*";
    }
    return out;
}

int pattern_length(const Pattern& y) {
    return static_cast<int>(std::count_if(y.begin(), y.end(), [](Trit t) { return t != Trit::Star; }));
}

bool pattern_matches(const Pattern& y, std::uint64_t z, int n) {
    for (int k = 1; k <= n; ++k) {
        const bool bit = (z >> (n - k)) & 1U;
        const Trit t = y[static_cast<std::size_t>(k - 1)];
        if ((t == Trit::Zero && bit) || (t == Trit::One && !bit)) {
            return false;
        }
    }
    return true;
}

Operator build_F(const Pattern& y) {
    const int n = static_cast<int>(y.size());
    Operator id = Operator::identity(n);
    Matrix m = id.matrix();
    for (Eigen::Index z = 0; z < id.dim(); ++z) {
        if (pattern_matches(y, static_cast<std::uint64_t>(z), n)) {
            m(z, z) = -1.0;
        }
    }
    return Operator(std::move(m));
}

Operator build_CnZ(int n) { return build_F(Pattern(static_cast<std::size_t>(n), Trit::One)); }

Operator fermionic_swap(int wire_i, int wire_j, int n) {
    if (wire_i < 1 || wire_j < 1 || wire_i > n || wire_j > n || wire_i == wire_j) {
        throw std::out_of_range("fermionic_swap: bad wire pair");
    }
    Operator id = Operator::identity(n);
    Matrix m = Matrix::Zero(id.dim(), id.dim());
    const std::uint64_t bi = std::uint64_t{1} << (n - wire_i);
    const std::uint64_t bj = std::uint64_t{1} << (n - wire_j);
    for (std::uint64_t z = 0; z < static_cast<std::uint64_t>(id.dim()); ++z) {
        const bool xi = z & bi;
        const bool xj = z & bj;
        std::uint64_t out = z & ~bi & ~bj;
        if (xi) {
            out |= bj;
        }
        if (xj) {
            out |= bi;
        }
        m(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(z)) = (xi && xj) ? -1.0 : 1.0;
    }
    return Operator(std::move(m));
}

}  // namespace mgh
