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

#include "mgh/json_io.hpp"

#include <string>

namespace mgh {

namespace {

Json bits_string(Outcome z, int width) {
    std::string s;
    for (int i = width - 1; i >= 0; --i) {
        s.push_back(((z >> i) & 1U) ? '1' : '0');
    }
    return s;
}

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw JsonFormatError(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

RealMatrix read_grid(const Json& j, const char* key, Eigen::Index dim) {
    const Json& g = require(j, key);
    if (!g.is_array() || static_cast<Eigen::Index>(g.size()) != dim) {
        throw JsonFormatError(std::string("'") + key + "' must have " + std::to_string(dim) + " rows");
    }
    RealMatrix out(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        const Json& row = g[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
            throw JsonFormatError(std::string("'") + key + "' row " + std::to_string(r) + " must have " +
                                  std::to_string(dim) + " entries");
        }
        for (Eigen::Index c = 0; c < dim; ++c) {
            const Json& v = row[static_cast<std::size_t>(c)];
            if (!v.is_number()) {
                throw JsonFormatError(std::string("'") + key + "' entries must be numbers");
            }
            out(r, c) = v.get<double>();
        }
    }
    return out;
}

}  // namespace

Json complex_to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json operator_to_json(const Operator& u) {
    Json re = Json::array();
    Json im = Json::array();
    for (Eigen::Index r = 0; r < u.dim(); ++r) {
        Json rr = Json::array();
        Json ii = Json::array();
        for (Eigen::Index c = 0; c < u.dim(); ++c) {
            rr.push_back(u(r, c).real());
            ii.push_back(u(r, c).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ii));
    }
    return Json{{"n", u.n_qubits()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

Operator operator_from_json(const Json& j) {
    const Json& re_rows = require(j, "re");
    if (!re_rows.is_array() || re_rows.empty()) {
        throw JsonFormatError("'re' must be a non-empty array of rows");
    }
    const auto dim = static_cast<Eigen::Index>(re_rows.size());
    int n = 0;
    if (!is_power_of_two_dim(dim, &n) || n < 1) {
        throw JsonFormatError("matrix dimension " + std::to_string(dim) + " is not 2^n with n >= 1");
    }
    if (j.contains("n") && (!j.at("n").is_number_integer() || j.at("n").get<int>() != n)) {
        throw JsonFormatError("'n' does not match the matrix dimension");
    }
    const RealMatrix re = read_grid(j, "re", dim);
    const RealMatrix im = j.contains("im") ? read_grid(j, "im", dim) : RealMatrix::Zero(dim, dim);
    Matrix m(dim, dim);
    m.real() = re;
    m.imag() = im;
    return Operator(std::move(m));
}

Json state_to_json(const StateVector& psi) {
    Json re = Json::array();
    Json im = Json::array();
    for (Eigen::Index i = 0; i < psi.dim(); ++i) {
        re.push_back(psi[i].real());
        im.push_back(psi[i].imag());
    }
    return Json{{"n", psi.n_qubits()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

Json real_matrix_to_json(const RealMatrix& r) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < r.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < r.cols(); ++k) {
            row.push_back(r(i, k));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json poly_to_json(const MajoranaPoly& p) {
    Json terms = Json::array();
    for (const auto& [mask, coeff] : p.terms) {
        terms.push_back(Json{{"mask", indices_from_mask(mask)}, {"re", coeff.real()}, {"im", coeff.imag()}});
    }
    return Json{{"n", p.n_modes}, {"terms", std::move(terms)}};
}

CarSet carset_from_json(const Json& j) {
    const Json* ops = &j;
    if (j.is_object()) {
        ops = &require(j, "ops");
    }
    if (!ops->is_array() || ops->empty()) {
        throw JsonFormatError("tuple must be a non-empty array of matrices");
    }
    CarSet s;
    for (const Json& m : *ops) {
        s.ops.push_back(operator_from_json(m));
    }
    s.n_modes = s.ops.front().n_qubits();
    for (const Operator& op : s.ops) {
        if (op.n_qubits() != s.n_modes) {
            throw JsonFormatError("tuple mixes matrices of different sizes");
        }
    }
    if (static_cast<int>(s.ops.size()) != 2 * s.n_modes) {
        throw JsonFormatError("tuple on " + std::to_string(s.n_modes) + " qubits needs " +
                              std::to_string(2 * s.n_modes) + " matrices, got " + std::to_string(s.ops.size()));
    }
    if (j.is_object() && j.contains("n") && j.at("n") != s.n_modes) {
        throw JsonFormatError("'n' does not match the tuple matrices");
    }
    return s;
}

Json carset_to_json(const CarSet& s) {
    Json ops = Json::array();
    for (const Operator& op : s.ops) {
        ops.push_back(operator_to_json(op));
    }
    return Json{{"n", s.n_modes}, {"ops", std::move(ops)}};
}

Json report_to_json(const HierarchyReport& r) {
    Json j{{"n_qubits", r.n_qubits},
           {"parity", std::string(to_string(r.parity))},
           {"is_gaussian", r.is_gaussian},
           {"k_max", r.k_max},
           {"worst_residual", r.worst_residual}};
    j["rotation"] = r.rotation ? real_matrix_to_json(*r.rotation) : Json(nullptr);
    j["rotation_det"] = r.rotation_det ? Json(*r.rotation_det) : Json(nullptr);
    j["min_level"] = r.min_level ? Json(*r.min_level) : Json(nullptr);
    if (r.two_qubit) {
        const TwoQubitSummary& t = *r.two_qubit;
        j["two_qubit"] = Json{{"det_a", complex_to_json(t.det_a)},
                              {"det_b", complex_to_json(t.det_b)},
                              {"phi", t.phi},
                              {"level_closed_form", t.level_closed_form ? Json(*t.level_closed_form) : Json(nullptr)},
                              {"class_representative", Json{{"gate", "CPHASE"}, {"phi", t.class_representative_phi}}}};
    } else {
        j["two_qubit"] = nullptr;
    }
    return j;
}

Json summary_to_json(const ProtocolSummary& s) {
    Json levels = Json::object();
    for (const auto& [level, count] : s.correction_levels) {
        levels[std::to_string(level)] = count;
    }
    return Json{{"n", s.n},
                {"trials", s.trials},
                {"branches", s.branches_per_trial},
                {"max_residual", s.max_residual},
                {"max_probability_deviation", s.max_probability_deviation},
                {"corrections",
                 Json{{"distinct", s.distinct_corrections},
                      {"levels", std::move(levels)},
                      {"unresolved", s.corrections_unresolved},
                      {"k_max", s.correction_k_max}}},
                {"pass", s.pass}};
}

Json transcript_to_json(const TeleportTranscript& t, bool full) {
    Json branches = Json::array();
    for (const Branch& b : t.branches) {
        Json jb{{"z", bits_string(b.z, 2 * t.n)},
                {"probability", b.probability},
                {"residual_vs_target", b.residual_vs_target},
                {"phase", complex_to_json(b.phase)}};
        if (full) {
            jb["raw_state"] = state_to_json(b.raw_state);
            jb["correction"] = operator_to_json(b.correction);
            jb["corrected"] = state_to_json(b.corrected);
        }
        branches.push_back(std::move(jb));
    }
    Json j{{"n", t.n},
           {"max_residual", t.max_residual()},
           {"max_probability_deviation", t.max_probability_deviation()},
           {"branches", std::move(branches)}};
    if (full) {
        j["input"] = state_to_json(t.input);
        j["gate"] = operator_to_json(t.gate);
    }
    return j;
}

Json svn_to_json(const SvnResult& r) {
    return Json{{"u", operator_to_json(r.u)},
                {"residuals", r.residuals},
                {"max_residual", r.max_residual()},
                {"phase_fixed", r.phase_fixed},
                {"probe", r.probe}};
}

}  // namespace mgh
