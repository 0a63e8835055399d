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

// JSON encodings. Matrices are {"n": n, "re": [[...]], "im": [[...]]}, row-major.

#pragma once

#include <json.hpp>

#include "mgh/hierarchy.hpp"
#include "mgh/linalg.hpp"
#include "mgh/majorana.hpp"
#include "mgh/svn.hpp"
#include "mgh/teleport.hpp"

namespace mgh {

using Json = nlohmann::json;

/// Malformed JSON document or one that does not describe the expected object.
class JsonFormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Json operator_to_json(const Operator& u);
Operator operator_from_json(const Json& j);

Json state_to_json(const StateVector& psi);
Json real_matrix_to_json(const RealMatrix& r);

/// {"n": n, "terms": [{"mask": [mu, ...], "re": x, "im": y}, ...]}
Json poly_to_json(const MajoranaPoly& p);

/// Accepts {"n": n, "ops": [matrix, ...]} or a bare array of matrices.
CarSet carset_from_json(const Json& j);
Json carset_to_json(const CarSet& s);

Json report_to_json(const HierarchyReport& r);
Json summary_to_json(const ProtocolSummary& s);
/// Per-branch amplitudes and matrices are included only when full is set.
Json transcript_to_json(const TeleportTranscript& t, bool full);
Json svn_to_json(const SvnResult& r);

Json complex_to_json(Complex z);

}  // namespace mgh
