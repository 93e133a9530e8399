// Copyright 2026 The fgc Authors
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

#ifndef FGC_JSON_IO_HPP_
#define FGC_JSON_IO_HPP_

#include <string>

#include <json.hpp>

#include "fgc/channels.hpp"
#include "fgc/degradability.hpp"

namespace fgc {

using Json = nlohmann::json;

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const std::string& what);

// {"modes": n, "matrix": [[...]]}, row-major 2n x 2n.
Json cm_to_json(const CovarianceMatrix& gamma);
CovarianceMatrix cm_from_json(const Json& j);

// {"n_in": n, "n_out": m, "A": [[...]], "B": [[...]], "label"?: "..."}.
Json channel_to_json(const GaussianChannel& t, const std::string& label = "");
GaussianChannel channel_from_json(const Json& j);

// {"verdict": ..., "blocks": [[d, mult], ...], "cp_min_eig": ..., "reason": ...}.
Json report_to_json(const ClassificationReport& report);

// Parses a JSON document, rephrasing syntax errors with their position.
Json parse_json(const std::string& text, const std::string& source);
Json load_json_file(const std::string& path);

}  // namespace fgc

#endif  // FGC_JSON_IO_HPP_
