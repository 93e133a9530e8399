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

#include "fgc/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace fgc {

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) raise(Errc::ParseError, what + " must be a non-empty array of rows");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array()) raise(Errc::ParseError, what + " rows must be arrays");
  const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<Eigen::Index>(j[i].size()) != cols) {
      raise(Errc::ParseError, what + " row " + std::to_string(i) + " has inconsistent length");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      if (!j[i][c].is_number()) {
        raise(Errc::ParseError, what + " entry (" + std::to_string(i) + "," + std::to_string(c) +
                                    ") is not a number");
      }
      m(i, c) = j[i][c].get<double>();
    }
  }
  return m;
}

Json cm_to_json(const CovarianceMatrix& gamma) {
  return Json{{"modes", gamma.modes}, {"matrix", matrix_to_json(gamma.mat)}};
}

CovarianceMatrix cm_from_json(const Json& j) {
  if (!j.contains("modes") || !j.contains("matrix")) {
    raise(Errc::ParseError, "covariance matrix needs \"modes\" and \"matrix\"");
  }
  const int modes = j["modes"].get<int>();
  Matrix m = matrix_from_json(j["matrix"], "matrix");
  if (m.rows() != 2 * modes || m.cols() != 2 * modes) {
    raise(Errc::ParseError, "matrix must be 2*modes x 2*modes");
  }
  return make_cm(m);
}

Json channel_to_json(const GaussianChannel& t, const std::string& label) {
  Json j{{"n_in", t.n_in},
         {"n_out", t.n_out},
         {"A", matrix_to_json(t.a)},
         {"B", matrix_to_json(t.b)}};
  if (!label.empty()) j["label"] = label;
  return j;
}

GaussianChannel channel_from_json(const Json& j) {
  for (const char* key : {"n_in", "n_out", "A", "B"}) {
    if (!j.contains(key)) raise(Errc::ParseError, std::string("channel needs \"") + key + "\"");
  }
  const int n_in = j["n_in"].get<int>();
  const int n_out = j["n_out"].get<int>();
  Matrix a = matrix_from_json(j["A"], "A");
  Matrix b = matrix_from_json(j["B"], "B");
  if (a.rows() != 2 * n_out || a.cols() != 2 * n_in) {
    raise(Errc::ParseError, "A must be 2*n_out x 2*n_in");
  }
  if (b.rows() != 2 * n_out || b.cols() != 2 * n_out) {
    raise(Errc::ParseError, "B must be 2*n_out x 2*n_out");
  }
  return make_channel(a, b);
}

Json report_to_json(const ClassificationReport& report) {
  Json blocks = Json::array();
  for (const auto& [value, mult] : report.blocks) blocks.push_back(Json::array({value, mult}));
  Json j{{"verdict", verdict_name(report.verdict)},
         {"blocks", blocks},
         {"reason", report.reason}};
  if (report.witness.has_value() && std::isfinite(report.witness->cp_min_eig)) {
    j["cp_min_eig"] = report.witness->cp_min_eig;
  } else {
    j["cp_min_eig"] = nullptr;
  }
  return j;
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // nlohmann reports the byte offset; convert to line/column for context.
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    raise(Errc::ParseError, source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                                ": " + e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::ParseError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str(), path);
}

}  // namespace fgc
