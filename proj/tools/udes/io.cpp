// Copyright 2026 The udes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace udes::cli {

namespace {

Complex parse_complex(const json& z, const std::string& where) {
  if (!z.is_array() || z.size() != 2 || !z[0].is_number() ||
      !z[1].is_number()) {
    throw ParseError(where + ": expected [re, im]");
  }
  return {z[0].get<double>(), z[1].get<double>()};
}

Mat parse_rows(const json& rows, std::size_t dim, const std::string& where) {
  if (!rows.is_array() || rows.size() != dim) {
    throw ParseError(where + ": expected " + std::to_string(dim) + " rows");
  }
  Mat m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::string row_where = where + "[" + std::to_string(i) + "]";
    if (!rows[i].is_array() || rows[i].size() != dim) {
      throw ParseError(row_where + ": expected " + std::to_string(dim) +
                       " entries");
    }
    for (std::size_t j = 0; j < dim; ++j) {
      m(i, j) = parse_complex(rows[i][j],
                              row_where + "[" + std::to_string(j) + "]");
    }
  }
  return m;
}

}  // namespace

LoadedSet parse_unitary_set(const json& doc, bool strict, double tol) {
  if (!doc.is_object()) throw ParseError("top level must be an object");
  std::vector<std::string> warnings;
  for (const auto& [key, value] : doc.items()) {
    if (key == "dim" || key == "unitaries" || key == "labels") continue;
    const std::string msg = "unknown field '" + key + "'";
    if (strict) throw ParseError(msg);
    warnings.push_back(msg);
  }
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() ||
      doc["dim"].get<long long>() < 1 ||
      doc["dim"].get<long long>() > static_cast<long long>(kMaxDim)) {
    throw ParseError("'dim' must be an integer in 1.." +
                     std::to_string(kMaxDim));
  }
  const auto dim = doc["dim"].get<std::size_t>();
  if (!doc.contains("unitaries") || !doc["unitaries"].is_array() ||
      doc["unitaries"].empty()) {
    throw ParseError("'unitaries' must be a nonempty array");
  }

  std::vector<UnitaryMat> elems;
  std::string bad;
  const auto& list = doc["unitaries"];
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string where = "unitaries[" + std::to_string(k) + "]";
    Mat m;
    try {
      m = parse_rows(list[k], dim, where);
    } catch (const Error& e) {
      throw ParseError(where + ": " + e.what());
    }
    if (!is_unitary(m, tol)) {
      bad += (bad.empty() ? "" : "; ") + where +
             ": not unitary, ||U^dag U - 1||_HS = " +
             json(hs_distance(m.adjoint() * m, Mat::identity(dim))).dump();
      continue;
    }
    elems.emplace_back(std::move(m), tol);
  }
  if (!bad.empty()) throw ParseError(bad);

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const auto& l = doc["labels"];
    if (!l.is_array() || l.size() != list.size()) {
      throw ParseError("'labels' must list one string per unitary");
    }
    for (const auto& s : l) {
      if (!s.is_string()) throw ParseError("labels must be strings");
      labels.push_back(s.get<std::string>());
    }
  }
  try {
    return {UnitarySet(std::move(elems), tol), std::move(labels),
            std::move(warnings)};
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

LoadedSet load_unitary_set(const std::string& path, bool strict, double tol) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return parse_unitary_set(doc, strict, tol);
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json unitary_set_json(const UnitarySet& s,
                      const std::vector<std::string>& labels) {
  json mats = json::array();
  for (const auto& u : s) {
    json rows = json::array();
    for (std::size_t i = 0; i < u.dim(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < u.dim(); ++j) row.push_back(complex_json(u(i, j)));
      rows.push_back(std::move(row));
    }
    mats.push_back(std::move(rows));
  }
  json doc{{"dim", s.dim()}, {"unitaries", std::move(mats)}};
  if (!labels.empty()) doc["labels"] = labels;
  return doc;
}

void save_json(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << doc.dump(2) << '\n';
}

json matrix_json(const Mat& m) {
  json entries = json::array();
  for (const auto& z : m.entries()) entries.push_back(complex_json(z));
  return {{"dim", m.dim()}, {"entries", std::move(entries)}};
}

Mat matrix_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("dim") ||
      !doc["dim"].is_number_integer() || !doc.contains("entries") ||
      !doc["entries"].is_array()) {
    throw ParseError("matrix needs integer 'dim' and array 'entries'");
  }
  const auto dim = doc["dim"].get<std::size_t>();
  const auto& e = doc["entries"];
  if (e.size() != dim * dim) throw ParseError("matrix needs dim^2 entries");
  std::vector<Complex> entries;
  for (std::size_t k = 0; k < e.size(); ++k) {
    entries.push_back(parse_complex(e[k], "entries[" + std::to_string(k) + "]"));
  }
  return Mat(dim, std::move(entries));
}

std::string digest(const json& doc) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : doc.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace udes::cli
