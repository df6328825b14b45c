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

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "udes/linalg.hpp"
#include "udes/twirl.hpp"

namespace udes::cli {

using nlohmann::json;

/// Malformed input file; maps to exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LoadedSet {
  UnitarySet set;
  std::vector<std::string> labels;
  std::vector<std::string> warnings;
};

/// Reads a unitary-set document:
///   {"dim": n, "unitaries": [[[[re, im], ...], ...], ...], "labels": [...]}
/// Unknown top-level fields are warnings, or errors when strict.
/// Every non-unitary matrix is reported by index.
LoadedSet parse_unitary_set(const json& doc, bool strict, double tol);
LoadedSet load_unitary_set(const std::string& path, bool strict, double tol);

json unitary_set_json(const UnitarySet& s,
                      const std::vector<std::string>& labels);
void save_json(const std::string& path, const json& doc);

/// {"dim": n, "entries": [[re, im], ...]} row-major.
json matrix_json(const Mat& m);
Mat matrix_from_json(const json& doc);

json complex_json(Complex z);

/// FNV-1a 64 of the compact dump, as 16 hex digits.
std::string digest(const json& doc);

}  // namespace udes::cli
