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

#include <string>

#include "io.hpp"
#include "udes/su2.hpp"

namespace udes::cli {

/// Plain-text view of a report. Every number is printed with the same
/// characters json::dump uses, so both renderings carry identical values.
std::string render_text(const json& doc);

/// "0", "1/2", "-1/2", "1", "-1" when x is within 1e-12 of one of them;
/// otherwise the JSON number string.
std::string exact_or_number(double x);

/// S^3 point as "(1/2)(+,-,-,+)" for half-integer points, "(0,+,0,0)" for
/// unit axes, else a plain tuple.
std::string render_s3(const Quaternion& q);

/// Rotation vector as "(0,0,0)", "pi(1,0,0)", "2pi/(3sqrt3)(+,-,+)", or a
/// plain tuple.
std::string render_so3(const Vec3& v);

}  // namespace udes::cli
