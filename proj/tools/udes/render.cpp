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

#include "render.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace udes::cli {

namespace {

constexpr double kExactTol = 1e-12;

bool near(double a, double b) { return std::abs(a - b) <= kExactTol; }

bool is_scalar_array(const json& a) {
  for (const auto& v : a)
    if (v.is_object() || (v.is_array() && !is_scalar_array(v))) return false;
  return true;
}

std::string scalar(const json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

void render(const json& v, int indent, std::ostringstream& out);

void render_member(const std::string& key, const json& v, int indent,
                   std::ostringstream& out) {
  out << std::string(indent, ' ') << key << ':';
  if (v.is_object() || (v.is_array() && !is_scalar_array(v))) {
    if (v.empty()) {
      out << (v.is_object() ? " {}" : " []") << '\n';
      return;
    }
    out << '\n';
    render(v, indent + 2, out);
  } else {
    out << ' ' << scalar(v) << '\n';
  }
}

void render(const json& v, int indent, std::ostringstream& out) {
  if (v.is_object()) {
    for (const auto& [key, value] : v.items()) render_member(key, value, indent, out);
  } else if (v.is_array() && !is_scalar_array(v)) {
    std::size_t k = 0;
    for (const auto& item : v) {
      out << std::string(indent, ' ') << "- [" << k++ << "]\n";
      render(item, indent + 2, out);
    }
  } else if (v.is_array()) {
    out << std::string(indent, ' ') << v.dump() << '\n';
  } else {
    out << std::string(indent, ' ') << scalar(v) << '\n';
  }
}

char sign_char(double x) { return x > 0 ? '+' : '-'; }

}  // namespace

std::string render_text(const json& doc) {
  std::ostringstream out;
  render(doc, 0, out);
  return out.str();
}

std::string exact_or_number(double x) {
  if (near(x, 0.0)) return "0";
  if (near(x, 0.5)) return "1/2";
  if (near(x, -0.5)) return "-1/2";
  if (near(x, 1.0)) return "1";
  if (near(x, -1.0)) return "-1";
  return json(x).dump();
}

std::string render_s3(const Quaternion& q) {
  const auto c = q.coords();
  bool half = true;
  for (double x : c) half = half && near(std::abs(x), 0.5);
  std::string s = half ? "(1/2)(" : "(";
  for (std::size_t k = 0; k < 4; ++k) {
    if (k) s += ',';
    if (half) {
      s += sign_char(c[k]);
    } else if (near(c[k], 0.0)) {
      s += '0';
    } else if (near(std::abs(c[k]), 1.0)) {
      s += sign_char(c[k]);
    } else {
      s += json(c[k]).dump();
    }
  }
  return s + ')';
}

std::string render_so3(const Vec3& v) {
  const double pi = std::numbers::pi;
  const double third = 2 * pi / (3 * std::numbers::sqrt3);
  if (near(v[0], 0.0) && near(v[1], 0.0) && near(v[2], 0.0)) return "(0,0,0)";
  int axis = -1;
  int zeros = 0;
  for (int k = 0; k < 3; ++k) {
    if (near(v[k], 0.0)) ++zeros;
    else if (near(v[k], pi)) axis = k;
  }
  if (zeros == 2 && axis >= 0) {
    std::string s = "pi(";
    for (int k = 0; k < 3; ++k) s += std::string(k ? "," : "") + (k == axis ? "1" : "0");
    return s + ')';
  }
  if (near(std::abs(v[0]), third) && near(std::abs(v[1]), third) &&
      near(std::abs(v[2]), third)) {
    return std::string("2pi/(3sqrt3)(") + sign_char(v[0]) + ',' +
           sign_char(v[1]) + ',' + sign_char(v[2]) + ')';
  }
  return '(' + json(v[0]).dump() + ',' + json(v[1]).dump() + ',' +
         json(v[2]).dump() + ')';
}

}  // namespace udes::cli
