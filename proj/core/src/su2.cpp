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

#include "udes/su2.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace udes {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSignTol = 1e-10;
constexpr double kAxisTol = 1e-12;
constexpr Complex kI{0.0, 1.0};

void require_qubit(const Mat& m) {
  if (m.dim() != 2) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected a 2x2 matrix, got dim " + std::to_string(m.dim()));
  }
}

void require_unit_axis(const Vec3& n) {
  const double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  if (std::abs(len - 1.0) > kAxisTol) {
    throw Error(ErrorCode::NonUnitAxis, "|n| = " + std::to_string(len));
  }
}

const std::array<Mat, 3>& pauli_xyz() {
  static const std::array<Mat, 3> p{
      Mat{{0.0, 1.0}, {1.0, 0.0}},
      Mat{{0.0, -kI}, {kI, 0.0}},
      Mat{{1.0, 0.0}, {0.0, -1.0}},
  };
  return p;
}

Mat rz(double theta) {
  return Mat{{std::polar(1.0, -theta / 2), 0.0},
             {0.0, std::polar(1.0, theta / 2)}};
}

Mat ry(double beta) {
  const double c = std::cos(beta / 2);
  const double s = std::sin(beta / 2);
  return Mat{{c, -s}, {s, c}};
}

}  // namespace

double Quaternion::norm() const {
  return std::sqrt(s * s + x * x + y * y + z * z);
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.s * b.s - a.x * b.x - a.y * b.y - a.z * b.z,
          a.s * b.x + a.x * b.s + a.y * b.z - a.z * b.y,
          a.s * b.y - a.x * b.z + a.y * b.s + a.z * b.x,
          a.s * b.z + a.x * b.y - a.y * b.x + a.z * b.s};
}

double distance(const Quaternion& a, const Quaternion& b) {
  return Quaternion{a.s - b.s, a.x - b.x, a.y - b.y, a.z - b.z}.norm();
}

bool is_canonical(const Quaternion& q) {
  for (double c : q.coords()) {
    if (std::abs(c) > kSignTol) return c > 0;
  }
  return true;
}

Quaternion canonical(const Quaternion& q) { return is_canonical(q) ? q : -q; }

RotMat RotMat::identity() {
  RotMat r;
  r(0, 0) = r(1, 1) = r(2, 2) = 1.0;
  return r;
}

RotMat RotMat::transpose() const {
  RotMat r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r(j, i) = (*this)(i, j);
  return r;
}

double RotMat::det() const {
  const auto& a = *this;
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

RotMat operator*(const RotMat& a, const RotMat& b) {
  RotMat r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) r(i, j) += a(i, k) * b(k, j);
  return r;
}

RotMat operator+(const RotMat& a, const RotMat& b) {
  RotMat r;
  for (std::size_t k = 0; k < 9; ++k) r.m[k] = a.m[k] + b.m[k];
  return r;
}

Vec3 operator*(const RotMat& a, const Vec3& v) {
  Vec3 r{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) r[i] += a(i, k) * v[k];
  return r;
}

double max_abs_diff(const RotMat& a, const RotMat& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < 9; ++k) d = std::max(d, std::abs(a.m[k] - b.m[k]));
  return d;
}

double frobenius(const RotMat& a) {
  double s = 0.0;
  for (double v : a.m) s += v * v;
  return std::sqrt(s);
}

RotMat right_shift() {
  RotMat r;
  r(1, 0) = r(2, 1) = r(0, 2) = 1.0;
  return r;
}

RotMat left_shift() { return right_shift().transpose(); }

UnitaryMat su2_from_euler(const EulerAngles& e) {
  return UnitaryMat(rz(e.alpha) * ry(e.beta) * rz(e.gamma));
}

std::array<EulerAngles, 4> shift_euler_solutions() {
  return {{{0.0, kPi / 2, kPi / 2},
           {0.0, kPi / 2, 5 * kPi / 2},
           {kPi, kPi / 2, kPi / 2},
           {kPi, kPi / 2, 5 * kPi / 2}}};
}

UnitaryMat w_gate() {
  const Complex a{0.5, -0.5};
  const Complex b{-0.5, -0.5};
  // (1 - i(X + Y + Z))/2 written out.
  return UnitaryMat(Mat{{a, b}, {-std::conj(b), std::conj(a)}});
}

UnitaryMat su2_from_axis_angle(const AxisAngle& a) {
  require_unit_axis(a.axis);
  const double c = std::cos(a.angle / 2);
  const double s = std::sin(a.angle / 2);
  return su2_of_quaternion(
      {c, s * a.axis[0], s * a.axis[1], s * a.axis[2]}, 1e-10);
}

RotMat so3_rep(const UnitaryMat& u) {
  require_qubit(u);
  const auto& p = pauli_xyz();
  const Mat udag = u.mat().adjoint();
  RotMat r;
  for (std::size_t j = 0; j < 3; ++j) {
    const Mat conj_j = u.mat() * p[j] * udag;
    for (std::size_t i = 0; i < 3; ++i) {
      r(i, j) = 0.5 * hs_inner(p[i], conj_j).real();
    }
  }
  return r;
}

RotMat rodrigues(const AxisAngle& a) {
  require_unit_axis(a.axis);
  const auto& n = a.axis;
  const double c = std::cos(a.angle);
  const double s = std::sin(a.angle);
  RotMat r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      r(i, j) = (i == j ? c : 0.0) + (1.0 - c) * n[i] * n[j];
  r(0, 1) -= s * n[2];
  r(1, 0) += s * n[2];
  r(0, 2) += s * n[1];
  r(2, 0) -= s * n[1];
  r(1, 2) -= s * n[0];
  r(2, 1) += s * n[0];
  return r;
}

std::pair<UnitaryMat, UnitaryMat> su2_from_rotation(const RotMat& r,
                                                    double tol) {
  const double orth = max_abs_diff(r.transpose() * r, RotMat::identity());
  const double det = r.det();
  if (!(orth <= tol) || !(std::abs(det - 1.0) <= tol)) {
    throw Error(ErrorCode::NotRotation,
                "|R^T R - 1|_max = " + std::to_string(orth) +
                    ", det R = " + std::to_string(det));
  }
  const double tr = r(0, 0) + r(1, 1) + r(2, 2);
  const std::array<double, 4> four_sq{1.0 + tr, 1.0 + 2 * r(0, 0) - tr,
                                      1.0 + 2 * r(1, 1) - tr,
                                      1.0 + 2 * r(2, 2) - tr};
  const auto pivot = static_cast<std::size_t>(
      std::max_element(four_sq.begin(), four_sq.end()) - four_sq.begin());
  const double p = std::sqrt(std::max(four_sq[pivot], 0.0)) / 2;
  const double f = 1.0 / (4 * p);
  Quaternion q;
  switch (pivot) {
    case 0:
      q = {p, (r(2, 1) - r(1, 2)) * f, (r(0, 2) - r(2, 0)) * f,
           (r(1, 0) - r(0, 1)) * f};
      break;
    case 1:
      q = {(r(2, 1) - r(1, 2)) * f, p, (r(0, 1) + r(1, 0)) * f,
           (r(0, 2) + r(2, 0)) * f};
      break;
    case 2:
      q = {(r(0, 2) - r(2, 0)) * f, (r(0, 1) + r(1, 0)) * f, p,
           (r(1, 2) + r(2, 1)) * f};
      break;
    default:
      q = {(r(1, 0) - r(0, 1)) * f, (r(0, 2) + r(2, 0)) * f,
           (r(1, 2) + r(2, 1)) * f, p};
      break;
  }
  const double len = q.norm();
  q = canonical(Quaternion{q.s / len, q.x / len, q.y / len, q.z / len});
  return {su2_of_quaternion(q), su2_of_quaternion(-q)};
}

Quaternion quaternion_of(const UnitaryMat& u, double tol) {
  require_qubit(u);
  const Complex det = determinant(u);
  if (std::abs(det - 1.0) > tol) {
    throw Error(ErrorCode::NotSpecialUnitary,
                "det U = (" + std::to_string(det.real()) + ", " +
                    std::to_string(det.imag()) + ")");
  }
  const auto& p = pauli_xyz();
  // tr(X_k U) = -2i q_k, tr(U) = 2 s.
  return {0.5 * u.mat().trace().real(),
          0.5 * (kI * hs_inner(p[0], u)).real(),
          0.5 * (kI * hs_inner(p[1], u)).real(),
          0.5 * (kI * hs_inner(p[2], u)).real()};
}

UnitaryMat su2_of_quaternion(const Quaternion& q, double tol) {
  const double len = q.norm();
  if (!(std::abs(len - 1.0) <= tol)) {
    throw Error(ErrorCode::NonUnitQuaternion, "|q| = " + std::to_string(len));
  }
  return UnitaryMat(Mat{{Complex{q.s, -q.z}, Complex{-q.y, -q.x}},
                        {Complex{q.y, -q.x}, Complex{q.s, q.z}}});
}

std::pair<UnitaryMat, UnitaryMat> normalize_to_su2(const UnitaryMat& u) {
  require_qubit(u);
  const Complex omega = std::sqrt(determinant(u));
  const UnitaryMat v = std::conj(omega) / std::abs(omega) * u;
  const UnitaryMat minus_v = Complex{-1.0, 0.0} * v;
  if (is_canonical(quaternion_of(v, 1e-9))) return {v, minus_v};
  return {minus_v, v};
}

AxisAngle exponential_form(const Quaternion& q) {
  const double theta = std::acos(std::clamp(q.s, -1.0, 1.0));
  const double len = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
  if (len <= kSignTol) return {{0.0, 0.0, 0.0}, theta};
  return {{q.x / len, q.y / len, q.z / len}, theta};
}

Vec3 rotation_vector(const Quaternion& q) {
  const AxisAngle e = exponential_form(canonical(q));
  const double angle = 2 * e.angle;
  return {angle * e.axis[0], angle * e.axis[1], angle * e.axis[2]};
}

}  // namespace udes
