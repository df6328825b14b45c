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

#include <array>
#include <utility>

#include "udes/linalg.hpp"

namespace udes {

using Vec3 = std::array<double, 3>;

/// U(alpha, beta, gamma) = exp(-i alpha Z/2) exp(-i beta Y/2) exp(-i gamma Z/2).
/// Standard range: alpha in [0, 2pi), beta in [0, pi], gamma in [0, 4pi).
struct EulerAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

struct AxisAngle {
  Vec3 axis{0.0, 0.0, 1.0};
  double angle = 0.0;
};

/// U = s 1 - i (x X + y Y + z Z). Multiplication is the Hamilton product, so
/// quaternion_of(U V) = quaternion_of(U) * quaternion_of(V).
struct Quaternion {
  double s = 1.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  std::array<double, 4> coords() const { return {s, x, y, z}; }
  Vec3 vec() const { return {x, y, z}; }
  double norm() const;
  Quaternion conj() const { return {s, -x, -y, -z}; }
  Quaternion operator-() const { return {-s, -x, -y, -z}; }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
  bool operator==(const Quaternion&) const = default;
};

/// Euclidean distance in R^4.
double distance(const Quaternion& a, const Quaternion& b);

/// Flip the sign so that the first coordinate (in s, x, y, z order) whose
/// magnitude exceeds 1e-10 is positive.
Quaternion canonical(const Quaternion& q);
bool is_canonical(const Quaternion& q);

/// 3x3 real matrix, row-major.
struct RotMat {
  std::array<double, 9> m{};

  static RotMat identity();
  double operator()(std::size_t i, std::size_t j) const { return m[i * 3 + j]; }
  double& operator()(std::size_t i, std::size_t j) { return m[i * 3 + j]; }
  RotMat transpose() const;
  double det() const;
  friend RotMat operator*(const RotMat& a, const RotMat& b);
  friend RotMat operator+(const RotMat& a, const RotMat& b);
  friend Vec3 operator*(const RotMat& a, const Vec3& v);
  bool operator==(const RotMat&) const = default;
};

/// Largest absolute entry difference.
double max_abs_diff(const RotMat& a, const RotMat& b);
/// Frobenius norm.
double frobenius(const RotMat& a);

/// Right shift e_i -> e_{i+1 mod 3}; its transpose is the left shift.
RotMat right_shift();
RotMat left_shift();

UnitaryMat su2_from_euler(const EulerAngles& e);

/// The Euler triples in the standard range for which the triplet block of
/// U (x) U in the Bell basis has a (phased) cyclic shift pattern. The first
/// one is the default and gives W.
std::array<EulerAngles, 4> shift_euler_solutions();

/// W = U(0, pi/2, pi/2) = (1 - i(X + Y + Z))/2.
UnitaryMat w_gate();

/// cos(angle/2) 1 - i sin(angle/2) n.X; throws NonUnitAxis.
UnitaryMat su2_from_axis_angle(const AxisAngle& a);

/// R_ij = tr(X_i U X_j U^dag)/2. Blind to global phase.
RotMat so3_rep(const UnitaryMat& u);

/// cos(phi) 1 + (1 - cos(phi)) n n^T + sin(phi) [n]_x; throws NonUnitAxis.
RotMat rodrigues(const AxisAngle& a);

/// Both lifts of a rotation, canonical one first. Throws NotRotation unless
/// R^T R = 1 and det R = 1 within tol.
std::pair<UnitaryMat, UnitaryMat> su2_from_rotation(const RotMat& r,
                                                    double tol = 1e-10);

/// Throws NotSpecialUnitary unless |det U - 1| <= tol.
Quaternion quaternion_of(const UnitaryMat& u, double tol = kUnitarityTol);
/// Throws NonUnitQuaternion unless |norm(q) - 1| <= tol.
UnitaryMat su2_of_quaternion(const Quaternion& q, double tol = 1e-12);

/// The two special unitaries +-conj(w) U with w = sqrt(det U) (principal
/// root), canonical one first.
std::pair<UnitaryMat, UnitaryMat> normalize_to_su2(const UnitaryMat& u);

/// U = exp(-i theta n.X) with theta = acos(s) in [0, pi]. For theta in
/// {0, pi} the axis is undefined and returned as zero.
AxisAngle exponential_form(const Quaternion& q);

/// Rotation vector angle * axis of the SO(3) image of q, computed from the
/// canonical representative so that the angle lies in [0, pi].
Vec3 rotation_vector(const Quaternion& q);

}  // namespace udes
