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

#include <doctest.h>

#include "oracles.hpp"
#include "udes/su2.hpp"

using namespace udes;
using oracle::kPi;

namespace {

double max_diff(const RotMat& r, const std::array<std::array<double, 3>, 3>& o) {
  double d = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) d = std::max(d, std::abs(r(i, j) - o[i][j]));
  return d;
}

const Vec3 kE{1 / std::sqrt(3.0), 1 / std::sqrt(3.0), 1 / std::sqrt(3.0)};

}  // namespace

TEST_CASE("su2_from_euler") {
  CHECK(hs_distance(su2_from_euler({0, 0, 0}), Mat::identity(2)) < 1e-15);
  CHECK(hs_distance(su2_from_euler({0, kPi / 2, kPi / 2}), oracle::w_literal()) < 1e-12);
  CHECK(hs_distance(su2_from_euler({0, kPi / 2, 5 * kPi / 2}), -oracle::w_literal()) < 1e-12);
  oracle::Rng rng(21);
  for (int k = 0; k < 20; ++k) {
    const UnitaryMat u = su2_from_euler(
        {rng.uniform(0, 2 * kPi), rng.uniform(0, kPi), rng.uniform(0, 4 * kPi)});
    CHECK(std::abs(determinant(u) - 1.0) < 1e-12);
  }
}

TEST_CASE("all four shift solutions give +-W and W is the default") {
  const auto sols = shift_euler_solutions();
  CHECK(hs_distance(su2_from_euler(sols[0]), w_gate()) < 1e-12);
  for (const auto& e : sols) {
    CHECK(e.beta == doctest::Approx(kPi / 2));
    // Each one permutes the coordinate axes up to sign.
    const RotMat r = so3_rep(su2_from_euler(e));
    for (int i = 0; i < 3; ++i) {
      int nonzero = 0;
      for (int j = 0; j < 3; ++j) nonzero += std::abs(r(i, j)) > 1e-9;
      CHECK(nonzero == 1);
    }
  }
}

TEST_CASE("su2_from_axis_angle") {
  CHECK(hs_distance(su2_from_axis_angle({kE, 2 * kPi / 3}), oracle::w_literal()) < 1e-12);
  CHECK(hs_distance(su2_from_axis_angle({{0.6, 0.8, 0.0}, 0.0}), Mat::identity(2)) < 1e-15);
  // (z, pi) -> -iZ.
  CHECK(hs_distance(su2_from_axis_angle({{0, 0, 1}, kPi}), oracle::pz() * Complex(0, -1)) < 1e-15);
  try {
    su2_from_axis_angle({{1, 1, 0}, 1.0});
    FAIL("expected NonUnitAxis");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonUnitAxis);
  }
  oracle::Rng rng(22);
  for (int k = 0; k < 20; ++k) {
    const auto n = rng.unit_vector();
    const double th = rng.uniform(-4 * kPi, 4 * kPi);
    CHECK(hs_distance(su2_from_axis_angle({n, th}), oracle::su2_axis(n, th)) < 1e-12);
  }
}

TEST_CASE("Euler and axis-angle agree on W") {
  CHECK(hs_distance(su2_from_euler({0, kPi / 2, kPi / 2}),
                    su2_from_axis_angle({kE, 2 * kPi / 3})) < 1e-12);
}

TEST_CASE("so3_rep basics") {
  CHECK(max_abs_diff(so3_rep(UnitaryMat(Mat::identity(2))), RotMat::identity()) == 0.0);
  CHECK(max_abs_diff(so3_rep(UnitaryMat(-Mat::identity(2))), RotMat::identity()) == 0.0);
  // Right shift e_i -> e_{i+1}.
  const std::array<std::array<double, 3>, 3> sigma{{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}};
  CHECK(max_diff(so3_rep(w_gate()), sigma) < 1e-12);
  CHECK(max_abs_diff(right_shift(), so3_rep(w_gate())) < 1e-12);
  CHECK(max_abs_diff(left_shift(), so3_rep(w_gate().adjoint())) < 1e-12);
  // I_i rotates by pi about axis i: diag with +1 at i, -1 elsewhere.
  const auto p = oracle::paulis();
  for (int i = 0; i < 3; ++i) {
    const RotMat r = so3_rep(UnitaryMat(p[i + 1] * Complex(0, -1)));
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        CHECK(r(a, b) == doctest::Approx(a != b ? 0.0 : (a == i ? 1.0 : -1.0)));
  }
}

TEST_CASE("so3_rep is a two-to-one homomorphism blind to phase") {
  oracle::Rng rng(23);
  for (int k = 0; k < 100; ++k) {
    const UnitaryMat u(rng.unitary(2));
    const UnitaryMat v(rng.unitary(2));
    const RotMat ru = so3_rep(u);
    CHECK(max_diff(ru, oracle::rotation_of(u)) < 1e-12);
    CHECK(max_abs_diff(ru, so3_rep(Complex(-1, 0) * u)) == 0.0);
    CHECK(max_abs_diff(ru, so3_rep(std::polar(1.0, rng.uniform(0, 6)) * u)) < 1e-12);
    CHECK(max_abs_diff(so3_rep(u * v), ru * so3_rep(v)) < 1e-10);
    CHECK(max_abs_diff(ru.transpose() * ru, RotMat::identity()) < 1e-12);
    CHECK(ru.det() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("rodrigues") {
  oracle::Rng rng(24);
  for (int k = 0; k < 20; ++k) {
    const auto n = rng.unit_vector();
    const RotMat r = rodrigues({n, kPi});
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(r(i, j) == doctest::Approx(2 * n[i] * n[j] - (i == j)));
    const double phi = rng.uniform(-kPi, kPi);
    CHECK(max_diff(rodrigues({n, phi}), oracle::rodrigues_columns(n, phi)) < 1e-12);
    CHECK(max_abs_diff(rodrigues({n, phi}), so3_rep(su2_from_axis_angle({n, phi}))) < 1e-10);
  }
  CHECK(max_abs_diff(rodrigues({kE, 2 * kPi / 3}), right_shift()) < 1e-12);
  CHECK_THROWS_AS(rodrigues({{0, 0, 2}, 1.0}), Error);
}

TEST_CASE("su2_from_rotation") {
  auto [one, minus_one] = su2_from_rotation(RotMat::identity());
  CHECK(hs_distance(one, Mat::identity(2)) < 1e-15);
  CHECK(hs_distance(minus_one, -Mat::identity(2)) < 1e-15);
  auto [w, mw] = su2_from_rotation(right_shift());
  CHECK(hs_distance(w, oracle::w_literal()) < 1e-12);
  CHECK(hs_distance(mw, -oracle::w_literal()) < 1e-12);
  // pi rotations sit on the unstable branch of the trace formula.
  auto [i, mi] = su2_from_rotation(rodrigues({{1, 0, 0}, kPi}));
  CHECK(hs_distance(i, oracle::px() * Complex(0, -1)) < 1e-12);

  oracle::Rng rng(25);
  for (int k = 0; k < 100; ++k) {
    const RotMat r = so3_rep(UnitaryMat(rng.unitary(2)));
    auto [u, v] = su2_from_rotation(r);
    CHECK(max_abs_diff(so3_rep(u), r) < 1e-10);
    CHECK(hs_distance(v, -u.mat()) < 1e-15);
    CHECK(is_canonical(quaternion_of(u)));
  }
  RotMat reflect = RotMat::identity();
  reflect(2, 2) = -1;
  try {
    su2_from_rotation(reflect);
    FAIL("expected NotRotation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotRotation);
  }
  RotMat skew = RotMat::identity();
  skew(0, 1) = 0.1;
  CHECK_THROWS_AS(su2_from_rotation(skew), Error);
}

TEST_CASE("quaternion_of and su2_of_quaternion") {
  const Quaternion qi = quaternion_of(UnitaryMat(Mat::identity(2)));
  CHECK(qi == Quaternion{1, 0, 0, 0});
  const Quaternion qw = quaternion_of(w_gate());
  CHECK(distance(qw, Quaternion{0.5, 0.5, 0.5, 0.5}) < 1e-15);
  try {
    quaternion_of(UnitaryMat(oracle::px()));
    FAIL("expected NotSpecialUnitary");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSpecialUnitary);
  }
  CHECK_THROWS_AS(su2_of_quaternion({1, 1, 0, 0}), Error);

  oracle::Rng rng(26);
  for (int k = 0; k < 100; ++k) {
    const UnitaryMat u(rng.special_unitary());
    const UnitaryMat v(rng.special_unitary());
    const Quaternion qu = quaternion_of(u);
    const Quaternion qv = quaternion_of(v);
    CHECK(hs_distance(su2_of_quaternion(qu), u) < 1e-12);
    CHECK(distance(quaternion_of(u * v), qu * qv) < 1e-12);
    CHECK(std::abs(hs_distance(u, v) - std::sqrt(2.0) * distance(qu, qv)) < 1e-12);
    CHECK(distance(quaternion_of(u.adjoint()), qu.conj()) < 1e-12);
    // U = s 1 - i(x X + y Y + z Z).
    const Mat rebuilt = oracle::id2() * qu.s -
                        (oracle::px() * qu.x + oracle::py() * qu.y + oracle::pz() * qu.z) * oracle::kI;
    CHECK(hs_distance(rebuilt, u) < 1e-12);
  }
}

TEST_CASE("Hamilton units") {
  const Quaternion i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
  CHECK(i * j == k);
  CHECK(j * k == i);
  CHECK(k * i == j);
  CHECK(i * i == Quaternion{-1, 0, 0, 0});
}

TEST_CASE("canonical representative") {
  CHECK(canonical({0, -1, 0, 0}) == Quaternion{0, 1, 0, 0});
  CHECK(canonical({-0.5, 0.5, 0.5, -0.5}) == Quaternion{0.5, -0.5, -0.5, 0.5});
  CHECK(canonical({1e-12, 0, -1, 0}) == Quaternion{-1e-12, -0.0, 1, -0.0});
  CHECK(is_canonical({0.5, -0.5, -0.5, -0.5}));
}

TEST_CASE("normalize_to_su2") {
  auto [i, mi] = normalize_to_su2(UnitaryMat(oracle::px()));
  CHECK(hs_distance(i, oracle::px() * Complex(0, -1)) < 1e-15);
  CHECK(hs_distance(mi, oracle::px() * Complex(0, 1)) < 1e-15);
  auto [one, m1] = normalize_to_su2(UnitaryMat(Mat::identity(2)));
  CHECK(hs_distance(one, Mat::identity(2)) == 0.0);
  CHECK(hs_distance(m1, -Mat::identity(2)) == 0.0);

  oracle::Rng rng(27);
  for (int k = 0; k < 50; ++k) {
    const UnitaryMat v(rng.special_unitary());
    const auto ref = normalize_to_su2(v);
    for (double phi = 0.0; phi < 2 * kPi; phi += 0.37) {
      const auto got = normalize_to_su2(std::polar(1.0, phi) * v);
      CHECK(hs_distance(got.first, ref.first) < 1e-12);
      CHECK(hs_distance(got.second, ref.second) < 1e-12);
      CHECK(std::abs(determinant(got.first) - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("exponential form and rotation vector") {
  const AxisAngle e = exponential_form({0.5, 0.5, 0.5, 0.5});
  CHECK(e.angle == doctest::Approx(kPi / 3));
  for (double c : e.axis) CHECK(c == doctest::Approx(1 / std::sqrt(3.0)));
  const Vec3 v = rotation_vector({-0.5, 0.5, 0.5, -0.5});
  const double a = 2 * kPi / (3 * std::sqrt(3.0));
  CHECK(v[0] == doctest::Approx(-a));
  CHECK(v[1] == doctest::Approx(-a));
  CHECK(v[2] == doctest::Approx(a));
  const Vec3 pi_x = rotation_vector({0, -1, 0, 0});
  CHECK(pi_x[0] == doctest::Approx(kPi));
}
