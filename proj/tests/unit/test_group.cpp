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
#include "udes/design.hpp"
#include "udes/group.hpp"
#include "udes/su2.hpp"

using namespace udes;
using oracle::kPi;

namespace {

UnitarySet set_of(const std::vector<Mat>& ms) {
  std::vector<UnitaryMat> u;
  for (const auto& m : ms) u.emplace_back(m);
  return UnitarySet(std::move(u));
}

std::vector<Quaternion> pm(std::vector<Quaternion> qs) {
  const std::size_t n = qs.size();
  for (std::size_t k = 0; k < n; ++k) qs.push_back(-qs[k]);
  return qs;
}

// The 16 points (+-1/2, +-1/2, +-1/2, +-1/2).
std::vector<Quaternion> half_points() {
  std::vector<Quaternion> out;
  for (int m = 0; m < 16; ++m) {
    auto c = [&](int b) { return (m >> b & 1) ? -0.5 : 0.5; };
    out.push_back({c(0), c(1), c(2), c(3)});
  }
  return out;
}

std::vector<Quaternion> q8() {
  return pm({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
}

bool contains(const std::vector<Quaternion>& set, const Quaternion& q) {
  for (const auto& p : set)
    if (distance(p, q) < 1e-12) return true;
  return false;
}

}  // namespace

TEST_CASE("su2_closure of the Pauli basis") {
  const Su2Closure c = su2_closure(named_design("pauli").set);
  const auto qs = c.quaternions();
  REQUIRE(qs.size() == 8);
  for (const auto& q : q8()) CHECK(contains(qs, q));
  for (std::size_t k = 0; k < qs.size(); ++k) {
    CHECK(c.pairing[k] == (k ^ 1));
    CHECK(distance(qs[k], -qs[c.pairing[k]]) < 1e-15);
  }
  CHECK(is_canonical(qs[0]));
}

TEST_CASE("su2_closure of D has 24 antipodally closed elements") {
  const auto qs = su2_closure(named_design("D").set).quaternions();
  CHECK(qs.size() == 24);
  for (const auto& q : qs) CHECK(contains(qs, -q));
  // Exactly Q8 and the 16 half points.
  for (const auto& q : q8()) CHECK(contains(qs, q));
  for (const auto& q : half_points()) CHECK(contains(qs, q));
}

TEST_CASE("su2_closure rejects proportional elements") {
  try {
    su2_closure(set_of({oracle::id2(), oracle::id2() * oracle::kI, -oracle::id2()}));
    FAIL("expected ProportionalElements");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ProportionalElements);
  }
}

TEST_CASE("group_profile of Q8") {
  const GroupProfile g = group_profile(su2_closure(named_design("pauli").set));
  CHECK(g.is_group);
  CHECK(g.order == 8);
  CHECK(g.order_histogram == std::map<int, int>{{1, 1}, {2, 1}, {4, 6}});
  CHECK(g.center_size == 2);
  CHECK_FALSE(g.semidirect_check);
}

TEST_CASE("group_profile of the binary tetrahedral group") {
  const Su2Closure c = su2_closure(named_design("D").set);
  const GroupProfile g = group_profile(c);
  CHECK(g.is_group);
  CHECK(g.order == 24);
  CHECK(g.order_histogram == std::map<int, int>{{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}});
  CHECK(g.center_size == 2);
  CHECK(g.semidirect_check);
  REQUIRE(g.cosets.has_value());
  CHECK(g.cosets->subgroup == "Q8");
  REQUIRE(g.cosets->cosets.size() == 3);
  // The three cosets: Q8, W Q8 (product of coordinates > 0), W^dag Q8.
  const auto qs = c.quaternions();
  for (std::size_t k : g.cosets->cosets[0]) CHECK(contains(q8(), qs[k]));
  for (std::size_t k : g.cosets->cosets[1])
    CHECK(demitesseract_class(qs[k]) == DemitesseractClass::WB);
  for (std::size_t k : g.cosets->cosets[2])
    CHECK(demitesseract_class(qs[k]) == DemitesseractClass::WdagB);
  // Q8 is normal: g Q8 g^-1 = Q8.
  for (const auto& q : qs)
    for (const auto& h : q8()) CHECK(contains(q8(), q * h * q.conj()));
  // Orders divisible by 3 exactly off Q8.
  for (std::size_t k = 0; k < qs.size(); ++k)
    CHECK((g.element_orders[k] % 3 == 0) == !contains(q8(), qs[k]));
}

TEST_CASE("the W cosets alone are not closed") {
  const auto d = oracle::design_d();
  const std::vector<Mat> cosets(d.begin() + 4, d.end());
  CHECK_FALSE(group_profile(su2_closure(set_of(cosets))).is_group);
}

TEST_CASE("conjugation by W cycles I, J, K") {
  const Quaternion w{0.5, 0.5, 0.5, 0.5};
  const std::array<Quaternion, 3> units{Quaternion{0, 1, 0, 0}, Quaternion{0, 0, 1, 0},
                                        Quaternion{0, 0, 0, 1}};
  for (int i = 0; i < 3; ++i) CHECK(w * units[i] * w.conj() == units[(i + 1) % 3]);
}

TEST_CASE("polytope_identify") {
  CHECK(polytope_identify(q8()).kind == PolytopeKind::Cell16);
  CHECK(polytope_identify(half_points()).kind == PolytopeKind::Tesseract);
  const auto d = su2_closure(named_design("D").set).quaternions();
  const PolytopeId p24 = polytope_identify(d);
  CHECK(p24.kind == PolytopeKind::Cell24);
  CHECK(p24.uniform);
  std::vector<Quaternion> hex;
  Quaternion p{};
  for (int k = 0; k < 6; ++k) {
    hex.push_back(p);
    p = p * Quaternion{0.5, 0.5, 0.5, 0.5};
  }
  const PolytopeId h = polytope_identify(hex);
  CHECK(h.kind == PolytopeKind::Hexagon);
  CHECK(h.distance_spectrum.front().length == doctest::Approx(1.0));
  // A cube inscribed in the great sphere s = 0.
  std::vector<Quaternion> cube;
  const double c = 1 / std::sqrt(3.0);
  for (int m = 0; m < 8; ++m)
    cube.push_back({0, (m & 1) ? -c : c, (m & 2) ? -c : c, (m & 4) ? -c : c});
  CHECK(polytope_identify(cube).kind == PolytopeKind::TetrahedronPair);
  CHECK(polytope_identify(std::vector<Quaternion>{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}).kind ==
        PolytopeKind::Other);
  try {
    polytope_identify(std::vector<Quaternion>{{1, 1, 0, 0}});
    FAIL("expected NonUnitPoint");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonUnitPoint);
  }
}

TEST_CASE("polytope_identify is invariant under 4-D rotations") {
  oracle::Rng rng(61);
  const auto d = su2_closure(named_design("D").set).quaternions();
  for (int trial = 0; trial < 10; ++trial) {
    const Quaternion l = quaternion_of(UnitaryMat(rng.special_unitary()));
    const Quaternion r = quaternion_of(UnitaryMat(rng.special_unitary()));
    std::vector<Quaternion> moved;
    for (const auto& q : d) moved.push_back(l * q * r);
    CHECK(polytope_identify(moved).kind == PolytopeKind::Cell24);
    std::vector<Quaternion> moved16;
    for (const auto& q : q8()) moved16.push_back(l * q * r);
    CHECK(polytope_identify(moved16).kind == PolytopeKind::Cell16);
  }
}

TEST_CASE("demitesseract_class") {
  CHECK(demitesseract_class({0.5, 0.5, 0.5, 0.5}) == DemitesseractClass::WB);
  CHECK(demitesseract_class({0.5, -0.5, -0.5, -0.5}) == DemitesseractClass::WdagB);
  for (const auto& q : half_points()) CHECK(demitesseract_class(q) == demitesseract_class(-q));
  // Algebraic coset membership: q in W Q8 iff W^-1 q in Q8.
  const Quaternion w{0.5, 0.5, 0.5, 0.5};
  for (const auto& q : half_points()) {
    const bool in_wb = contains(q8(), w.conj() * q);
    CHECK(in_wb == (demitesseract_class(q) == DemitesseractClass::WB));
  }
  CHECK_THROWS_AS(demitesseract_class({1, 0, 0, 0}), Error);
}

TEST_CASE("so3_image_table") {
  const auto b = so3_image_table(su2_closure(named_design("pauli").set));
  REQUIRE(b.size() == 4);
  CHECK(b[0].angle == doctest::Approx(0.0));
  for (int i = 1; i < 4; ++i) {
    CHECK(b[i].angle == doctest::Approx(kPi));
    CHECK(b[i].axis[i - 1] == doctest::Approx(1.0));
  }
  const auto d = so3_image_table(su2_closure(named_design("D").set));
  REQUIRE(d.size() == 12);
  // Index 4 is W: 2 pi/3 about e.
  CHECK(d[4].angle == doctest::Approx(2 * kPi / 3));
  for (double c : d[4].axis) CHECK(c == doctest::Approx(1 / std::sqrt(3.0)));
  // W B and W^dag B images: cube vertices of radius 2 pi/3 forming two
  // antipodal quadruples.
  for (int k = 4; k < 8; ++k) {
    CHECK(d[k].angle == doctest::Approx(2 * kPi / 3));
    bool antipode = false;
    for (int j = 8; j < 12; ++j) {
      double s = 0.0;
      for (int i = 0; i < 3; ++i) s += std::abs(d[k].axis[i] + d[j].axis[i]);
      antipode = antipode || s < 1e-12;
    }
    CHECK(antipode);
  }
}
