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

#include "udes/group.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace udes {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
constexpr int kOrderCap = 1000;

std::size_t find(std::span<const Quaternion> elems, const Quaternion& q,
                 double tol) {
  for (std::size_t k = 0; k < elems.size(); ++k)
    if (distance(elems[k], q) <= tol) return k;
  return kNone;
}

bool contains_all(std::span<const Quaternion> elems,
                  std::span<const Quaternion> sub, double tol) {
  return std::all_of(sub.begin(), sub.end(), [&](const Quaternion& q) {
    return find(elems, q, tol) != kNone;
  });
}

bool is_normal_in(std::span<const Quaternion> group,
                  std::span<const Quaternion> sub, double tol) {
  for (const auto& g : group)
    for (const auto& h : sub)
      if (find(sub, g * h * g.conj(), tol) == kNone) return false;
  return true;
}

int element_order(const Quaternion& q, double tol) {
  const Quaternion one{};
  Quaternion p = q;
  for (int k = 1; k <= kOrderCap; ++k) {
    if (distance(p, one) <= tol) return k;
    p = p * q;
  }
  return 0;
}

std::vector<Quaternion> pm(std::initializer_list<Quaternion> qs) {
  std::vector<Quaternion> out;
  for (const auto& q : qs) {
    out.push_back(q);
    out.push_back(-q);
  }
  return out;
}

struct Candidate {
  std::string name;
  std::vector<Quaternion> elems;
};

std::vector<Candidate> normal_candidates() {
  const Quaternion one{1, 0, 0, 0};
  const Quaternion i{0, 1, 0, 0};
  const Quaternion j{0, 0, 1, 0};
  const Quaternion k{0, 0, 0, 1};
  return {{"1", {one}},
          {"{+-1}", pm({one})},
          {"{+-1,+-I}", pm({one, i})},
          {"{+-1,+-J}", pm({one, j})},
          {"{+-1,+-K}", pm({one, k})},
          {"Q8", pm({one, i, j, k})}};
}

std::vector<ChordCount> spectrum_of(std::span<const Quaternion> pts,
                                    std::size_t v, double tol) {
  std::vector<double> d;
  for (std::size_t k = 0; k < pts.size(); ++k)
    if (k != v) d.push_back(distance(pts[v], pts[k]));
  std::sort(d.begin(), d.end());
  std::vector<ChordCount> out;
  for (double x : d) {
    if (!out.empty() && std::abs(x - out.back().length) <= tol) {
      ++out.back().count;
    } else {
      out.push_back({x, 1});
    }
  }
  return out;
}

bool same_spectrum(const std::vector<ChordCount>& a,
                   const std::vector<ChordCount>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k].count != b[k].count || std::abs(a[k].length - b[k].length) > tol)
      return false;
  return true;
}

}  // namespace

std::vector<Quaternion> Su2Closure::quaternions() const {
  std::vector<Quaternion> out;
  out.reserve(closure.size());
  for (const auto& u : closure) out.push_back(quaternion_of(u, 1e-9));
  return out;
}

Su2Closure su2_closure(const UnitarySet& s) {
  if (s.dim() != 2) {
    throw Error(ErrorCode::DimensionMismatch, "closure needs 2x2 unitaries");
  }
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (std::abs(std::abs(hs_inner(s[a], s[b])) - 2.0) <= 1e-9) {
        throw Error(ErrorCode::ProportionalElements,
                    "elements " + std::to_string(b) + " and " +
                        std::to_string(a) + " differ by a phase");
      }
  std::vector<UnitaryMat> closure;
  std::vector<std::size_t> pairing;
  for (const auto& u : s) {
    auto [plus, minus] = normalize_to_su2(u);
    pairing.push_back(closure.size() + 1);
    pairing.push_back(closure.size());
    closure.push_back(plus);
    closure.push_back(minus);
  }
  return {s, std::move(closure), std::move(pairing)};
}

GroupProfile group_profile(std::span<const Quaternion> elems, double tol) {
  GroupProfile p;
  p.order = elems.size();
  p.is_group = !elems.empty() && find(elems, Quaternion{}, tol) != kNone;
  for (std::size_t a = 0; a < elems.size() && p.is_group; ++a)
    for (std::size_t b = 0; b < elems.size() && p.is_group; ++b)
      if (find(elems, elems[a] * elems[b], tol) == kNone) p.is_group = false;

  for (const auto& q : elems) {
    const int ord = element_order(q, tol);
    p.element_orders.push_back(ord);
    ++p.order_histogram[ord];
  }
  for (const auto& g : elems) {
    const bool central = std::all_of(
        elems.begin(), elems.end(),
        [&](const Quaternion& h) { return distance(g * h, h * g) <= tol; });
    if (central) ++p.center_size;
  }
  if (!p.is_group) return p;

  const Candidate* best = nullptr;
  const auto candidates = normal_candidates();
  for (const auto& c : candidates) {
    if (c.elems.size() >= elems.size()) continue;
    if (!contains_all(elems, c.elems, tol)) continue;
    if (!is_normal_in(elems, c.elems, tol)) continue;
    if (best == nullptr || c.elems.size() > best->elems.size()) best = &c;
  }
  if (best != nullptr) {
    CosetDecomposition d{best->name, {}};
    std::vector<bool> seen(elems.size(), false);
    for (std::size_t g = 0; g < elems.size(); ++g) {
      if (seen[g]) continue;
      std::vector<std::size_t> coset;
      for (const auto& h : best->elems) {
        const std::size_t k = find(elems, elems[g] * h, tol);
        seen[k] = true;
        coset.push_back(k);
      }
      d.cosets.push_back(std::move(coset));
    }
    p.cosets = std::move(d);
  }

  const auto q8 = candidates.back().elems;
  const Quaternion mw{-0.5, -0.5, -0.5, -0.5};
  const std::vector<Quaternion> c3{Quaternion{}, mw, mw * mw};
  if (contains_all(elems, q8, tol) && is_normal_in(elems, q8, tol) &&
      contains_all(elems, c3, tol) && q8.size() * c3.size() == elems.size()) {
    std::vector<bool> hit(elems.size(), false);
    bool unique = true;
    for (const auto& h : q8)
      for (const auto& c : c3) {
        const std::size_t k = find(elems, h * c, tol);
        if (k == kNone || hit[k]) unique = false;
        else hit[k] = true;
      }
    p.semidirect_check = unique;
  }
  return p;
}

GroupProfile group_profile(const Su2Closure& c, double tol) {
  const auto q = c.quaternions();
  return group_profile(q, tol);
}

std::string_view to_string(PolytopeKind k) {
  switch (k) {
    case PolytopeKind::Cell16: return "16-cell";
    case PolytopeKind::Tesseract: return "tesseract";
    case PolytopeKind::Cell24: return "24-cell";
    case PolytopeKind::Hexagon: return "hexagon";
    case PolytopeKind::TetrahedronPair: return "tetrahedron-pair";
    case PolytopeKind::Other: return "other";
  }
  return "other";
}

PolytopeId polytope_identify(std::span<const Quaternion> points, double tol) {
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (std::abs(points[k].norm() - 1.0) > tol) {
      throw Error(ErrorCode::NonUnitPoint,
                  "point " + std::to_string(k) + " has norm " +
                      std::to_string(points[k].norm()));
    }
    for (std::size_t j = 0; j < k; ++j)
      if (distance(points[j], points[k]) <= tol) {
        throw Error(ErrorCode::DuplicateElements,
                    "points " + std::to_string(j) + " and " +
                        std::to_string(k) + " coincide");
      }
  }
  PolytopeId id;
  if (points.empty()) return id;
  id.distance_spectrum = spectrum_of(points, 0, tol);
  id.uniform = true;
  for (std::size_t v = 1; v < points.size() && id.uniform; ++v)
    id.uniform = same_spectrum(spectrum_of(points, v, tol), id.distance_spectrum, tol);
  if (!id.uniform) return id;

  const double r2 = std::numbers::sqrt2;
  const double r3 = std::numbers::sqrt3;
  const struct {
    PolytopeKind kind;
    std::vector<ChordCount> spectrum;
  } templates[] = {
      {PolytopeKind::Cell16, {{r2, 6}, {2, 1}}},
      {PolytopeKind::Tesseract, {{1, 4}, {r2, 6}, {r3, 4}, {2, 1}}},
      {PolytopeKind::Cell24, {{1, 8}, {r2, 6}, {r3, 8}, {2, 1}}},
      {PolytopeKind::Hexagon, {{1, 2}, {r3, 2}, {2, 1}}},
      {PolytopeKind::TetrahedronPair,
       {{2 / r3, 3}, {2 * r2 / r3, 3}, {2, 1}}},
  };
  for (const auto& t : templates) {
    if (same_spectrum(id.distance_spectrum, t.spectrum, 1e-9)) {
      id.kind = t.kind;
      break;
    }
  }
  return id;
}

std::string_view to_string(DemitesseractClass c) {
  return c == DemitesseractClass::WB ? "WB" : "W†B";
}

DemitesseractClass demitesseract_class(const Quaternion& q) {
  for (double c : q.coords()) {
    if (std::abs(std::abs(c) - 0.5) > kGroupTol) {
      throw Error(ErrorCode::NotHalfInteger,
                  "coordinate " + std::to_string(c) + " is not +-1/2");
    }
  }
  return q.s * q.x * q.y * q.z > 0 ? DemitesseractClass::WB
                                   : DemitesseractClass::WdagB;
}

std::vector<AxisAngle> so3_image_table(const Su2Closure& c) {
  std::vector<AxisAngle> out;
  const auto qs = c.quaternions();
  for (std::size_t k = 0; k < qs.size(); k += 2) {
    const AxisAngle e = exponential_form(canonical(qs[k]));
    out.push_back({e.axis, 2 * e.angle});
  }
  return out;
}

std::vector<TableEntry> binary_tetrahedral_table() {
  const std::array<Quaternion, 4> base{
      Quaternion{1, 0, 0, 0}, Quaternion{0, 1, 0, 0}, Quaternion{0, 0, 1, 0},
      Quaternion{0, 0, 0, 1}};
  const std::array<Quaternion, 3> lead{Quaternion{1, 0, 0, 0},
                                       Quaternion{0.5, 0.5, 0.5, 0.5},
                                       Quaternion{0.5, -0.5, -0.5, -0.5}};
  const std::array<std::string, 4> bl{"", "I", "J", "K"};
  const std::array<std::string, 3> ll{"", "W", "W†"};
  std::vector<TableEntry> rows;
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t mu = 0; mu < 4; ++mu) {
      std::string label = ll[k] + bl[mu];
      if (label.empty()) label = "1";
      for (int sign : {1, -1}) {
        const Quaternion q0 = lead[k] * base[mu];
        const Quaternion q = sign > 0 ? q0 : -q0;
        const Complex mi{0.0, -1.0};
        rows.push_back({label, sign, q,
                        {q.s, mi * q.x, mi * q.y, mi * q.z},
                        exponential_form(q), rotation_vector(q)});
      }
    }
  return rows;
}

}  // namespace udes
