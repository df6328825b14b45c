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

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "udes/su2.hpp"
#include "udes/twirl.hpp"

namespace udes {

/// Both normalizations of every element, laid out as
/// [+c_0, -c_0, +c_1, -c_1, ...] with +c_a canonical, so the antipodal
/// partner of index k is pairing[k] == k ^ 1.
struct Su2Closure {
  UnitarySet original;
  std::vector<UnitaryMat> closure;
  std::vector<std::size_t> pairing;

  std::vector<Quaternion> quaternions() const;
};

/// Throws ProportionalElements if two elements differ only by a phase.
Su2Closure su2_closure(const UnitarySet& s);

struct CosetDecomposition {
  /// "1", "{+-1}", "{+-1,+-I}", "{+-1,+-J}", "{+-1,+-K}" or "Q8".
  std::string subgroup;
  /// Left cosets g H, each as indices into the element list; the first is H
  /// itself and cosets appear in order of their first element.
  std::vector<std::vector<std::size_t>> cosets;
};

struct GroupProfile {
  bool is_group = false;
  std::size_t order = 0;
  /// Order of each element; 0 when it exceeds the search cap.
  std::vector<int> element_orders;
  std::map<int, int> order_histogram;
  std::size_t center_size = 0;
  std::optional<CosetDecomposition> cosets;
  /// Q8 is a normal subgroup, <-W> is a subgroup, they meet trivially and
  /// every element factors uniquely as h c.
  bool semidirect_check = false;
};

inline constexpr double kGroupTol = 1e-9;

GroupProfile group_profile(std::span<const Quaternion> elems,
                           double tol = kGroupTol);
GroupProfile group_profile(const Su2Closure& c, double tol = kGroupTol);

enum class PolytopeKind { Cell16, Tesseract, Cell24, Hexagon, TetrahedronPair, Other };
std::string_view to_string(PolytopeKind k);

struct ChordCount {
  double length = 0.0;
  int count = 0;
};

struct PolytopeId {
  PolytopeKind kind = PolytopeKind::Other;
  /// Chord lengths from one vertex to all others, grouped; shared by every
  /// vertex whenever `uniform` holds.
  std::vector<ChordCount> distance_spectrum;
  bool uniform = false;
};

/// Matches per-vertex chord spectra against the 16-cell, tesseract, 24-cell,
/// hexagon and tetrahedron-pair (the cube inscribed in a great 3-sphere, the
/// union of two dual regular tetrahedra) templates. Throws NonUnitPoint and
/// DuplicateElements.
PolytopeId polytope_identify(std::span<const Quaternion> points,
                             double tol = kGroupTol);

enum class DemitesseractClass { WB, WdagB };
std::string_view to_string(DemitesseractClass c);

/// Which of the W-cosets of the Pauli quaternions a point (+-1/2, ...)
/// belongs to: W B if s x y z > 0. Throws NotHalfInteger.
DemitesseractClass demitesseract_class(const Quaternion& q);

/// Axis-angle of so3_rep for the canonical element of each antipodal pair,
/// angle in [0, pi]; the axis is zero for the identity.
std::vector<AxisAngle> so3_image_table(const Su2Closure& c);

/// One element of the binary tetrahedral group in the layout of the
/// reference table: row label (1, I, ..., W^dag K), sign, and its faces.
struct TableEntry {
  std::string row;
  int sign = 1;
  Quaternion q;
  /// U = sum_mu pauli[mu] X_mu.
  std::array<Complex, 4> pauli;
  /// U = exp(-i angle axis.X), angle in [0, pi].
  AxisAngle exp_form;
  Vec3 so3;
};

std::vector<TableEntry> binary_tetrahedral_table();

}  // namespace udes
