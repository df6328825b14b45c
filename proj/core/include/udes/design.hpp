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
#include <string>
#include <string_view>
#include <vector>

#include "udes/linalg.hpp"
#include "udes/twirl.hpp"

namespace udes {

inline constexpr double kDesignTol = 1e-10;

/// Verdict for (S, t). frame_gap is F_t(S) - F_t(Haar). twirl_deviation_sq
/// is sum over the operator basis E(i,j) of ||twirl_S(E) - twirl_Haar(E)||^2,
/// which equals frame_gap exactly; max_twirl_deviation is the largest single
/// ||twirl_S(E) - twirl_Haar(E)||.
struct DesignReport {
  int t = 0;
  bool is_design = false;
  double frame_gap = 0.0;
  double twirl_deviation_sq = 0.0;
  double max_twirl_deviation = 0.0;
  bool method_agreement = true;
  double tol = kDesignTol;
};

/// Runs both criteria. The set is a design when frame_gap <= tol; the twirl
/// criterion must agree or InternalConsistency is thrown. threads > 1 fans
/// the operator-basis loop out; the reduction order is fixed so reports are
/// bit-identical for any thread count. Throws UnsupportedOrder unless t is
/// 1 or 2 and the set is 2x2.
DesignReport verify_design(const UnitarySet& s, int t, double tol = kDesignTol,
                           unsigned threads = 1);

/// || sum_a so3_rep(U_a) ||_F <= tol.
bool verify_rotation_sum(const UnitarySet& s, double tol = kDesignTol);

/// Element sigma(mu) of the input equals phases[mu] * V X_mu Vp, where
/// sigma fixes 0 and permutes 1..3.
struct OneDesignFrame {
  UnitaryMat v;
  UnitaryMat vp;
  std::array<Complex, 4> phases;
  std::array<int, 4> permutation;

  std::vector<UnitaryMat> reconstruct() const;
};

OneDesignFrame classify_min_1design(const UnitarySet& s, double tol = 1e-9);

/// S, then W~ S, then W~^dag S with W~ = V W V^dag from the frame of S.
UnitarySet extend_to_2design(const UnitarySet& s);

/// Completions of a normalized Pauli basis B* to a normalization of the
/// 12-element design, each returned as B*, middle block, W^dag B*:
///   n_map:              middle = W B*
///   n_prime_map:        middle = (W^dag B*)^dag
///   n_double_prime_map: middle = -(W^dag B*)^dag
UnitarySet n_map(const UnitarySet& b);
UnitarySet n_prime_map(const UnitarySet& b);
UnitarySet n_double_prime_map(const UnitarySet& b);

struct NamedDesign {
  std::string name;
  UnitarySet set;
  std::vector<std::string> labels;
};

/// "pauli" (alias "B"), "B0", "D", "D0", "D1", "D2"; UnknownName otherwise.
NamedDesign named_design(std::string_view name);
std::vector<std::string> named_design_names();

/// d^4 - 2 d^2 + 2.
long long clifford_bound(int d);

}  // namespace udes
