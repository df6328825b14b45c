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
#include <string_view>

#include "udes/linalg.hpp"
#include "udes/su2.hpp"

namespace udes {

/// X_0 = 1, X_1 = X, X_2 = Y, X_3 = Z. Throws InvalidArgument outside 0..3.
UnitaryMat pauli(int mu);

/// Global ordering of the Bell basis.
enum class BellLabel { PsiMinus = 0, PhiMinus = 1, PsiPlus = 2, PhiPlus = 3 };
inline constexpr std::array<BellLabel, 4> kBellOrder{
    BellLabel::PsiMinus, BellLabel::PhiMinus, BellLabel::PsiPlus,
    BellLabel::PhiPlus};
std::string_view to_string(BellLabel b);

/// Components in the computational basis |00>, |01>, |10>, |11>.
std::array<Complex, 4> bell_vector(BellLabel b);
Mat bell_projector(BellLabel b);

/// T with T A T^dag the matrix of A in the ordered Bell basis.
UnitaryMat bell_transition();

/// A = (a0 1 + a.X)/2 with a_mu = tr(X_mu A).
struct BlochForm {
  Complex a0;
  std::array<Complex, 3> a;
};
BlochForm bloch_decompose(const Mat& a);
Mat bloch_reconstruct(const BlochForm& b);

struct SingletTriplet {
  Mat ps;
  Mat pt;
};
SingletTriplet singlet_triplet();

/// SWAP = (1/2) sum_mu X_mu (x) X_mu.
UnitaryMat swap2();

/// Expectation values of a two-qubit operator on the singlet/triplet
/// projectors and on the four Bell projectors (indexed by BellLabel).
struct TwirlCoefficients {
  double f_s = 0.0;
  double f_t = 0.0;
  std::array<double, 4> f_beta{};
};
TwirlCoefficients twirl_coefficients(const Mat& rho);

/// Keeps only the diagonal of A in the Bell basis (Hadamard product with the
/// identity pattern), returned in the computational basis.
Mat bell_dephase(const Mat& a);

/// Spin-1 Wigner matrix in the (m = 1, 0, -1) basis.
Mat wigner_d1(const EulerAngles& e);

/// Transition between the Cartesian and spherical bases:
/// wigner_d1(e) = P^dag so3_rep(U(e)) P.
Mat spherical_transition();

/// U (x) U in the ordered Bell basis.
Mat uu_in_bell_basis(const UnitaryMat& u);

/// The adapted Bell basis (Psi-, -Phi-, i Phi+, Psi+). Note that the
/// adapted order swaps the Phi+ and Psi+ slots relative to kBellOrder.
UnitaryMat adapted_bell_transition();

/// Triplet block of U (x) U in the adapted Bell basis; real and equal to
/// so3_rep(U). Throws NotSpecialUnitary.
Mat adapted_bell_block(const UnitaryMat& u);

}  // namespace udes
