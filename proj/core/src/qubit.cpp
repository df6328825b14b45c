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

#include "udes/qubit.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace udes {

namespace {

constexpr Complex kI{0.0, 1.0};
const double kRt = 1.0 / std::numbers::sqrt2;

void require_dim(const Mat& m, std::size_t dim) {
  if (m.dim() != dim) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected dim " + std::to_string(dim) + ", got " +
                    std::to_string(m.dim()));
  }
}

// Rows are the conjugated basis vectors, so T A T^dag expresses A in that
// basis.
UnitaryMat transition_from(const std::array<std::array<Complex, 4>, 4>& v) {
  Mat t(4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) t(r, c) = std::conj(v[r][c]);
  return UnitaryMat(t);
}

}  // namespace

UnitaryMat pauli(int mu) {
  switch (mu) {
    case 0: return UnitaryMat(Mat::identity(2));
    case 1: return UnitaryMat(Mat{{0.0, 1.0}, {1.0, 0.0}});
    case 2: return UnitaryMat(Mat{{0.0, -kI}, {kI, 0.0}});
    case 3: return UnitaryMat(Mat{{1.0, 0.0}, {0.0, -1.0}});
    default:
      throw Error(ErrorCode::InvalidArgument,
                  "Pauli index " + std::to_string(mu) + " outside 0..3");
  }
}

std::string_view to_string(BellLabel b) {
  switch (b) {
    case BellLabel::PsiMinus: return "Psi-";
    case BellLabel::PhiMinus: return "Phi-";
    case BellLabel::PsiPlus: return "Psi+";
    case BellLabel::PhiPlus: return "Phi+";
  }
  return "?";
}

std::array<Complex, 4> bell_vector(BellLabel b) {
  switch (b) {
    case BellLabel::PsiMinus: return {0.0, kRt, -kRt, 0.0};
    case BellLabel::PhiMinus: return {kRt, 0.0, 0.0, -kRt};
    case BellLabel::PsiPlus: return {0.0, kRt, kRt, 0.0};
    case BellLabel::PhiPlus: return {kRt, 0.0, 0.0, kRt};
  }
  throw Error(ErrorCode::InvalidArgument, "bad Bell label");
}

Mat bell_projector(BellLabel b) {
  const auto v = bell_vector(b);
  Mat p(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) p(i, j) = v[i] * std::conj(v[j]);
  return p;
}

UnitaryMat bell_transition() {
  static const UnitaryMat t = transition_from(
      {bell_vector(kBellOrder[0]), bell_vector(kBellOrder[1]),
       bell_vector(kBellOrder[2]), bell_vector(kBellOrder[3])});
  return t;
}

BlochForm bloch_decompose(const Mat& a) {
  require_dim(a, 2);
  BlochForm b;
  b.a0 = a.trace();
  for (int k = 0; k < 3; ++k) b.a[k] = (pauli(k + 1).mat() * a).trace();
  return b;
}

Mat bloch_reconstruct(const BlochForm& b) {
  Mat a = Mat::identity(2) * b.a0;
  for (int k = 0; k < 3; ++k) a += pauli(k + 1).mat() * b.a[k];
  return a * 0.5;
}

SingletTriplet singlet_triplet() {
  const Mat one = Mat::identity(4);
  const Mat ps = (one - swap2().mat()) * 0.5;
  return {ps, one - ps};
}

UnitaryMat swap2() {
  Mat s(4);
  for (int mu = 0; mu < 4; ++mu) {
    const Mat p = pauli(mu);
    s += kron(p, p);
  }
  return UnitaryMat(s * 0.5);
}

TwirlCoefficients twirl_coefficients(const Mat& rho) {
  require_dim(rho, 4);
  const auto st = singlet_triplet();
  TwirlCoefficients c;
  c.f_s = hs_inner(st.ps, rho).real();
  c.f_t = hs_inner(st.pt, rho).real();
  for (BellLabel b : kBellOrder) {
    c.f_beta[static_cast<std::size_t>(b)] =
        hs_inner(bell_projector(b), rho).real();
  }
  return c;
}

Mat bell_dephase(const Mat& a) {
  require_dim(a, 4);
  const UnitaryMat t = bell_transition();
  Mat in_bell = change_of_basis(a, t);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) in_bell(i, j) = 0.0;
  return change_of_basis(in_bell, t.adjoint());
}

Mat wigner_d1(const EulerAngles& e) {
  const double cb = std::cos(e.beta);
  const double sb = std::sin(e.beta);
  const double c2 = std::pow(std::cos(e.beta / 2), 2);
  const double s2 = std::pow(std::sin(e.beta / 2), 2);
  auto ph = [](double angle) { return std::polar(1.0, angle); };
  const double a = e.alpha;
  const double g = e.gamma;
  return Mat{
      {ph(-(a + g)) * c2, -ph(-a) * sb * kRt, ph(-(a - g)) * s2},
      {ph(-g) * sb * kRt, cb, -ph(g) * sb * kRt},
      {ph(a - g) * s2, ph(a) * sb * kRt, ph(a + g) * c2},
  };
}

Mat spherical_transition() {
  return Mat{{-kRt, 0.0, kRt}, {-kI * kRt, 0.0, -kI * kRt}, {0.0, 1.0, 0.0}};
}

Mat uu_in_bell_basis(const UnitaryMat& u) {
  require_dim(u, 2);
  return change_of_basis(kron(u, u), bell_transition());
}

UnitaryMat adapted_bell_transition() {
  auto scaled = [](std::array<Complex, 4> v, Complex f) {
    for (auto& z : v) z *= f;
    return v;
  };
  static const UnitaryMat t = transition_from(
      {bell_vector(BellLabel::PsiMinus),
       scaled(bell_vector(BellLabel::PhiMinus), -1.0),
       scaled(bell_vector(BellLabel::PhiPlus), kI),
       bell_vector(BellLabel::PsiPlus)});
  return t;
}

Mat adapted_bell_block(const UnitaryMat& u) {
  require_dim(u, 2);
  const Complex det = determinant(u);
  if (std::abs(det - 1.0) > kUnitarityTol) {
    throw Error(ErrorCode::NotSpecialUnitary, "adapted_bell_block needs det 1");
  }
  const Mat full = change_of_basis(kron(u, u), adapted_bell_transition());
  Mat block(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) block(i, j) = full(i + 1, j + 1);
  return block;
}

}  // namespace udes
