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

#include "udes/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace udes {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NotSpecialUnitary: return "NotSpecialUnitary";
    case ErrorCode::NonUnitAxis: return "NonUnitAxis";
    case ErrorCode::NonUnitQuaternion: return "NonUnitQuaternion";
    case ErrorCode::NotRotation: return "NotRotation";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::DuplicateElements: return "DuplicateElements";
    case ErrorCode::NotOrthogonalBasis: return "NotOrthogonalBasis";
    case ErrorCode::NotUnitaryElements: return "NotUnitaryElements";
    case ErrorCode::NotMinimal1Design: return "NotMinimal1Design";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::ProportionalElements: return "ProportionalElements";
    case ErrorCode::NonUnitPoint: return "NonUnitPoint";
    case ErrorCode::NotHalfInteger: return "NotHalfInteger";
    case ErrorCode::InternalConsistency: return "InternalConsistency";
  }
  return "Unknown";
}

namespace {

void require_same_dim(const Mat& a, const Mat& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(op) + ": " + std::to_string(a.dim()) + " vs " +
                    std::to_string(b.dim()));
  }
}

void require_finite(std::span<const Complex> entries) {
  for (const auto& z : entries) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(ErrorCode::InvalidArgument, "matrix entry is not finite");
    }
  }
}

}  // namespace

Mat::Mat(std::size_t dim) : dim_(dim), data_(dim * dim) {}

Mat::Mat(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim_ * dim_) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(dim_ * dim_) + " entries, got " +
                    std::to_string(data_.size()));
  }
  require_finite(data_);
}

Mat::Mat(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) {
      throw Error(ErrorCode::DimensionMismatch, "matrix literal is not square");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
  require_finite(data_);
}

Mat Mat::identity(std::size_t dim) {
  Mat m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::unit(std::size_t dim, std::size_t i, std::size_t j) {
  Mat m(dim);
  m(i, j) = 1.0;
  return m;
}

Mat Mat::diagonal(std::span<const Complex> diag) {
  Mat m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Mat Mat::adjoint() const {
  Mat r(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

Mat Mat::transpose() const {
  Mat r(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Mat Mat::conj() const {
  Mat r(*this);
  for (auto& z : r.data_) z = std::conj(z);
  return r;
}

Complex Mat::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

Mat& Mat::operator+=(const Mat& other) {
  require_same_dim(*this, other, "add");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& other) {
  require_same_dim(*this, other, "subtract");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

Mat& Mat::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  require_same_dim(a, b, "multiply");
  const std::size_t n = a.dim();
  Mat r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

UnitaryMat::UnitaryMat(Mat m, double tol) : m_(std::move(m)) {
  if (m_.dim() == 0) {
    throw Error(ErrorCode::InvalidArgument, "empty matrix");
  }
  if (!is_unitary(m_, tol)) {
    throw Error(ErrorCode::NotUnitary,
                "||U^dag U - 1||_HS = " +
                    std::to_string(hs_norm(m_.adjoint() * m_ -
                                           Mat::identity(m_.dim()))));
  }
}

UnitaryMat UnitaryMat::adjoint() const { return {m_.adjoint(), Trusted{}}; }

UnitaryMat operator*(const UnitaryMat& a, const UnitaryMat& b) {
  return {a.m_ * b.m_, UnitaryMat::Trusted{}};
}

UnitaryMat operator*(Complex phase, const UnitaryMat& u) {
  if (std::abs(std::abs(phase) - 1.0) > kUnitarityTol) {
    throw Error(ErrorCode::NotUnitary, "phase factor is not of unit modulus");
  }
  return {u.m_ * phase, UnitaryMat::Trusted{}};
}

Mat kron(const Mat& a, const Mat& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  Mat r(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l)
          r(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return r;
}

Mat kron_power(const Mat& u, int t) {
  if (t < 1) throw Error(ErrorCode::InvalidArgument, "tensor power t < 1");
  Mat r = u;
  for (int k = 1; k < t; ++k) r = kron(r, u);
  return r;
}

Complex hs_inner(const Mat& a, const Mat& b) {
  require_same_dim(a, b, "hs_inner");
  Complex s = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) s += std::conj(ea[k]) * eb[k];
  return s;
}

double hs_norm(const Mat& a) {
  double s = 0.0;
  for (const auto& z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

double hs_distance(const Mat& a, const Mat& b) {
  require_same_dim(a, b, "hs_distance");
  double s = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) s += std::norm(ea[k] - eb[k]);
  return std::sqrt(s);
}

bool approx_equal(const Mat& a, const Mat& b, double tol) {
  return a.dim() == b.dim() && hs_distance(a, b) <= tol;
}

int rank(const Mat& a, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "rank tol <= 0");
  const std::size_t n = a.dim();
  std::vector<Complex> m(a.entries().begin(), a.entries().end());
  auto at = [&](std::size_t i, std::size_t j) -> Complex& {
    return m[i * n + j];
  };
  double largest = 0.0;
  int r = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pi = step, pj = step;
    double best = -1.0;
    for (std::size_t i = step; i < n; ++i)
      for (std::size_t j = step; j < n; ++j)
        if (std::abs(at(i, j)) > best) {
          best = std::abs(at(i, j));
          pi = i;
          pj = j;
        }
    if (step == 0) largest = best;
    if (best <= tol * largest || best == 0.0) break;
    for (std::size_t j = 0; j < n; ++j) std::swap(at(step, j), at(pi, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(at(i, step), at(i, pj));
    const Complex pivot = at(step, step);
    for (std::size_t i = step + 1; i < n; ++i) {
      const Complex f = at(i, step) / pivot;
      if (f == Complex{}) continue;
      for (std::size_t j = step; j < n; ++j) at(i, j) -= f * at(step, j);
    }
    ++r;
  }
  return r;
}

Mat change_of_basis(const Mat& a, const UnitaryMat& t) {
  require_same_dim(a, t.mat(), "change_of_basis");
  return t.mat() * a * t.mat().adjoint();
}

Complex determinant(const Mat& a) {
  const std::size_t n = a.dim();
  std::vector<Complex> m(a.entries().begin(), a.entries().end());
  Complex det = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t i = c + 1; i < n; ++i)
      if (std::abs(m[i * n + c]) > std::abs(m[p * n + c])) p = i;
    if (m[p * n + c] == Complex{}) return 0.0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[c * n + j], m[p * n + j]);
      det = -det;
    }
    det *= m[c * n + c];
    for (std::size_t i = c + 1; i < n; ++i) {
      const Complex f = m[i * n + c] / m[c * n + c];
      for (std::size_t j = c; j < n; ++j) m[i * n + j] -= f * m[c * n + j];
    }
  }
  return det;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

bool is_unitary(const Mat& a, double tol) {
  return hs_distance(a.adjoint() * a, Mat::identity(a.dim())) <= tol;
}

bool is_hermitian(const Mat& a, double tol) {
  return hs_distance(a, a.adjoint()) <= tol;
}

bool is_positive_semidefinite(const Mat& a, double tol) {
  if (!is_hermitian(a, tol)) return false;
  const std::size_t n = a.dim();
  std::vector<Complex> m(a.entries().begin(), a.entries().end());
  auto at = [&](std::size_t i, std::size_t j) -> Complex& {
    return m[i * n + j];
  };
  std::vector<std::size_t> live(n);
  for (std::size_t i = 0; i < n; ++i) live[i] = i;
  while (!live.empty()) {
    auto best = std::max_element(live.begin(), live.end(),
                                 [&](std::size_t x, std::size_t y) {
                                   return at(x, x).real() < at(y, y).real();
                                 });
    const std::size_t p = *best;
    const double d = at(p, p).real();
    if (d < -tol) return false;
    if (d <= tol) {
      // Remaining block must vanish: a PSD matrix with a zero diagonal is 0.
      for (std::size_t i : live)
        for (std::size_t j : live)
          if (std::abs(at(i, j)) > std::sqrt(tol)) return false;
      return true;
    }
    live.erase(best);
    for (std::size_t i : live) {
      const Complex f = at(i, p) / d;
      for (std::size_t j : live) at(i, j) -= f * at(p, j);
    }
  }
  return true;
}

}  // namespace udes
