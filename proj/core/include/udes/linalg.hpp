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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "udes/error.hpp"

namespace udes {

using Complex = std::complex<double>;

inline constexpr double kUnitarityTol = 1e-10;
inline constexpr double kRankTol = 1e-10;
inline constexpr double kEqualityTol = 1e-10;

// Largest operator dimension the library is meant for (two-qubit
// superoperators live in 16x16).
inline constexpr std::size_t kMaxDim = 16;

/// Dense square complex matrix, row-major.
class Mat {
 public:
  Mat() = default;
  explicit Mat(std::size_t dim);
  Mat(std::size_t dim, std::vector<Complex> entries);
  Mat(std::initializer_list<std::initializer_list<Complex>> rows);

  static Mat identity(std::size_t dim);
  static Mat zero(std::size_t dim) { return Mat(dim); }
  /// |i><j| on a dim-dimensional space.
  static Mat unit(std::size_t dim, std::size_t i, std::size_t j);
  static Mat diagonal(std::span<const Complex> diag);

  std::size_t dim() const noexcept { return dim_; }
  std::span<const Complex> entries() const noexcept { return data_; }

  Complex operator()(std::size_t i, std::size_t j) const {
    return data_[i * dim_ + j];
  }
  Complex& operator()(std::size_t i, std::size_t j) {
    return data_[i * dim_ + j];
  }

  Mat adjoint() const;
  Mat transpose() const;
  Mat conj() const;
  Complex trace() const;

  Mat& operator+=(const Mat& other);
  Mat& operator-=(const Mat& other);
  Mat& operator*=(Complex s);

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator-(Mat a) { return a *= -1.0; }
  friend Mat operator*(Mat a, Complex s) { return a *= s; }
  friend Mat operator*(Complex s, Mat a) { return a *= s; }
  friend Mat operator*(const Mat& a, const Mat& b);

  bool operator==(const Mat&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// A matrix certified unitary at construction: ||U^dag U - 1||_HS <= tol.
class UnitaryMat {
 public:
  explicit UnitaryMat(Mat m, double tol = kUnitarityTol);

  const Mat& mat() const noexcept { return m_; }
  operator const Mat&() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.dim(); }
  Complex operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  UnitaryMat adjoint() const;
  /// Products and unit phases of certified unitaries are not re-checked.
  friend UnitaryMat operator*(const UnitaryMat& a, const UnitaryMat& b);
  friend UnitaryMat operator*(Complex phase, const UnitaryMat& u);

 private:
  struct Trusted {};
  UnitaryMat(Mat m, Trusted) : m_(std::move(m)) {}
  Mat m_;
};

/// (A (x) B)[(i,k),(j,l)] = A[i,j] B[k,l], flattening (i,k) -> i*dimB + k.
Mat kron(const Mat& a, const Mat& b);
/// U^{(x)t}; t >= 1.
Mat kron_power(const Mat& u, int t);

/// tr(A^dag B).
Complex hs_inner(const Mat& a, const Mat& b);
double hs_norm(const Mat& a);
double hs_distance(const Mat& a, const Mat& b);
bool approx_equal(const Mat& a, const Mat& b, double tol = kEqualityTol);

/// Numerical rank by Gaussian elimination with full pivoting. Pivots below
/// tol * (largest pivot) count as zero.
int rank(const Mat& a, double tol = kRankTol);

/// T A T^dag.
Mat change_of_basis(const Mat& a, const UnitaryMat& t);

Complex determinant(const Mat& a);
Mat commutator(const Mat& a, const Mat& b);

bool is_unitary(const Mat& a, double tol = kUnitarityTol);
bool is_hermitian(const Mat& a, double tol = kEqualityTol);
/// Hermitian positive semidefinite test via diagonally pivoted LDL^dag;
/// every pivot must be >= -tol.
bool is_positive_semidefinite(const Mat& a, double tol = kEqualityTol);

}  // namespace udes
