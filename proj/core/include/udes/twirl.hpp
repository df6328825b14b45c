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
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "udes/linalg.hpp"

namespace udes {

/// Ordered, nonempty set of same-dimension unitaries, pairwise distinct:
/// ||U_a - U_b||_HS > tol for a != b. Multisets are rejected.
class UnitarySet {
 public:
  explicit UnitarySet(std::vector<UnitaryMat> elems, double tol = kEqualityTol);

  std::size_t dim() const noexcept { return elems_.front().dim(); }
  std::size_t size() const noexcept { return elems_.size(); }
  const UnitaryMat& operator[](std::size_t k) const { return elems_[k]; }
  const std::vector<UnitaryMat>& elems() const noexcept { return elems_; }
  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }

 private:
  std::vector<UnitaryMat> elems_;
};

/// Linear map on n x n operators, stored as an n^2 x n^2 matrix acting on
/// column-stacked vectors: vec(A)[i + j n] = A(i, j).
struct SuperOp {
  Mat matrix;
  std::size_t op_dim() const;
};

std::vector<Complex> vectorize(const Mat& a);
Mat unvectorize(std::span<const Complex> v, std::size_t n);
Mat apply(const SuperOp& s, const Mat& a);

/// (1/N) sum_a U_a^{(x)t} A U_a^{dag (x)t}.
Mat twirl_finite(const UnitarySet& s, int t, const Mat& a);

/// Closed-form Haar twirl on U(2) for t = 1, 2; UnsupportedOrder otherwise.
///   t = 1: tr(A) 1/2
///   t = 2: <P_s, A> P_s + <P_t, A> P_t / 3
Mat haar_twirl(int t, const Mat& a);

SuperOp superop_of_twirl(const UnitarySet& s, int t);
SuperOp superop_of_haar_twirl(int t);

/// sum_ij E(i,j) (x) Phi(E(i,j)).
Mat choi(const SuperOp& s);
int choi_rank(const SuperOp& s, double tol = kRankTol);

/// Haar frame potential of U(2); known for t = 1, 2 only.
std::optional<double> haar_frame_potential(int t);

struct FramePotentialReport {
  int t = 0;
  double value = 0.0;
  std::optional<double> haar_value;
  std::optional<double> gap;
};

/// (1/N^2) sum_{a,b} |tr(U_a^dag U_b)|^{2t}.
FramePotentialReport frame_potential(const UnitarySet& s, int t);

/// Deterministic source of Haar-random SU(2) elements. A sample is a
/// normalized vector of four Gaussians, each pair produced by Box-Muller
/// from two uniform draws, so sample k consumes exactly draws 4k..4k+3 and
/// any (seed, stream, counter) state can be rebuilt directly.
class HaarSampler {
 public:
  explicit HaarSampler(std::uint64_t seed, std::uint64_t counter = 0,
                       std::uint64_t stream = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }
  std::uint64_t counter() const noexcept { return counter_; }

  /// Independent child stream for concurrent use.
  HaarSampler split(std::uint64_t stream) const;

  /// Unit quaternion (s, x, y, z) of the next sample.
  std::array<double, 4> next_quaternion();

 private:
  double uniform();

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_;
  std::mt19937_64 engine_;
};

UnitaryMat haar_sample(HaarSampler& h);

/// Sample mean plus its standard error in HS norm,
/// sqrt(sum over entries of the sample variance / n).
struct McEstimate {
  Mat mean;
  double std_error = 0.0;
  std::size_t samples = 0;
};

McEstimate mc_haar_twirl(HaarSampler& h, int t, const Mat& a, std::size_t n);

/// The same estimator for every E(i,j) of the 2^t-dimensional operator
/// basis at once, reusing each sample; index i * 2^t + j.
std::vector<McEstimate> mc_haar_twirl_basis(HaarSampler& h, int t,
                                            std::size_t n);

}  // namespace udes
