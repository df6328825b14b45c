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

#include "udes/twirl.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "udes/qubit.hpp"
#include "udes/su2.hpp"

namespace udes {

namespace {

void require_order(int t) {
  if (t < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "order t must be >= 1, got " + std::to_string(t));
  }
}

std::size_t ipow(std::size_t base, int e) {
  std::size_t r = 1;
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}

void require_dim(const Mat& a, std::size_t dim) {
  if (a.dim() != dim) {
    throw Error(ErrorCode::DimensionMismatch,
                "operator has dim " + std::to_string(a.dim()) + ", expected " +
                    std::to_string(dim));
  }
}

SuperOp superop_from(std::size_t n, const auto& map) {
  Mat s(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const Mat image = map(Mat::unit(n, i, j));
      const std::size_t col = i + j * n;
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) s(r + c * n, col) = image(r, c);
    }
  return {s};
}

// Accumulates sum x and sum |x|^2 entry-wise.
struct Moments {
  explicit Moments(std::size_t n) : sum(n), sq(n * n, 0.0) {}
  void add(std::size_t k, Complex x) {
    sum(k / sum.dim(), k % sum.dim()) += x;
    sq[k] += std::norm(x);
  }
  McEstimate finish(std::size_t count) const {
    const double n = static_cast<double>(count);
    McEstimate e{sum * (1.0 / n), 0.0, count};
    if (count > 1) {
      double var = 0.0;
      const auto m = e.mean.entries();
      for (std::size_t k = 0; k < sq.size(); ++k) {
        var += std::max(0.0, (sq[k] - n * std::norm(m[k])) / (n - 1));
      }
      e.std_error = std::sqrt(var / n);
    }
    return e;
  }
  Mat sum;
  std::vector<double> sq;
};

}  // namespace

UnitarySet::UnitarySet(std::vector<UnitaryMat> elems, double tol)
    : elems_(std::move(elems)) {
  if (elems_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "unitary set is empty");
  }
  for (std::size_t a = 0; a < elems_.size(); ++a) {
    if (elems_[a].dim() != elems_[0].dim()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "element " + std::to_string(a) + " has dim " +
                      std::to_string(elems_[a].dim()));
    }
    for (std::size_t b = 0; b < a; ++b) {
      if (hs_distance(elems_[a], elems_[b]) <= tol) {
        throw Error(ErrorCode::DuplicateElements,
                    "elements " + std::to_string(b) + " and " +
                        std::to_string(a) + " coincide");
      }
    }
  }
}

std::size_t SuperOp::op_dim() const {
  const auto n = static_cast<std::size_t>(
      std::llround(std::sqrt(static_cast<double>(matrix.dim()))));
  if (n * n != matrix.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "superoperator dim is not a perfect square");
  }
  return n;
}

std::vector<Complex> vectorize(const Mat& a) {
  const std::size_t n = a.dim();
  std::vector<Complex> v(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) v[i + j * n] = a(i, j);
  return v;
}

Mat unvectorize(std::span<const Complex> v, std::size_t n) {
  if (v.size() != n * n) {
    throw Error(ErrorCode::DimensionMismatch, "vector length is not n^2");
  }
  Mat a(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) a(i, j) = v[i + j * n];
  return a;
}

Mat apply(const SuperOp& s, const Mat& a) {
  const std::size_t n = s.op_dim();
  require_dim(a, n);
  const auto in = vectorize(a);
  std::vector<Complex> out(n * n);
  for (std::size_t r = 0; r < n * n; ++r)
    for (std::size_t k = 0; k < n * n; ++k) out[r] += s.matrix(r, k) * in[k];
  return unvectorize(out, n);
}

Mat twirl_finite(const UnitarySet& s, int t, const Mat& a) {
  require_order(t);
  require_dim(a, ipow(s.dim(), t));
  Mat acc(a.dim());
  for (const auto& u : s) {
    const Mat v = kron_power(u, t);
    acc += v * a * v.adjoint();
  }
  return acc * (1.0 / static_cast<double>(s.size()));
}

Mat haar_twirl(int t, const Mat& a) {
  if (t == 1) {
    require_dim(a, 2);
    return Mat::identity(2) * (a.trace() * 0.5);
  }
  if (t == 2) {
    require_dim(a, 4);
    const auto st = singlet_triplet();
    return st.ps * hs_inner(st.ps, a) + st.pt * (hs_inner(st.pt, a) / 3.0);
  }
  throw Error(ErrorCode::UnsupportedOrder,
              "no closed-form Haar twirl for t = " + std::to_string(t));
}

SuperOp superop_of_twirl(const UnitarySet& s, int t) {
  require_order(t);
  const std::size_t n = ipow(s.dim(), t);
  Mat acc(n * n);
  for (const auto& u : s) {
    const Mat v = kron_power(u, t);
    acc += kron(v.conj(), v);
  }
  return {acc * (1.0 / static_cast<double>(s.size()))};
}

SuperOp superop_of_haar_twirl(int t) {
  if (t != 1 && t != 2) {
    throw Error(ErrorCode::UnsupportedOrder,
                "no closed-form Haar twirl for t = " + std::to_string(t));
  }
  return superop_from(ipow(2, t), [t](const Mat& e) { return haar_twirl(t, e); });
}

Mat choi(const SuperOp& s) {
  const std::size_t n = s.op_dim();
  Mat c(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Mat image = apply(s, Mat::unit(n, i, j));
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t q = 0; q < n; ++q) c(i * n + r, j * n + q) = image(r, q);
    }
  return c;
}

int choi_rank(const SuperOp& s, double tol) { return rank(choi(s), tol); }

std::optional<double> haar_frame_potential(int t) {
  if (t == 1) return 1.0;
  if (t == 2) return 2.0;
  return std::nullopt;
}

FramePotentialReport frame_potential(const UnitarySet& s, int t) {
  require_order(t);
  double sum = 0.0;
  for (const auto& a : s)
    for (const auto& b : s) sum += std::pow(std::norm(hs_inner(a, b)), t);
  const double n = static_cast<double>(s.size());
  FramePotentialReport r;
  r.t = t;
  r.value = sum / (n * n);
  r.haar_value = haar_frame_potential(t);
  if (r.haar_value) r.gap = r.value - *r.haar_value;
  return r;
}

HaarSampler::HaarSampler(std::uint64_t seed, std::uint64_t counter,
                         std::uint64_t stream)
    : seed_(seed), stream_(stream), counter_(0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
  engine_.discard(4 * counter);
  counter_ = counter;
}

HaarSampler HaarSampler::split(std::uint64_t stream) const {
  return HaarSampler(seed_, 0, stream_ * 0x9E3779B97F4A7C15ULL + stream + 1);
}

double HaarSampler::uniform() {
  // 53 random bits mapped to (0, 1].
  return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
}

std::array<double, 4> HaarSampler::next_quaternion() {
  std::array<double, 4> g{};
  for (int k = 0; k < 4; k += 2) {
    const double r = std::sqrt(-2.0 * std::log(uniform()));
    const double phi = 2.0 * std::numbers::pi * uniform();
    g[k] = r * std::cos(phi);
    g[k + 1] = r * std::sin(phi);
  }
  ++counter_;
  const double len = std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2] + g[3] * g[3]);
  if (len == 0.0) return {1.0, 0.0, 0.0, 0.0};
  return {g[0] / len, g[1] / len, g[2] / len, g[3] / len};
}

UnitaryMat haar_sample(HaarSampler& h) {
  const auto q = h.next_quaternion();
  return su2_of_quaternion({q[0], q[1], q[2], q[3]}, 1e-10);
}

McEstimate mc_haar_twirl(HaarSampler& h, int t, const Mat& a, std::size_t n) {
  require_order(t);
  require_dim(a, ipow(2, t));
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "sample count is 0");
  Moments m(a.dim());
  for (std::size_t k = 0; k < n; ++k) {
    const Mat v = kron_power(haar_sample(h), t);
    const Mat x = v * a * v.adjoint();
    const auto e = x.entries();
    for (std::size_t q = 0; q < e.size(); ++q) m.add(q, e[q]);
  }
  return m.finish(n);
}

std::vector<McEstimate> mc_haar_twirl_basis(HaarSampler& h, int t,
                                            std::size_t n) {
  require_order(t);
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "sample count is 0");
  const std::size_t d = ipow(2, t);
  std::vector<Moments> acc(d * d, Moments(d));
  for (std::size_t k = 0; k < n; ++k) {
    const Mat v = kron_power(haar_sample(h), t);
    // V E(i,j) V^dag has entries V(r, i) conj(V(c, j)).
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        auto& m = acc[i * d + j];
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t c = 0; c < d; ++c)
            m.add(r * d + c, v(r, i) * std::conj(v(c, j)));
      }
  }
  std::vector<McEstimate> out;
  out.reserve(acc.size());
  for (const auto& m : acc) out.push_back(m.finish(n));
  return out;
}

}  // namespace udes
