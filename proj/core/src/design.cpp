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

#include "udes/design.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "udes/qubit.hpp"
#include "udes/su2.hpp"

namespace udes {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_qubit_set(const UnitarySet& s) {
  if (s.dim() != 2) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected 2x2 unitaries, got dim " + std::to_string(s.dim()));
  }
}

// ||twirl_S(E) - twirl_Haar(E)||_HS for every E(i,j), index i * n + j.
std::vector<double> basis_deviations(const UnitarySet& s, int t,
                                     unsigned threads) {
  const std::size_t n = t == 1 ? 2 : 4;
  std::vector<double> dev(n * n);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const Mat e = Mat::unit(n, k / n, k % n);
      dev[k] = hs_distance(twirl_finite(s, t, e), haar_twirl(t, e));
    }
  };
  const std::size_t workers =
      std::clamp<std::size_t>(threads, 1, dev.size());
  if (workers == 1) {
    work(0, dev.size());
    return dev;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (dev.size() + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(dev.size(), begin + chunk);
    if (begin < end) pool.emplace_back(work, begin, end);
  }
  for (auto& th : pool) th.join();
  return dev;
}

UnitaryMat neg(const UnitaryMat& u) { return Complex{-1.0, 0.0} * u; }

std::vector<UnitaryMat> left_mul(const UnitaryMat& w, const UnitarySet& s) {
  std::vector<UnitaryMat> out;
  for (const auto& u : s) out.push_back(w * u);
  return out;
}

UnitarySet join(std::initializer_list<std::vector<UnitaryMat>> blocks) {
  std::vector<UnitaryMat> all;
  for (const auto& b : blocks) all.insert(all.end(), b.begin(), b.end());
  return UnitarySet(std::move(all));
}

void require_four(const UnitarySet& b) {
  require_qubit_set(b);
  if (b.size() != 4) {
    throw Error(ErrorCode::InvalidArgument,
                "expected a 4-element normalized Pauli basis");
  }
}

}  // namespace

DesignReport verify_design(const UnitarySet& s, int t, double tol,
                           unsigned threads) {
  if (t != 1 && t != 2) {
    throw Error(ErrorCode::UnsupportedOrder,
                "design verification needs t in {1, 2}, got " +
                    std::to_string(t));
  }
  require_qubit_set(s);
  if (!(tol >= 0.0)) throw Error(ErrorCode::InvalidArgument, "tol < 0");

  DesignReport r;
  r.t = t;
  r.tol = tol;
  r.frame_gap = *frame_potential(s, t).gap;
  const auto dev = basis_deviations(s, t, threads);
  for (double d : dev) {
    r.twirl_deviation_sq += d * d;
    r.max_twirl_deviation = std::max(r.max_twirl_deviation, d);
  }
  const bool by_frame = r.frame_gap <= tol;
  const bool by_twirl = r.twirl_deviation_sq <= tol;
  r.method_agreement =
      by_frame == by_twirl &&
      std::abs(r.frame_gap - r.twirl_deviation_sq) <=
          1e-9 * (1.0 + std::abs(r.frame_gap));
  if (!r.method_agreement) {
    throw Error(ErrorCode::InternalConsistency,
                "frame gap " + std::to_string(r.frame_gap) +
                    " vs summed twirl deviation " +
                    std::to_string(r.twirl_deviation_sq));
  }
  r.is_design = by_frame;
  return r;
}

bool verify_rotation_sum(const UnitarySet& s, double tol) {
  require_qubit_set(s);
  RotMat sum{};
  for (const auto& u : s) sum = sum + so3_rep(u);
  return frobenius(sum) <= tol;
}

std::vector<UnitaryMat> OneDesignFrame::reconstruct() const {
  std::vector<UnitaryMat> out(4, v);
  for (int mu = 0; mu < 4; ++mu) {
    out[permutation[mu]] = phases[mu] * (v * pauli(mu) * vp);
  }
  return out;
}

OneDesignFrame classify_min_1design(const UnitarySet& s, double tol) {
  require_qubit_set(s);
  if (s.size() != 4) {
    throw Error(ErrorCode::NotOrthogonalBasis,
                "a minimal 1-design has 4 elements, got " +
                    std::to_string(s.size()));
  }
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (std::abs(hs_inner(s[a], s[b])) > tol) {
        throw Error(ErrorCode::NotOrthogonalBasis,
                    "elements " + std::to_string(b) + " and " +
                        std::to_string(a) + " are not HS-orthogonal");
      }

  std::array<Complex, 4> phase{};
  std::vector<UnitaryMat> special;
  for (const auto& u : s) {
    const UnitaryMat v = normalize_to_su2(u).first;
    // Read the phase off the largest entry.
    std::size_t best = 0;
    for (std::size_t k = 1; k < 4; ++k)
      if (std::abs(v.mat().entries()[k]) > std::abs(v.mat().entries()[best]))
        best = k;
    const Complex c = u.mat().entries()[best] / v.mat().entries()[best];
    phase[special.size()] = c / std::abs(c);
    special.push_back(v);
  }

  // V_0^dag V_i = -i n_i.X.
  std::array<Vec3, 4> n{};
  for (std::size_t i = 1; i < 4; ++i) {
    n[i] = quaternion_of(special[0].adjoint() * special[i], 1e-9).vec();
  }
  const RotMat cols = [&] {
    RotMat r;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < 3; ++k) r(i, k) = n[k + 1][i];
    return r;
  }();
  const std::array<int, 4> sigma = cols.det() > 0 ? std::array<int, 4>{0, 1, 2, 3}
                                                  : std::array<int, 4>{0, 1, 3, 2};
  RotMat rot;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) rot(i, k) = n[sigma[k + 1]][i];

  const UnitaryMat vrot = [&] {
    try {
      return su2_from_rotation(rot, 1e-8).first;
    } catch (const Error& e) {
      throw Error(ErrorCode::NotMinimal1Design, e.what());
    }
  }();
  OneDesignFrame f{special[0] * vrot, vrot.adjoint(), {}, sigma};
  f.phases[0] = phase[0];
  for (int k = 1; k < 4; ++k) f.phases[k] = -kI * phase[sigma[k]];

  const auto rebuilt = f.reconstruct();
  for (std::size_t a = 0; a < 4; ++a) {
    if (hs_distance(rebuilt[a], s[a]) > tol) {
      throw Error(ErrorCode::NotMinimal1Design,
                  "frame does not reconstruct element " + std::to_string(a));
    }
  }
  return f;
}

UnitarySet extend_to_2design(const UnitarySet& s) {
  OneDesignFrame f = [&] {
    try {
      return classify_min_1design(s);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::DimensionMismatch) throw;
      throw Error(ErrorCode::NotMinimal1Design, e.what());
    }
  }();
  const UnitaryMat w = f.v * w_gate() * f.v.adjoint();
  return join({s.elems(), left_mul(w, s), left_mul(w.adjoint(), s)});
}

UnitarySet n_map(const UnitarySet& b) {
  require_four(b);
  const UnitaryMat w = w_gate();
  return join({b.elems(), left_mul(w, b), left_mul(w.adjoint(), b)});
}

UnitarySet n_prime_map(const UnitarySet& b) {
  require_four(b);
  const auto lower = left_mul(w_gate().adjoint(), b);
  std::vector<UnitaryMat> mid;
  for (const auto& u : lower) mid.push_back(u.adjoint());
  return join({b.elems(), mid, lower});
}

UnitarySet n_double_prime_map(const UnitarySet& b) {
  require_four(b);
  const auto lower = left_mul(w_gate().adjoint(), b);
  std::vector<UnitaryMat> mid;
  for (const auto& u : lower) mid.push_back(neg(u.adjoint()));
  return join({b.elems(), mid, lower});
}

NamedDesign named_design(std::string_view name) {
  const UnitaryMat one = pauli(0);
  const UnitaryMat w = w_gate();
  const UnitaryMat wd = w.adjoint();
  const std::array<UnitaryMat, 4> x{pauli(0), pauli(1), pauli(2), pauli(3)};
  // I_i = -i X_i.
  const std::array<UnitaryMat, 4> q{one, -kI * x[1], -kI * x[2], -kI * x[3]};
  const std::array<std::string, 4> xl{"1", "X", "Y", "Z"};
  const std::array<std::string, 4> ql{"1", "I", "J", "K"};

  // sign[k][mu] multiplies W^k-block element mu, blocks ordered 1, W, W^dag.
  auto twelve = [&](const std::array<UnitaryMat, 4>& base,
                    const std::array<std::string, 4>& bl,
                    const std::array<std::array<int, 4>, 3>& sign) {
    std::vector<UnitaryMat> elems;
    std::vector<std::string> labels;
    const std::array<UnitaryMat, 3> lead{one, w, wd};
    const std::array<std::string, 3> ll{"", "W", "W†"};
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t mu = 0; mu < 4; ++mu) {
        const UnitaryMat u = lead[k] * base[mu];
        elems.push_back(sign[k][mu] < 0 ? neg(u) : u);
        std::string l = k == 0 ? bl[mu] : (mu == 0 ? ll[k] : ll[k] + bl[mu]);
        labels.push_back(sign[k][mu] < 0 ? "-" + l : l);
      }
    return std::make_pair(UnitarySet(std::move(elems)), std::move(labels));
  };
  constexpr std::array<int, 4> P{1, 1, 1, 1};
  constexpr std::array<int, 4> N{1, -1, -1, -1};
  constexpr std::array<int, 4> M{-1, -1, -1, -1};

  if (name == "pauli" || name == "B") {
    return {"pauli", UnitarySet({x[0], x[1], x[2], x[3]}),
            {xl.begin(), xl.end()}};
  }
  if (name == "B0") {
    return {"B0", UnitarySet({q[0], q[1], q[2], q[3]}), {ql.begin(), ql.end()}};
  }
  if (name == "D") {
    auto [set, labels] = twelve(x, xl, {P, P, P});
    return {"D", std::move(set), std::move(labels)};
  }
  if (name == "D0") {
    auto [set, labels] = twelve(q, ql, {P, P, P});
    return {"D0", std::move(set), std::move(labels)};
  }
  if (name == "D1") {
    auto [set, labels] = twelve(q, ql, {P, N, P});
    return {"D1", std::move(set), std::move(labels)};
  }
  if (name == "D2") {
    auto [set, labels] = twelve(q, ql, {N, M, N});
    return {"D2", std::move(set), std::move(labels)};
  }
  throw Error(ErrorCode::UnknownName, "no built-in design named '" +
                                          std::string(name) + "'");
}

std::vector<std::string> named_design_names() {
  return {"pauli", "B0", "D", "D0", "D1", "D2"};
}

long long clifford_bound(int d) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "clifford_bound needs d >= 2");
  const long long dd = static_cast<long long>(d) * d;
  return dd * dd - 2 * dd + 2;
}

}  // namespace udes
