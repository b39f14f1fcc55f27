// Copyright 2026 The skeinkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SKEINKIT_DENSITY_HPP
#define SKEINKIT_DENSITY_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "skeinkit/common.hpp"
#include "skeinkit/params.hpp"
#include "skeinkit/partition.hpp"
#include "skeinkit/skein_rep.hpp"

namespace skeinkit {

struct DensityOptions {
  int half_length = 6;            // words up to this length on each side of u^-1 v
  double near = 0.2;              // accept u^-1 v within this of a scalar
  double min_dist = 1e-9;         // ... but not closer (exact coincidences carry no information)
  double rank_tol = 1e-8;
  std::size_t max_words = 100000;
  std::size_t max_logs = 64;
  std::size_t max_visits = 2000000;
  double max_cond = 0.0;          // keep only words with condition number below this (0: all)
  std::uint64_t seed = 1;
};

struct DensityCertificate {
  int lie_dim = 0;
  int target_dim = 0;
  bool dense = false;
  std::size_t words = 0;
  std::size_t near_identity = 0;
  double closest = 0.0;  // smallest accepted distance
  std::string note;
};

namespace detail {

/// c W with c = d / tr(W), so that a projectively near-identity word lands
/// near I; returns false when the trace vanishes.
inline bool scale_to_identity(const CMatrix& w, CMatrix& out) {
  Complex tr = w.trace();
  if (std::abs(tr) < 1e-12 * w.norm()) return false;
  out = w * (static_cast<double>(w.rows()) / tr);
  return true;
}

/// Operator 2-norm of cW - I; the Frobenius norm brackets it cheaply.
inline double distance_to_scalar(const CMatrix& w, double cutoff = 1e300) {
  CMatrix s;
  if (!scale_to_identity(w, s)) return 1e300;
  s -= CMatrix::Identity(w.rows(), w.cols());
  double f = s.norm();
  if (f > cutoff * std::sqrt(static_cast<double>(w.rows()))) return f / std::sqrt(static_cast<double>(w.rows()));
  return Eigen::JacobiSVD<CMatrix>(s).singularValues()(0);
}

/// Divide by the entry of largest modulus: one representative per ray.
inline CMatrix projective_canonical(const CMatrix& m) {
  Eigen::Index r = 0, c = 0;
  m.cwiseAbs().maxCoeff(&r, &c);
  return m / m(r, c);
}

inline Eigen::VectorXd realify(const CMatrix& x) {
  Eigen::VectorXd v(2 * x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    v(2 * i) = x.data()[i].real();
    v(2 * i + 1) = x.data()[i].imag();
  }
  return v;
}

class LieSpan {
 public:
  LieSpan(double tol, bool real) : tol_(tol), real_(real) {}

  // elements are kept traceless, and real when the generators are
  bool add(CMatrix x) {
    x -= (x.trace() / static_cast<double>(x.rows())) * CMatrix::Identity(x.rows(), x.cols());
    if (real_) x = x.real().cast<Complex>();
    Eigen::VectorXd v = realify(x);
    double n0 = v.norm();
    if (n0 == 0) return false;
    v /= n0;
    for (const auto& b : basis_) v -= b.dot(v) * b;
    for (const auto& b : basis_) v -= b.dot(v) * b;
    if (v.norm() <= tol_ * 1e2) return false;
    basis_.push_back(v / v.norm());
    mats_.push_back(x / n0);
    return true;
  }

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<CMatrix>& elements() const { return mats_; }

  /// Singular-value rank of the spanning set, tolerance rank_tol * sigma_max.
  int rank() const {
    if (basis_.empty()) return 0;
    Eigen::MatrixXd m(basis_[0].size(), basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) m.col(i) = basis_[i];
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& s = svd.singularValues();
    int r = 0;
    for (int i = 0; i < s.size(); ++i) r += s(i) > tol_ * s(0);
    return r;
  }

 private:
  double tol_;
  bool real_;
  std::vector<Eigen::VectorXd> basis_;
  std::vector<CMatrix> mats_;
};

}  // namespace detail

/// Numerical evidence for density of the group generated by `gens` in the
/// projective group of dimension `target_dim` (default d^2 - 1): logarithms
/// of near-identity quotients u^-1 v of short words, closed under brackets
/// and conjugation by the generators.
inline DensityCertificate density_certificate(const std::vector<CMatrix>& gens, int target_dim = -1,
                                              const DensityOptions& opt = {}) {
  require(!gens.empty(), "density_certificate needs generators");
  const int d = static_cast<int>(gens[0].rows());
  require(d >= 2 && d <= 14, "density_certificate handles dimensions 2..14");
  for (const auto& g : gens) {
    require(g.rows() == d && g.cols() == d, "generators must be square and of one size");
    require(std::abs(g.determinant()) > 1e-300 && Eigen::FullPivLU<CMatrix>(g).isInvertible(), "generators must be invertible");
  }
  DensityCertificate cert;
  cert.target_dim = target_dim > 0 ? target_dim : d * d - 1;
  // real generators can at most fill sl(d, R), which has the same dimension

  std::vector<CMatrix> letters;
  for (const auto& g : gens) {
    letters.push_back(detail::projective_canonical(g));
    letters.push_back(detail::projective_canonical(g.inverse()));
  }

  // reduced words, depth first; keep those of bounded condition number so that
  // a non-compact image still yields close pairs inside a fixed ball
  auto key_of = [](const CMatrix& c) {
    std::size_t h = 1469598103934665603ull;
    for (Eigen::Index i = 0; i < c.size(); ++i)
      for (double part : {c.data()[i].real(), c.data()[i].imag()}) {
        long long q = std::llround(part * 1e7);
        h = (h ^ static_cast<std::size_t>(q)) * 1099511628211ull;
      }
    return h;
  };
  std::vector<CMatrix> words;
  std::unordered_set<std::size_t> seen;
  std::size_t visited = 0;
  auto visit = [&](auto&& self, const CMatrix& m, int last, int depth) -> void {
    if (words.size() >= opt.max_words || visited >= opt.max_visits) return;
    ++visited;
    bool keep = true;
    if (opt.max_cond > 0) {
      Eigen::JacobiSVD<CMatrix> svd(m);
      const auto& sv = svd.singularValues();
      keep = sv(0) <= opt.max_cond * sv(d - 1);
    }
    if (keep) {
      CMatrix c = detail::projective_canonical(m);
      if (seen.insert(key_of(c)).second) words.push_back(std::move(c));
    }
    if (depth == opt.half_length) return;
    for (int l = 0; l < static_cast<int>(letters.size()); ++l) {
      if (last >= 0 && (l ^ 1) == last) continue;
      self(self, detail::projective_canonical(letters[l] * m), l, depth + 1);
    }
  };
  visit(visit, CMatrix::Identity(d, d), -1, 0);
  cert.words = words.size();

  // random-projection grid on the canonical forms to find close pairs
  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> nd;
  const int feat = 4;
  std::vector<Eigen::VectorXd> dirs(feat, Eigen::VectorXd(2 * d * d));
  for (auto& v : dirs) {
    for (int i = 0; i < v.size(); ++i) v(i) = nd(rng);
    v.normalize();
  }
  const double cell = 0.25;
  using Key = std::array<long long, feat>;
  std::map<Key, std::vector<std::uint32_t>> grid;
  std::vector<Key> keys(words.size());
  for (std::size_t w = 0; w < words.size(); ++w) {
    Eigen::VectorXd v = detail::realify(words[w]);
    for (int a = 0; a < feat; ++a) keys[w][a] = static_cast<long long>(std::floor(dirs[a].dot(v) / cell));
    grid[keys[w]].push_back(static_cast<std::uint32_t>(w));
  }

  std::vector<CMatrix> logs;
  double closest = 1e300;
  int neighbours = 1;
  for (int a = 0; a < feat; ++a) neighbours *= 3;
  for (std::size_t w = 0; w < words.size() && logs.size() < opt.max_logs; ++w) {
    Eigen::PartialPivLU<CMatrix> lu(words[w]);
    for (int nb = 0; nb < neighbours && logs.size() < opt.max_logs; ++nb) {
      Key k = keys[w];
      int r = nb;
      for (int a = 0; a < feat; ++a, r /= 3) k[a] += r % 3 - 1;
      auto it = grid.find(k);
      if (it == grid.end()) continue;
      for (auto v : it->second) {
        if (v <= w) continue;
        CMatrix q = lu.solve(words[v]);
        double dist = detail::distance_to_scalar(q, opt.near);
        if (!(dist > opt.min_dist && dist < opt.near)) continue;
        CMatrix s;
        detail::scale_to_identity(q, s);
        CMatrix x = s.log();
        x -= (x.trace() / static_cast<double>(d)) * CMatrix::Identity(d, d);
        if (!x.allFinite()) continue;
        closest = std::min(closest, dist);
        logs.push_back(x);
        ++cert.near_identity;
        if (logs.size() >= opt.max_logs) break;
      }
    }
  }
  if (logs.empty()) {
    cert.note = "no near-identity words: consistent with a discrete (finite) image";
    return cert;
  }
  cert.closest = closest;

  // closure under brackets and conjugation by the generators
  bool real = true;
  for (const auto& g : gens) real = real && g.imag().norm() <= 1e-12 * g.norm();
  detail::LieSpan span(opt.rank_tol, real);
  std::deque<CMatrix> queue;
  for (const auto& x : logs)
    if (span.add(x)) queue.push_back(span.elements().back());
  std::vector<std::pair<CMatrix, CMatrix>> conj;
  for (const auto& g : gens) conj.push_back({g, g.inverse()});
  while (!queue.empty() && span.dim() < cert.target_dim) {
    CMatrix e = queue.front();
    queue.pop_front();
    for (const auto& [g, gi] : conj) {
      for (const CMatrix& y : {CMatrix(g * e * gi), CMatrix(gi * e * g)})
        if (span.add(y)) queue.push_back(span.elements().back());
    }
    const std::vector<CMatrix> current = span.elements();
    for (const auto& f : current) {
      CMatrix br = e * f - f * e;
      if (span.add(br)) queue.push_back(span.elements().back());
    }
  }
  cert.lie_dim = span.rank();
  cert.dense = cert.lie_dim == cert.target_dim;
  cert.note = cert.dense ? "Lie closure fills the projective group" : "Lie closure is a proper subalgebra";
  return cert;
}

/// Options for non-unitary generator sets: words are kept only inside a ball
/// of condition number 6, which is where the near pairs live.
inline DensityOptions noncompact_density_options() {
  DensityOptions o;
  o.half_length = 6;
  o.max_cond = 6.0;
  return o;
}

/// Braid generators sigma_1..sigma_{n-1} in the path basis at root of unity r.
inline std::vector<CMatrix> kauffman_generators(int r, int n_strands = 4) {
  SkeinRep rep(BracketParams::root_of_unity(r), n_strands, BasisKind::Path);
  std::vector<CMatrix> out;
  for (int i = 1; i < n_strands; ++i) out.push_back(rep.generator(i, +1));
  return out;
}

/// A_{j,y} for 1 <= j < k and B_{j,x} for 1 <= j <= k on the shrub space.
inline std::vector<CMatrix> potts_edge_generators(double n, int k, double y, double x, bool planar = false) {
  ShrubSpace sp(partition_basis(k, planar), n, y);
  std::vector<CMatrix> out;
  for (int j = 1; j < k; ++j) out.push_back(sp.a_operator(j, y).matrix.cast<Complex>());
  for (int j = 1; j <= k; ++j) out.push_back(sp.b_operator(j, x).matrix.cast<Complex>());
  return out;
}

}  // namespace skeinkit

#endif  // SKEINKIT_DENSITY_HPP
