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

#ifndef SKEINKIT_SKEIN_REP_HPP
#define SKEINKIT_SKEIN_REP_HPP

#include <complex>
#include <string>
#include <vector>

#include "skeinkit/common.hpp"
#include "skeinkit/params.hpp"
#include "skeinkit/temperley_lieb.hpp"

namespace skeinkit {

enum class BasisKind { Diagram, Path };

inline const char* to_string(BasisKind kind) { return kind == BasisKind::Diagram ? "diagram" : "path"; }

/// Path basis at roots of unity, diagram basis otherwise.
inline BasisKind default_basis(const BracketParams& params) {
  return params.is_root_of_unity() ? BasisKind::Path : BasisKind::Diagram;
}

/// Matrices of the braid generators acting on the skein space of n points.
///
/// sigma_i acts as A * 1 + A^{-1} * e_i and its inverse as A^{-1} * 1 + A * e_i,
/// where e_i is the Temperley-Lieb generator (e_i^2 = delta e_i).
class SkeinRep {
 public:
  static constexpr int kMaxDimension = 5000;

  SkeinRep(const BracketParams& params, int n_strands, BasisKind kind)
      : params_(params), n_(n_strands), kind_(kind) {
    require(n_strands >= 2 && n_strands % 2 == 0, "SkeinRep: strand count must be even and >= 2");
    if (kind == BasisKind::Path) {
      if (!params.is_root_of_unity()) fail(ErrorKind::Usage, "path basis requires a root of unity");
      paths_ = make_path_basis(params.r(), n_strands);
      dim_ = static_cast<int>(paths_.paths.size());
    } else {
      if (catalan(n_strands / 2) > kMaxDimension) fail(ErrorKind::Budget, "diagram basis dimension too large");
      diagrams_ = noncrossing_matchings(n_strands);
      dim_ = static_cast<int>(diagrams_.size());
    }
    if (dim_ > kMaxDimension) fail(ErrorKind::Budget, "skein space dimension exceeds budget");
    for (int i = 1; i < n_strands; ++i) tl_.push_back(kind == BasisKind::Path ? path_tl(i) : diagram_tl(i));
    const Complex A = params.A(), Ainv = params.A_inv();
    for (const auto& e : tl_) {
      CMatrix id = CMatrix::Identity(dim_, dim_);
      pos_.push_back(A * id + Ainv * e);
      neg_.push_back(Ainv * id + A * e);
    }
  }

  const BracketParams& params() const { return params_; }
  int n_strands() const { return n_; }
  BasisKind basis() const { return kind_; }
  int dim() const { return dim_; }

  /// Temperley-Lieb generator e_i, 1 <= i < n.
  const CMatrix& tl_generator(int i) const { return tl_.at(check(i)); }
  /// rho(sigma_i^{sign}).
  const CMatrix& generator(int i, int sign = +1) const {
    int k = check(i);
    return sign > 0 ? pos_[k] : neg_[k];
  }

  /// Basis vector of the adjacent-cups state (1,2)(3,4)...
  CVector cups_vector() const {
    CVector v = CVector::Zero(dim_);
    if (kind_ == BasisKind::Path) {
      v(paths_.index_of(zigzag(n_))) = 1.0;
    } else {
      auto c = PlanarMatching::cups(n_);
      for (int k = 0; k < dim_; ++k)
        if (diagrams_[k] == c) v(k) = 1.0;
    }
    return v;
  }

  /// Pairing of a state with the adjacent caps. In the diagram basis each basis
  /// matching closes to delta^loops; in the path basis the pairing is
  /// delta^{n/2} times the inner product with the zigzag path.
  Complex close_with_caps(const CVector& state) const {
    Complex total = 0.0;
    if (kind_ == BasisKind::Path) {
      total = std::pow(params_.delta(), n_ / 2) * state(paths_.index_of(zigzag(n_)));
    } else {
      auto caps = PlanarMatching::caps(n_);
      for (int k = 0; k < dim_; ++k) {
        if (state(k) == Complex(0.0)) continue;
        int loops = compose_diagrams(diagrams_[k], caps).loops;
        total += state(k) * std::pow(params_.delta(), loops);
      }
    }
    return total;
  }

  /// Diagram basis only: basis vector of an arbitrary cup diagram.
  CVector state_of(const PlanarMatching& cups) const {
    if (kind_ != BasisKind::Diagram) fail(ErrorKind::Usage, "state_of needs the diagram basis");
    auto it = std::lower_bound(diagrams_.begin(), diagrams_.end(), cups);
    if (it == diagrams_.end() || !(*it == cups)) fail(ErrorKind::Usage, "state_of: not a cup diagram on this space");
    CVector v = CVector::Zero(dim_);
    v(it - diagrams_.begin()) = 1.0;
    return v;
  }

  /// Diagram basis only: pairing with an arbitrary cap diagram (n_top = 0).
  Complex close_with(const PlanarMatching& caps, const CVector& state) const {
    if (kind_ != BasisKind::Diagram) fail(ErrorKind::Usage, "close_with needs the diagram basis");
    Complex total = 0.0;
    for (int k = 0; k < dim_; ++k) {
      if (state(k) == Complex(0.0)) continue;
      total += state(k) * std::pow(params_.delta(), compose_diagrams(diagrams_[k], caps).loops);
    }
    return total;
  }

  const std::vector<PlanarMatching>& diagram_basis() const { return diagrams_; }
  const PathBasis& path_basis() const { return paths_; }

  static std::vector<int> zigzag(int n) {
    std::vector<int> p(n + 1);
    for (int i = 0; i <= n; ++i) p[i] = i % 2;
    return p;
  }

 private:
  int check(int i) const {
    if (i < 1 || i >= n_) fail(ErrorKind::Usage, "generator index " + std::to_string(i) + " out of range for " + std::to_string(n_) + " strands");
    return i - 1;
  }

  CMatrix diagram_tl(int i) const {
    CMatrix e = CMatrix::Zero(dim_, dim_);
    auto g = PlanarMatching::generator(n_, i);
    for (int col = 0; col < dim_; ++col) {
      auto res = compose_diagrams(diagrams_[col], g);
      auto it = std::lower_bound(diagrams_.begin(), diagrams_.end(), res.diagram);
      e(it - diagrams_.begin(), col) += std::pow(params_.delta(), res.loops);
    }
    return e;
  }

  // Local path-model coefficients: e_i only sees heights p_{i-1}, p_i, p_{i+1}
  // and vanishes unless p_{i-1} = p_{i+1} = h. With vertex weights [h+1],
  // e_i = -v v^T / [h+1], v_eps = sqrt([h+1+eps]), so e_i^2 = -[2] e_i = delta e_i.
  CMatrix path_tl(int i) const {
    const int r = params_.r();
    CMatrix e = CMatrix::Zero(dim_, dim_);
    for (int col = 0; col < dim_; ++col) {
      const auto& p = paths_.paths[col];
      int h = p[i - 1];
      if (p[i + 1] != h) continue;
      double w_in = std::sqrt(quantum_integer(p[i] + 1, r));
      for (int d : {-1, 1}) {
        auto q = p;
        q[i] = h + d;
        int row = paths_.index_of(q);
        if (row < 0) continue;
        double w_out = std::sqrt(quantum_integer(h + d + 1, r));
        e(row, col) += -w_in * w_out / quantum_integer(h + 1, r);
      }
    }
    return e;
  }

  BracketParams params_;
  int n_;
  BasisKind kind_;
  int dim_ = 0;
  PathBasis paths_;
  std::vector<PlanarMatching> diagrams_;
  std::vector<CMatrix> tl_, pos_, neg_;
};

/// Matrix of sigma_i (1-based) on n strands in the given basis.
inline CMatrix braid_generator_matrix(int i, int n, const BracketParams& params, BasisKind basis) {
  return SkeinRep(params, n, basis).generator(i, +1);
}

/// Relative distance of y from the line through x: ||y - lambda x|| / ||y||
/// with the least-squares lambda.
inline double proportionality_residual(const CMatrix& x, const CMatrix& y) {
  Complex num = (x.adjoint() * y).trace();
  double den = x.squaredNorm();
  if (den == 0.0) return y.norm() == 0.0 ? 0.0 : 1.0;
  Complex lambda = num / den;
  double ny = y.norm();
  return ny == 0.0 ? 0.0 : (y - lambda * x).norm() / ny;
}

struct NontrivialityReport {
  bool ok = false;
  bool crossings_independent = false;
  bool loop_exceeds_one = false;
  double proportionality_residual = 0.0;
  double delta_abs = 0.0;
  int space_dim = 0;
};

/// Checks, on the 4-point skein space, that left and right crossings are not
/// proportional (relative tolerance 1e-9) and that |delta| > 1.
inline NontrivialityReport full_nontriviality_check(const BracketParams& params) {
  SkeinRep rep(params, 4, default_basis(params));
  NontrivialityReport out;
  out.space_dim = rep.dim();
  out.proportionality_residual = proportionality_residual(rep.generator(1, +1), rep.generator(1, -1));
  out.crossings_independent = out.proportionality_residual > 1e-9;
  out.delta_abs = params.delta_abs();
  out.loop_exceeds_one = out.delta_abs > 1.0 + 1e-12;
  out.ok = out.crossings_independent && out.loop_exceeds_one;
  return out;
}

}  // namespace skeinkit

#endif  // SKEINKIT_SKEIN_REP_HPP
