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

#ifndef SKEINKIT_BRACKET_HPP
#define SKEINKIT_BRACKET_HPP

#include <cstdint>
#include <vector>

#include "skeinkit/braid.hpp"
#include "skeinkit/common.hpp"
#include "skeinkit/params.hpp"
#include "skeinkit/skein_rep.hpp"

namespace skeinkit {

enum class Closure { Plat, Trace };
enum class BracketMethod { BruteForce, Morse };

inline const char* to_string(BracketMethod m) { return m == BracketMethod::Morse ? "morse" : "brute"; }

struct BracketValue {
  Complex value;
  BracketMethod method;
  BracketParams params;
};

inline constexpr int kMaxBruteForceCrossings = 20;

/// State sum over all 2^c smoothings. At each crossing the vertical smoothing
/// gets A^{sign} and the turn-back smoothing A^{-sign}; each state contributes
/// delta^{loops}.
inline Complex bracket_bruteforce(const BraidWord& w, Closure closure, const BracketParams& params) {
  const int n = w.n_strands();
  const int c = static_cast<int>(w.size());
  if (c > kMaxBruteForceCrossings)
    fail(ErrorKind::Budget, "brute-force bracket limited to " + std::to_string(kMaxBruteForceCrossings) + " crossings");
  if (closure == Closure::Plat && n % 2 != 0) fail(ErrorKind::Usage, "plat closure needs an even strand count");
  const auto& letters = w.letters();
  const Complex A = params.A(), Ainv = params.A_inv();
  auto node = [n](int level, int pos) { return level * n + pos; };

  // loop counts are small; cache delta powers
  std::vector<Complex> dpow((c + 1) * n + 2, 1.0);
  for (std::size_t k = 1; k < dpow.size(); ++k) dpow[k] = dpow[k - 1] * params.delta();

  Complex total = 0.0;
  const std::uint32_t states = 1u << c;
  for (std::uint32_t mask = 0; mask < states; ++mask) {
    detail::DisjointSets ds((c + 1) * n);
    int a_minus_b = 0;
    for (int k = 0; k < c; ++k) {
      int a = letters[k].index - 1, b = a + 1;
      for (int p = 0; p < n; ++p)
        if (p != a && p != b) ds.unite(node(k, p), node(k + 1, p));
      bool turn_back = (mask >> k) & 1u;
      if (!turn_back) {
        ds.unite(node(k, a), node(k + 1, a));
        ds.unite(node(k, b), node(k + 1, b));
        a_minus_b += letters[k].sign;
      } else {
        ds.unite(node(k, a), node(k, b));
        ds.unite(node(k + 1, a), node(k + 1, b));
        a_minus_b -= letters[k].sign;
      }
    }
    if (closure == Closure::Plat) {
      for (int j = 0; j < n; j += 2) {
        ds.unite(node(0, j), node(0, j + 1));
        ds.unite(node(c, j), node(c, j + 1));
      }
    } else {
      for (int p = 0; p < n; ++p) ds.unite(node(0, p), node(c, p));
    }
    int loops = ds.count();
    Complex weight = a_minus_b >= 0 ? std::pow(A, a_minus_b) : std::pow(Ainv, -a_minus_b);
    total += weight * dpow[loops];
  }
  return total;
}

inline Complex bracket_bruteforce(const PlatPresentation& p, const BracketParams& params) {
  return bracket_bruteforce(p.braid(), Closure::Plat, params);
}

/// rho(word) v with the first letter applied first.
inline CVector apply_word(const SkeinRep& rep, const BraidWord& w, CVector v) {
  for (const auto& l : w.letters()) v = rep.generator(l.index, l.sign) * v;
  return v;
}

inline CMatrix word_matrix(const SkeinRep& rep, const BraidWord& w) {
  CMatrix m = CMatrix::Identity(rep.dim(), rep.dim());
  for (const auto& l : w.letters()) m = rep.generator(l.index, l.sign) * m;
  return m;
}

/// <caps| rho(B) |cups>, scanning the braid upward from the cups.
inline Complex bracket_morse(const PlatPresentation& p, const SkeinRep& rep) {
  if (rep.n_strands() != p.n_strands()) fail(ErrorKind::Usage, "bracket_morse: representation has the wrong strand count");
  return rep.close_with_caps(apply_word(rep, p.braid(), rep.cups_vector()));
}

inline Complex bracket_morse(const PlatPresentation& p, const BracketParams& params, BasisKind basis) {
  return bracket_morse(p, SkeinRep(params, p.n_strands(), basis));
}

inline Complex bracket_morse(const PlatPresentation& p, const BracketParams& params) {
  return bracket_morse(p, params, default_basis(params));
}

/// Trace closure as a plat on 2n points: the braid acts on the left n strands
/// and nested cups/caps carry each strand back down on the right.
inline Complex bracket_morse_trace(const BraidWord& w, const BracketParams& params) {
  const int n = w.n_strands();
  const int m = 2 * n;
  std::vector<int> partner(m);
  for (int i = 0; i < m; ++i) partner[i] = m - 1 - i;
  PlanarMatching nested_cups(0, m, partner);
  PlanarMatching nested_caps(m, 0, partner);
  SkeinRep rep(params, m, BasisKind::Diagram);
  CVector v = rep.state_of(nested_cups);
  for (const auto& l : w.letters()) v = rep.generator(l.index, l.sign) * v;
  return rep.close_with(nested_caps, v);
}

/// V = (-A^3)^{-w} <L> / delta, so the unknot evaluates to 1.
inline Complex jones_normalized(Complex bracket, int writhe_value, const BracketParams& params) {
  return std::pow(params.kink_factor(), -writhe_value) * bracket / params.delta();
}

inline Complex jones_plat(const PlatPresentation& p, const BracketParams& params) {
  return jones_normalized(bracket_morse(p, params), plat_writhe(p), params);
}

/// |<L>|^2 / |delta|^{2g}. Computed from the zigzag amplitude in the path
/// basis, so identity plats give exactly 1.
inline double plat_probability(const PlatPresentation& p, const BracketParams& params) {
  if (!params.is_root_of_unity()) fail(ErrorKind::Usage, "plat_probability needs a root-of-unity evaluation point");
  SkeinRep rep(params, p.n_strands(), BasisKind::Path);
  CVector z = rep.cups_vector();
  CVector v = apply_word(rep, p.braid(), z);
  return std::min(1.0, std::norm(z.dot(v)));  // unitary, so only rounding can exceed 1
}

inline double plat_probability(const PlatPresentation& p, const SkeinRep& rep) {
  if (rep.basis() != BasisKind::Path) fail(ErrorKind::Usage, "plat_probability needs the path basis");
  CVector z = rep.cups_vector();
  return std::min(1.0, std::norm(z.dot(apply_word(rep, p.braid(), z))));
}

/// Split union of plats: braids placed side by side on disjoint strands.
inline PlatPresentation split_union(const PlatPresentation& a, const PlatPresentation& b) {
  const int n = a.n_strands() + b.n_strands();
  BraidWord w = a.braid().shifted(0, n);
  w.append(b.braid().shifted(a.n_strands(), n));
  return PlatPresentation(std::move(w));
}

}  // namespace skeinkit

#endif  // SKEINKIT_BRACKET_HPP
