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

#ifndef SKEINKIT_TEMPERLEY_LIEB_HPP
#define SKEINKIT_TEMPERLEY_LIEB_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "skeinkit/common.hpp"
#include "skeinkit/params.hpp"

namespace skeinkit {

/// Non-crossing perfect matching of the boundary points of a rectangle.
///
/// Points 0..n_bottom-1 run left to right along the bottom edge; points
/// n_bottom..n_bottom+n_top-1 run left to right along the top edge.
class PlanarMatching {
 public:
  PlanarMatching() = default;

  PlanarMatching(int n_bottom, int n_top, std::vector<int> partner)
      : n_bottom_(n_bottom), n_top_(n_top), partner_(std::move(partner)) {
    validate();
  }

  static PlanarMatching identity(int n) {
    std::vector<int> p(2 * n);
    for (int i = 0; i < n; ++i) {
      p[i] = n + i;
      p[n + i] = i;
    }
    return PlanarMatching(n, n, std::move(p));
  }

  /// TL generator e_i (1-based): cap on bottom points i, i+1 and cup on the
  /// top points i, i+1; every other strand is vertical.
  static PlanarMatching generator(int n, int i) {
    require(i >= 1 && i < n, "TL generator index out of range");
    PlanarMatching m = identity(n);
    int a = i - 1, b = i;
    m.partner_[a] = b;
    m.partner_[b] = a;
    m.partner_[n + a] = n + b;
    m.partner_[n + b] = n + a;
    return m;
  }

  /// n/2 adjacent cups (1,2)(3,4)... with all endpoints on top.
  static PlanarMatching cups(int n) {
    require(n % 2 == 0, "cups need an even number of points");
    std::vector<int> p(n);
    for (int i = 0; i < n; i += 2) {
      p[i] = i + 1;
      p[i + 1] = i;
    }
    return PlanarMatching(0, n, std::move(p));
  }

  /// n/2 adjacent caps with all endpoints on the bottom.
  static PlanarMatching caps(int n) {
    PlanarMatching c = cups(n);
    return PlanarMatching(n, 0, c.partner_);
  }

  int n_bottom() const { return n_bottom_; }
  int n_top() const { return n_top_; }
  int size() const { return n_bottom_ + n_top_; }
  int partner(int point) const { return partner_[point]; }
  const std::vector<int>& partners() const { return partner_; }

  friend bool operator==(const PlanarMatching&, const PlanarMatching&) = default;
  friend auto operator<=>(const PlanarMatching& a, const PlanarMatching& b) {
    return std::tie(a.n_bottom_, a.n_top_, a.partner_) <=> std::tie(b.n_bottom_, b.n_top_, b.partner_);
  }

 private:
  // Position of a point when walking the boundary counter-clockwise from the
  // bottom-left corner: bottom left-to-right, then top right-to-left.
  int cyclic_position(int point) const {
    return point < n_bottom_ ? point : n_bottom_ + (n_top_ - 1 - (point - n_bottom_));
  }

  void validate() const {
    int n = size();
    if (static_cast<int>(partner_.size()) != n) fail(ErrorKind::Usage, "matching size mismatch");
    for (int i = 0; i < n; ++i) {
      int j = partner_[i];
      if (j < 0 || j >= n || j == i || partner_[j] != i) fail(ErrorKind::Usage, "not a perfect matching");
    }
    for (int i = 0; i < n; ++i) {
      int a = cyclic_position(i), b = cyclic_position(partner_[i]);
      if (a > b) continue;
      for (int k = 0; k < n; ++k) {
        int c = cyclic_position(k), d = cyclic_position(partner_[k]);
        if (c > d) continue;
        if ((a < c && c < b && b < d) || (c < a && a < d && d < b))
          fail(ErrorKind::Usage, "matching is not planar");
      }
    }
  }

  int n_bottom_ = 0;
  int n_top_ = 0;
  std::vector<int> partner_;
};

struct ComposeResult {
  PlanarMatching diagram;
  int loops = 0;
};

/// Stacks `upper` on top of `lower`. Closed loops created in the middle are
/// removed and counted; the caller multiplies by delta^loops.
inline ComposeResult compose_diagrams(const PlanarMatching& lower, const PlanarMatching& upper) {
  if (lower.n_top() != upper.n_bottom()) fail(ErrorKind::Usage, "compose_diagrams: mismatched boundaries");
  const int nb = lower.n_bottom(), mid = lower.n_top(), nt = upper.n_top();
  // Outer points: lower bottoms keep their index, upper tops are shifted to nb + j.
  std::vector<int> out(nb + nt, -1);
  std::vector<char> mid_seen(mid, 0);

  // Follow a strand that enters the middle row at `m` from side `from_lower`.
  auto trace = [&](int m, bool from_lower) -> int {
    while (true) {
      mid_seen[m] = 1;
      if (from_lower) {
        int q = upper.partner(m);  // m is a bottom point of upper
        if (q >= mid) return nb + (q - mid);
        m = q;
        from_lower = false;
      } else {
        int q = lower.partner(nb + m);  // m is a top point of lower
        if (q < nb) return q;
        m = q - nb;
        from_lower = true;
      }
    }
  };

  for (int i = 0; i < nb; ++i) {
    if (out[i] != -1) continue;
    int q = lower.partner(i);
    int end = q < nb ? q : trace(q - nb, true);
    out[i] = end;
    out[end] = i;
  }
  for (int j = 0; j < nt; ++j) {
    int p = nb + j;
    if (out[p] != -1) continue;
    int q = upper.partner(mid + j);
    int end = q >= mid ? nb + (q - mid) : trace(q, false);
    out[p] = end;
    out[end] = p;
  }
  int loops = 0;
  for (int m = 0; m < mid; ++m) {
    if (mid_seen[m]) continue;
    ++loops;
    // Closed loop: alternate upper and lower arcs until we are back at m.
    int cur = m;
    do {
      mid_seen[cur] = 1;
      int q = upper.partner(cur);
      mid_seen[q] = 1;
      cur = lower.partner(nb + q) - nb;
    } while (cur != m);
  }
  return {PlanarMatching(nb, nt, std::move(out)), loops};
}

/// All non-crossing perfect matchings of n points, as cup diagrams (n_bottom = 0).
inline std::vector<PlanarMatching> noncrossing_matchings(int n) {
  require(n >= 0 && n % 2 == 0, "noncrossing_matchings: n must be even and non-negative");
  std::vector<std::vector<int>> acc;
  std::vector<int> cur(n, -1);
  auto rec = [&](auto&& self, int first) -> void {
    while (first < n && cur[first] != -1) ++first;
    if (first == n) {
      acc.push_back(cur);
      return;
    }
    // first pairs with a later free point such that the enclosed stretch is balanced.
    for (int j = first + 1; j < n; j += 2) {
      if (cur[j] != -1) break;
      bool inside_free = true;
      for (int k = first + 1; k < j; ++k)
        if (cur[k] != -1) inside_free = false;
      if (!inside_free) break;
      cur[first] = j;
      cur[j] = first;
      self(self, first + 1);
      cur[first] = cur[j] = -1;
    }
  };
  rec(rec, 0);
  std::vector<PlanarMatching> out;
  out.reserve(acc.size());
  for (auto& p : acc) out.emplace_back(0, n, std::move(p));
  std::sort(out.begin(), out.end());
  return out;
}

/// Admissible height walks of length n from 0 to 0 on {0, ..., r-2}.
struct PathBasis {
  int r = 0;
  int n = 0;
  std::vector<std::vector<int>> paths;

  int index_of(const std::vector<int>& path) const {
    auto it = std::lower_bound(paths.begin(), paths.end(), path);
    return (it != paths.end() && *it == path) ? static_cast<int>(it - paths.begin()) : -1;
  }
};

inline PathBasis make_path_basis(int r, int n) {
  require(r >= 3, "path basis needs r >= 3");
  require(n >= 0 && n % 2 == 0, "path basis: n must be even and non-negative");
  PathBasis basis{r, n, {}};
  const int top = r - 2;
  std::vector<int> path(n + 1, 0);
  auto rec = [&](auto&& self, int step) -> void {
    if (step == n) {
      if (path[n] == 0) basis.paths.push_back(path);
      return;
    }
    int h = path[step];
    for (int d : {-1, 1}) {
      int next = h + d;
      if (next < 0 || next > top) continue;
      if (next > n - step - 1) continue;  // must be able to return to 0
      path[step + 1] = next;
      self(self, step + 1);
    }
  };
  rec(rec, 0);
  std::sort(basis.paths.begin(), basis.paths.end());
  return basis;
}

inline std::int64_t catalan(int m) {
  std::int64_t c = 1;
  for (int i = 0; i < m; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

/// Dimension of the skein space of n points: Catalan C_{n/2} for generic t,
/// the number of admissible walks at a root of unity.
inline std::int64_t tl_dimension(int n, const BracketParams& params) {
  if (n < 0 || n % 2 != 0) fail(ErrorKind::Usage, "tl_dimension: n must be even and non-negative");
  if (!params.is_root_of_unity()) return catalan(n / 2);
  return static_cast<std::int64_t>(make_path_basis(params.r(), n).paths.size());
}

}  // namespace skeinkit

#endif  // SKEINKIT_TEMPERLEY_LIEB_HPP
