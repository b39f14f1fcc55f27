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

#ifndef SKEINKIT_POTTS_HPP
#define SKEINKIT_POTTS_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "skeinkit/common.hpp"

namespace skeinkit {

using Rational = boost::multiprecision::cpp_rational;

template <class S>
S ipow(S base, int e) {
  S r = 1;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

/// Multigraph with per-edge weights y_e and an ordered boundary.
template <class S>
struct BasicPottsGraph {
  struct Edge {
    int u = 0, v = 0;
    S y = 1;
  };

  int vertices = 0;
  std::vector<Edge> edges;
  std::vector<int> boundary;
  bool planar = false;

  BasicPottsGraph() = default;
  explicit BasicPottsGraph(int v) : vertices(v) { require(v >= 0, "vertex count must be >= 0"); }

  BasicPottsGraph& add_edge(int u, int v, S y) {
    require(u >= 0 && u < vertices && v >= 0 && v < vertices, "edge endpoint out of range");
    if constexpr (std::is_floating_point_v<S>) require(std::isfinite(y), "edge weight must be finite");
    edges.push_back({u, v, std::move(y)});
    return *this;
  }

  int add_vertex() { return vertices++; }

  void validate() const {
    for (const auto& e : edges) {
      require(e.u >= 0 && e.u < vertices && e.v >= 0 && e.v < vertices, "edge endpoint out of range");
      if constexpr (std::is_floating_point_v<S>) require(std::isfinite(e.y), "edge weight must be finite");
    }
    std::set<int> seen;
    for (int b : boundary) {
      require(b >= 0 && b < vertices, "boundary vertex out of range");
      require(seen.insert(b).second, "boundary vertices must be distinct");
    }
  }

  int components() const {
    std::vector<int> p(vertices);
    for (int i = 0; i < vertices; ++i) p[i] = i;
    auto find = [&](int x) {
      while (p[x] != x) x = p[x] = p[p[x]];
      return x;
    };
    int c = vertices;
    for (const auto& e : edges) {
      int a = find(e.u), b = find(e.v);
      if (a != b) {
        p[a] = b;
        --c;
      }
    }
    return c;
  }
};

using PottsGraph = BasicPottsGraph<double>;
using RationalPottsGraph = BasicPottsGraph<Rational>;

template <class T, class S>
BasicPottsGraph<T> convert_graph(const BasicPottsGraph<S>& g) {
  BasicPottsGraph<T> out(g.vertices);
  for (const auto& e : g.edges) {
    if constexpr (std::is_same_v<S, Rational> && std::is_floating_point_v<T>) out.add_edge(e.u, e.v, e.y.template convert_to<T>());
    else out.add_edge(e.u, e.v, T(e.y));
  }
  out.boundary = g.boundary;
  out.planar = g.planar;
  return out;
}

inline constexpr double kMaxColorings = 1e8;
inline constexpr int kMaxClusterEdges = 24;
inline constexpr int kMaxTutteEdges = 20;

/// Sum over n-colorings of the product of y_e over monochromatic edges.
template <class S>
S z_colorings(const BasicPottsGraph<S>& g, int n) {
  require(n >= 1, "z_colorings needs an integer n >= 1");
  if (std::pow(double(n), g.vertices) > kMaxColorings) fail(ErrorKind::Budget, "n^v exceeds 1e8 colorings");
  std::vector<int> col(g.vertices, 0);
  S total = 0;
  while (true) {
    S w = 1;
    for (const auto& e : g.edges)
      if (col[e.u] == col[e.v]) w *= e.y;
    total += w;
    int i = 0;
    while (i < g.vertices && ++col[i] == n) col[i++] = 0;
    if (i == g.vertices) break;
  }
  return total;
}

namespace detail {

/// Union-find with union by size and an undo log.
class RollbackDSU {
 public:
  explicit RollbackDSU(int n) : parent_(n), size_(n, 1) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      log_.push_back(-1);
      return false;
    }
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    log_.push_back(b);
    return true;
  }
  void undo() {
    int b = log_.back();
    log_.pop_back();
    if (b < 0) return;
    int a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<int> parent_, size_;
  std::vector<int> log_;
};

}  // namespace detail

/// Random-cluster form: sum over edge subsets A of n^{k(A)} prod_{e in A} (y_e - 1).
template <class S>
S z_cluster(const BasicPottsGraph<S>& g, const S& n) {
  const int m = static_cast<int>(g.edges.size());
  if (m > kMaxClusterEdges) fail(ErrorKind::Budget, "z_cluster limited to 24 edges");
  std::vector<S> npow(g.vertices + 1);
  npow[0] = 1;
  for (int i = 1; i <= g.vertices; ++i) npow[i] = npow[i - 1] * n;
  std::vector<S> ym1(m);
  for (int i = 0; i < m; ++i) ym1[i] = g.edges[i].y - S(1);
  detail::RollbackDSU dsu(g.vertices);
  S total = 0;
  // explicit recursion over edges: skip, or take and merge
  auto rec = [&](auto&& self, int i, int comps, const S& w) -> void {
    if (i == m) {
      total += w * npow[comps];
      return;
    }
    self(self, i + 1, comps, w);
    if (ym1[i] == S(0)) return;
    bool merged = dsu.unite(g.edges[i].u, g.edges[i].v);
    self(self, i + 1, comps - (merged ? 1 : 0), w * ym1[i]);
    dsu.undo();
  };
  rec(rec, 0, g.vertices, S(1));
  return total;
}

/// Dual weight: n = (x - 1)(y - 1). y = 1 has none.
inline std::optional<double> dual_weight(double y, double n) {
  if (y == 1.0) return std::nullopt;
  return 1.0 + n / (y - 1.0);
}

/// T(G; x, y) = (y-1)^{-v(G)} (x-1)^{-c(G)} Z(G; n, y), n = (x-1)(y-1).
inline double tutte_from_potts(const PottsGraph& g, double x, double y) {
  if (x == 1.0 || y == 1.0) fail(ErrorKind::Usage, "tutte_from_potts needs x != 1 and y != 1");
  PottsGraph h = g;
  for (auto& e : h.edges) e.y = y;
  double n = (x - 1) * (y - 1);
  return z_cluster(h, n) / (std::pow(y - 1, g.vertices) * std::pow(x - 1, h.components()));
}

namespace detail {

inline double tutte_rec(std::vector<std::pair<int, int>> edges, double x, double y) {
  if (edges.empty()) return 1.0;
  auto [u, v] = edges.back();
  edges.pop_back();
  if (u == v) return y * tutte_rec(std::move(edges), x, y);
  // is u still connected to v without this edge?
  std::map<int, std::vector<int>> adj;
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::set<int> seen{u};
  std::vector<int> stack{u};
  bool connected = false;
  while (!stack.empty() && !connected) {
    int a = stack.back();
    stack.pop_back();
    for (int b : adj[a]) {
      if (b == v) connected = true;
      if (seen.insert(b).second) stack.push_back(b);
    }
  }
  auto contracted = edges;
  for (auto& [a, b] : contracted) {
    if (a == v) a = u;
    if (b == v) b = u;
  }
  if (!connected) return x * tutte_rec(std::move(contracted), x, y);
  return tutte_rec(std::move(edges), x, y) + tutte_rec(std::move(contracted), x, y);
}

}  // namespace detail

/// Contraction-deletion: bridge -> x T(G/e), loop -> y T(G-e), otherwise
/// T(G-e) + T(G/e); the edgeless graph gives 1.
inline double tutte_cd_oracle(const PottsGraph& g, double x, double y) {
  if (static_cast<int>(g.edges.size()) > kMaxTutteEdges) fail(ErrorKind::Budget, "contraction-deletion limited to 20 edges");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : g.edges) edges.push_back({e.u, e.v});
  return detail::tutte_rec(std::move(edges), x, y);
}

inline double shift_parallel(double y1, double y2) { return y1 * y2; }

struct SeriesShift {
  double y_eff = 0.0;
  std::optional<double> x_eff;
  double const_factor = 0.0;
};

/// Two edges in series through a vertex of degree 2, summed over its colour.
inline SeriesShift shift_series(double y1, double y2, double n) {
  double c = y1 + y2 + n - 2;
  if (c == 0.0) fail(ErrorKind::Usage, "series composition is degenerate (y1 + y2 + n - 2 = 0)");
  SeriesShift s;
  s.const_factor = c;
  s.y_eff = (y1 * y2 + n - 1) / c;
  s.x_eff = dual_weight(s.y_eff, n);
  return s;
}

struct ExactSeriesShift {
  Rational y_eff, const_factor;
};

inline ExactSeriesShift shift_series_exact(const Rational& y1, const Rational& y2, const Rational& n) {
  Rational c = y1 + y2 + n - 2;
  if (c == 0) fail(ErrorKind::Usage, "series composition is degenerate (y1 + y2 + n - 2 = 0)");
  return {(y1 * y2 + n - 1) / c, c};
}

/// Series/parallel composition DAG over a set of start weights. Children
/// always precede their parent; shared sub-trees stand for repeated copies.
struct CompositionTree {
  enum class Kind { Leaf, Parallel, Series };
  struct Node {
    Kind kind = Kind::Leaf;
    int a = -1, b = -1;
    int leaf = -1;
  };

  std::vector<double> start;
  double n = 0.0;
  std::vector<Node> nodes;
  int root = -1;

  /// Effective weight of every node, using only shift_parallel/shift_series.
  std::vector<double> evaluate_all() const {
    std::vector<double> v(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const Node& nd = nodes[i];
      switch (nd.kind) {
        case Kind::Leaf: v[i] = start.at(nd.leaf); break;
        case Kind::Parallel: v[i] = shift_parallel(v.at(nd.a), v.at(nd.b)); break;
        case Kind::Series: v[i] = shift_series(v.at(nd.a), v.at(nd.b), n).y_eff; break;
      }
    }
    return v;
  }

  double evaluate() const {
    require(root >= 0, "empty composition tree");
    return evaluate_all().at(root);
  }

  /// Number of start edges in the fully expanded series-parallel graph.
  double edge_count() const {
    std::vector<double> c(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
      c[i] = nodes[i].kind == Kind::Leaf ? 1.0 : c[nodes[i].a] + c[nodes[i].b];
    return root < 0 ? 0.0 : c[root];
  }

  std::string describe(int node = -2) const {
    if (node == -2) node = root;
    const Node& nd = nodes.at(node);
    if (nd.kind == Kind::Leaf) return "y" + std::to_string(nd.leaf);
    return std::string(nd.kind == Kind::Parallel ? "P(" : "S(") + describe(nd.a) + "," + describe(nd.b) + ")";
  }
};

struct WeightImplementation {
  CompositionTree tree;
  double achieved = 0.0;
  double distance = 0.0;
  std::size_t nodes = 0;
  double edges = 0.0;
  std::string seed_case;   // how a weight above 1 was first obtained
  double seed_y = 0.0;     // intermediate weight produced by that first step
  std::optional<double> seed_x;
  int seed_power = 0;
};

namespace detail {

class TreeBuilder {
 public:
  TreeBuilder(std::vector<double> start, double n, std::size_t budget) : budget_(budget) {
    tree_.start = std::move(start);
    tree_.n = n;
  }

  int leaf(int i) { return push({CompositionTree::Kind::Leaf, -1, -1, i}, tree_.start.at(i)); }
  int par(int a, int b) { return push({CompositionTree::Kind::Parallel, a, b, -1}, shift_parallel(val_[a], val_[b])); }
  int ser(int a, int b) {
    return push({CompositionTree::Kind::Series, a, b, -1}, shift_series(val_[a], val_[b], tree_.n).y_eff);
  }

  /// m parallel copies (weight y^m) by repeated doubling.
  int par_pow(int a, long long m) { return power(a, m, true); }
  /// m series copies (dual weight x^m).
  int ser_pow(int a, long long m) { return power(a, m, false); }

  double value(int i) const { return val_.at(i); }
  CompositionTree finish(int root) {
    tree_.root = root;
    return tree_;
  }

 private:
  int power(int a, long long m, bool parallel) {
    require(m >= 1, "composition power must be >= 1");
    int result = -1, base = a;
    while (m > 0) {
      if (m & 1) result = result < 0 ? base : (parallel ? par(result, base) : ser(result, base));
      m >>= 1;
      if (m > 0) base = parallel ? par(base, base) : ser(base, base);
    }
    return result;
  }

  int push(CompositionTree::Node nd, double v) {
    if (tree_.nodes.size() >= budget_) fail(ErrorKind::Budget, "composition search exceeded its node budget");
    if (!std::isfinite(v)) fail(ErrorKind::Budget, "composition overflowed");
    tree_.nodes.push_back(nd);
    val_.push_back(v);
    return static_cast<int>(tree_.nodes.size()) - 1;
  }

  CompositionTree tree_;
  std::vector<double> val_;
  std::size_t budget_;
};

}  // namespace detail

inline constexpr std::size_t kImplementWeightBudget = 100000;

/// Builds a series-parallel composition of the start weights whose effective
/// weight is within eps of `target`. Short trees (up to three leaves) are
/// tried first; otherwise a weight above 1 is produced, its series powers
/// give weights tending to 1, and a greedy product of those reaches the
/// target on a logarithmic scale before the original weight corrects the
/// side of 1.
inline WeightImplementation implement_weight(const std::vector<double>& start, double n, double target, double eps,
                                             std::size_t budget = kImplementWeightBudget) {
  require(!start.empty(), "implement_weight needs at least one start weight");
  require(target != 1.0, "target weight must differ from 1");
  require(eps > 0, "implement_weight needs eps > 0");
  require(n > 1, "implement_weight needs n > 1");
  const int ns = static_cast<int>(start.size());
  double best_dist = 1e300;

  auto done = [&](CompositionTree tree, std::string seed_case = "direct") {
    WeightImplementation w;
    w.achieved = tree.evaluate();
    w.distance = std::abs(w.achieved - target);
    w.nodes = tree.nodes.size();
    w.edges = tree.edge_count();
    w.tree = std::move(tree);
    w.seed_case = std::move(seed_case);
    return w;
  };

  // short trees: leaves, pairs, and pairs combined with a third leaf
  {
    struct Small {
      double v;
      int op, a, b;  // op 0 leaf, 1 par, 2 ser
    };
    std::vector<Small> small;
    for (int i = 0; i < ns; ++i) small.push_back({start[i], 0, i, -1});
    for (int i = 0; i < ns; ++i)
      for (int j = i; j < ns; ++j) {
        small.push_back({shift_parallel(start[i], start[j]), 1, i, j});
        if (start[i] + start[j] + n - 2 != 0) small.push_back({shift_series(start[i], start[j], n).y_eff, 2, i, j});
      }
    auto build_small = [&](detail::TreeBuilder& tb, const Small& s) {
      if (s.op == 0) return tb.leaf(s.a);
      int a = tb.leaf(s.a), b = tb.leaf(s.b);
      return s.op == 1 ? tb.par(a, b) : tb.ser(a, b);
    };
    for (const auto& s : small) {
      best_dist = std::min(best_dist, std::abs(s.v - target));
      if (std::abs(s.v - target) <= eps) {
        detail::TreeBuilder tb(start, n, budget);
        return done(tb.finish(build_small(tb, s)));
      }
    }
    for (std::size_t p = ns; p < small.size(); ++p)
      for (int k = 0; k < ns; ++k)
        for (int op = 1; op <= 2; ++op) {
          double v;
          if (op == 1) v = shift_parallel(small[p].v, start[k]);
          else if (small[p].v + start[k] + n - 2 != 0) v = shift_series(small[p].v, start[k], n).y_eff;
          else continue;
          best_dist = std::min(best_dist, std::abs(v - target));
          if (std::abs(v - target) <= eps) {
            detail::TreeBuilder tb(start, n, budget);
            int a = build_small(tb, small[p]), b = tb.leaf(k);
            return done(tb.finish(op == 1 ? tb.par(a, b) : tb.ser(a, b)));
          }
        }
  }

  // a start weight with y < 0 and x < 0, excluding x = y = -1
  int neg = -1;
  for (int i = 0; i < ns && neg < 0; ++i) {
    auto x = dual_weight(start[i], n);
    if (start[i] < 0 && x && *x < 0 && !(start[i] == -1.0 && *x == -1.0)) neg = i;
  }
  int above = -1;
  for (int i = 0; i < ns && above < 0; ++i)
    if (start[i] > 1) above = i;
  if (neg < 0 && (above < 0 || target < 1))
    fail(ErrorKind::Budget, "no constructive route from the start weights; best short tree is " + std::to_string(best_dist) +
                                " away");
  if (neg >= 0 && !(n > 2) && above < 0) fail(ErrorKind::Usage, "the negative-weight route needs n > 2");

  double inner_tol = eps;
  for (int attempt = 0; attempt < 10; ++attempt, inner_tol /= 10) {
    try {
      detail::TreeBuilder tb(start, n, budget);
      WeightImplementation info;
      // 1. some weight g > 1
      int g;
      if (above >= 0) {
        g = tb.leaf(above);
        info.seed_case = "start weight above 1";
      } else {
        double y = start[neg], x = *dual_weight(y, n);
        int ly = tb.leaf(neg);
        if (y < -1) {
          g = tb.par(ly, ly);
          info.seed_case = "parallel square of y < -1";
        } else if (x < -1) {
          g = tb.ser(ly, ly);
          info.seed_case = "series square of x < -1";
        } else if (y > -1) {
          // odd parallel power pushes y towards 0-, so its dual drops below -1
          int m = 3, p = -1;
          for (; m < 200; m += 2) {
            p = tb.par_pow(ly, m);
            auto xp = dual_weight(tb.value(p), n);
            if (xp && *xp < -1) break;
          }
          info.seed_power = m;
          info.seed_y = tb.value(p);
          info.seed_x = dual_weight(info.seed_y, n);
          g = tb.ser(p, p);
          info.seed_case = "odd parallel power, then series square";
        } else {
          // y = -1 and x in (-1, 0): odd series power instead
          int m = 3, s = -1;
          for (; m < 200; m += 2) {
            s = tb.ser_pow(ly, m);
            if (tb.value(s) < -1) break;
          }
          info.seed_power = m;
          info.seed_y = tb.value(s);
          info.seed_x = dual_weight(info.seed_y, n);
          g = tb.par(s, s);
          info.seed_case = "odd series power, then parallel square";
        }
        if (info.seed_power == 0) {
          info.seed_y = tb.value(g);
          info.seed_x = dual_weight(info.seed_y, n);
        }
      }
      require(tb.value(g) > 1, "seed weight is not above 1");

      // 2. reduce the target to some s > 1, and how to finish from it
      enum { Direct, ParallelWithY, SeriesWithY } finish = Direct;
      double s = target;
      double y0 = neg >= 0 ? start[neg] : 0.0;
      if (target < 1) {
        double x0 = *dual_weight(y0, n);
        if (target == y0) {
          detail::TreeBuilder tb2(start, n, budget);
          return done(tb2.finish(tb2.leaf(neg)));
        }
        if (target < y0) {
          finish = ParallelWithY;
          s = target / y0;
        } else {
          finish = SeriesWithY;
          double xt = *dual_weight(target, n);
          s = 1 + n / (xt / x0 - 1);
        }
      }
      require(s > 1, "reduced target is not above 1");

      // 3. greedy product of weights u_k -> 1+ (u_k = k series copies of g)
      const double log_s = std::log(s);
      const double tol = inner_tol / std::max(1.0, std::abs(target)) / 4;
      double rem = log_s;
      int acc = -1;
      int u = g;
      for (int level = 0; level < 400 && rem > tol; ++level) {
        if (level > 0) u = tb.ser(u, g);
        double lu = std::log(tb.value(u));
        if (!(lu > 0)) break;
        long long c = static_cast<long long>(std::floor(rem / lu));
        if (c > 0) {
          int p = tb.par_pow(u, c);
          acc = acc < 0 ? p : tb.par(acc, p);
          rem = log_s - std::log(tb.value(acc));
        }
      }
      if (acc < 0) fail(ErrorKind::Budget, "greedy product found no factor");
      int root = acc;
      if (finish == ParallelWithY) root = tb.par(tb.leaf(neg), acc);
      else if (finish == SeriesWithY) root = tb.ser(tb.leaf(neg), acc);
      WeightImplementation w = done(tb.finish(root), info.seed_case);
      w.seed_power = info.seed_power;
      w.seed_y = info.seed_y;
      w.seed_x = info.seed_x;
      best_dist = std::min(best_dist, w.distance);
      if (w.distance <= eps) return w;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Budget) throw;
      break;
    }
  }
  fail(ErrorKind::Budget, "weight search exhausted its budget; best distance " + std::to_string(best_dist));
}

}  // namespace skeinkit

#endif  // SKEINKIT_POTTS_HPP
