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

#ifndef SKEINKIT_PARTITION_HPP
#define SKEINKIT_PARTITION_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "skeinkit/common.hpp"
#include "skeinkit/potts.hpp"

namespace skeinkit {

/// A set partition of {0..k-1} as a restricted growth string: block labels
/// in order of first appearance.
using SetPartition = std::vector<int>;

struct PartitionBasis {
  int k = 0;
  bool planar = false;
  std::vector<SetPartition> elements;

  std::size_t size() const { return elements.size(); }
  int index_of(const SetPartition& p) const {
    auto it = std::find(elements.begin(), elements.end(), p);
    return it == elements.end() ? -1 : static_cast<int>(it - elements.begin());
  }
};

inline int block_count(const SetPartition& p) { return p.empty() ? 0 : *std::max_element(p.begin(), p.end()) + 1; }

inline bool is_noncrossing(const SetPartition& p) {
  const int k = static_cast<int>(p.size());
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      for (int c = b + 1; c < k; ++c)
        for (int d = c + 1; d < k; ++d)
          if (p[a] == p[c] && p[b] == p[d] && p[a] != p[b]) return false;
  return true;
}

/// All partitions of {0..k-1}, or only the non-crossing ones.
inline PartitionBasis partition_basis(int k, bool planar) {
  require(k >= 0, "partition_basis needs k >= 0");
  if (k > (planar ? 12 : 10)) fail(ErrorKind::Budget, planar ? "planar basis limited to k <= 12" : "basis limited to k <= 10");
  PartitionBasis out;
  out.k = k;
  out.planar = planar;
  SetPartition cur(k);
  std::vector<int> last;  // last element of each block so far
  auto rec = [&](auto&& self, int i) -> void {
    if (i == k) {
      out.elements.push_back(cur);
      return;
    }
    const int blocks = static_cast<int>(last.size());
    for (int b = 0; b <= blocks; ++b) {
      if (planar && b < blocks) {
        // joining block b crosses any block that started before last[b]
        // and has an element between last[b] and i
        bool crossing = false;
        for (int j = last[b] + 1; j < i && !crossing; ++j) {
          int bj = cur[j];
          if (bj == b) continue;
          for (int a = 0; a < last[b] && !crossing; ++a) crossing = cur[a] == bj;
        }
        if (crossing) continue;
      }
      cur[i] = b;
      if (b == blocks) {
        last.push_back(i);
        self(self, i + 1);
        last.pop_back();
      } else {
        int keep = last[b];
        last[b] = i;
        self(self, i + 1);
        last[b] = keep;
      }
    }
  };
  rec(rec, 0);
  return out;
}

/// Glues g2 onto g1 by identifying g2's vertices b2[i] with g1's b1[i]. The
/// remaining vertices of g2 are appended; `map2` receives where each g2
/// vertex went. The result has no boundary.
inline PottsGraph glue(const PottsGraph& g1, const std::vector<int>& b1, const PottsGraph& g2,
                       const std::vector<int>& b2, std::vector<int>* map2 = nullptr) {
  require(b1.size() == b2.size(), "glue: boundary sizes differ");
  PottsGraph out = g1;
  out.boundary.clear();
  std::vector<int> m(g2.vertices, -1);
  for (std::size_t i = 0; i < b2.size(); ++i) m.at(b2[i]) = b1.at(i);
  for (int v = 0; v < g2.vertices; ++v)
    if (m[v] < 0) m[v] = out.add_vertex();
  for (const auto& e : g2.edges) out.add_edge(m[e.u], m[e.v], e.y);
  if (map2) *map2 = m;
  return out;
}

/// Graph with a left and a right boundary of the same size.
struct OperatorGraph {
  PottsGraph g;
  std::vector<int> left, right;
};

/// op1 followed by op2.
inline OperatorGraph compose(const OperatorGraph& op1, const OperatorGraph& op2) {
  std::vector<int> m;
  OperatorGraph out;
  out.g = glue(op1.g, op1.right, op2.g, op2.left, &m);
  out.left = op1.left;
  for (int r : op2.right) out.right.push_back(m[r]);
  return out;
}

inline OperatorGraph identity_operator(int k) {
  OperatorGraph op;
  op.g = PottsGraph(k);
  for (int i = 0; i < k; ++i) {
    op.left.push_back(i);
    op.right.push_back(i);
  }
  return op;
}

/// A_{j,y}: an edge of weight y between boundary positions j and j+1 (1-based).
inline OperatorGraph a_operator_graph(int k, int j, double y) {
  require(j >= 1 && j < k, "A_{j,y} needs 1 <= j < k");
  OperatorGraph op = identity_operator(k);
  op.g.add_edge(j - 1, j, y);
  return op;
}

/// B_{j,x}: boundary position j (1-based) is split into a left and a right
/// vertex joined by an edge of dual weight x, i.e. weight 1 + n/(x - 1).
inline OperatorGraph b_operator_graph(int k, int j, double x, double n) {
  require(j >= 1 && j <= k, "B_{j,x} needs 1 <= j <= k");
  require(x != 1.0, "B_{j,x} needs x != 1");
  OperatorGraph op = identity_operator(k);
  int r = op.g.add_vertex();
  op.right[j - 1] = r;
  op.g.add_edge(j - 1, r, 1.0 + n / (x - 1.0));
  return op;
}

enum class EdgeOpKind { A, B };

struct EdgeOp {
  EdgeOpKind kind = EdgeOpKind::A;
  int j = 1;
  double weight = 1.0;  // y for A, dual x for B
  RMatrix matrix;
};

inline std::string describe(const EdgeOp& op) {
  return std::string(op.kind == EdgeOpKind::A ? "A" : "B") + "_{" + std::to_string(op.j) + "," + std::to_string(op.weight) + "}";
}

/// V(k) spanned by shrub forests: each block of size >= 2 becomes a star
/// whose centre is an extra vertex joined to the block by edges of weight
/// `shrub_y`. Vectors are compared through the gluing pairing
/// <A, B> = Z(A glued to B).
class ShrubSpace {
 public:
  ShrubSpace(PartitionBasis basis, double n, double shrub_y) : basis_(std::move(basis)), n_(n), shrub_y_(shrub_y) {
    require(basis_.size() <= 203, "shrub space limited to 203 basis elements");
    for (const auto& p : basis_.elements) forests_.push_back(make_forest(p));
    const int d = static_cast<int>(basis_.size());
    gram_.resize(d, d);
    for (int a = 0; a < d; ++a)
      for (int b = a; b < d; ++b) gram_(a, b) = gram_(b, a) = pair(forests_[a], forests_[b]);
  }

  int k() const { return basis_.k; }
  int dim() const { return static_cast<int>(basis_.size()); }
  double n() const { return n_; }
  double shrub_weight() const { return shrub_y_; }
  const PartitionBasis& basis() const { return basis_; }
  const PottsGraph& forest(int i) const { return forests_.at(i); }
  const RMatrix& gram() const { return gram_; }

  PottsGraph make_forest(const SetPartition& p) const {
    const int k = basis_.k;
    PottsGraph g(k);
    for (int i = 0; i < k; ++i) g.boundary.push_back(i);
    g.planar = basis_.planar;
    for (int b = 0; b < block_count(p); ++b) {
      int size = static_cast<int>(std::count(p.begin(), p.end(), b));
      if (size < 2) continue;
      int c = g.add_vertex();
      for (int i = 0; i < k; ++i)
        if (p[i] == b) g.add_edge(i, c, shrub_y_);
    }
    return g;
  }

  double pair(const PottsGraph& a, const PottsGraph& b) const { return z_cluster(glue(a, a.boundary, b, b.boundary), n_); }

  /// H(d, f) = Z(forest f, then the operator, then forest d).
  RMatrix pairing(const OperatorGraph& op) const {
    const int d = dim();
    RMatrix h(d, d);
    for (int f = 0; f < d; ++f) {
      std::vector<int> m;
      PottsGraph lower = glue(forests_[f], forests_[f].boundary, op.g, op.left, &m);
      std::vector<int> top;
      for (int r : op.right) top.push_back(m[r]);
      for (int t = 0; t < d; ++t) h(t, f) = z_cluster(glue(lower, top, forests_[t], forests_[t].boundary), n_);
    }
    return h;
  }

  int gram_rank() const {
    Eigen::JacobiSVD<RMatrix> svd(gram_);
    const auto& s = svd.singularValues();
    if (s.size() == 0) return 0;
    int r = 0;
    for (int i = 0; i < s.size(); ++i) r += s(i) > 1e-8 * s(0);
    return r;
  }

  /// Matrix of an operator graph on the shrub basis: G^{-1} H.
  RMatrix operator_matrix(const OperatorGraph& op) const {
    if (gram_rank() < dim()) fail(ErrorKind::SingularGram, "Gram matrix of the shrub forests is singular here");
    return gram_.colPivHouseholderQr().solve(pairing(op));
  }

  EdgeOp a_operator(int j, double y) const {
    return {EdgeOpKind::A, j, y, operator_matrix(a_operator_graph(k(), j, y))};
  }
  EdgeOp b_operator(int j, double x) const {
    return {EdgeOpKind::B, j, x, operator_matrix(b_operator_graph(k(), j, x, n_))};
  }

 private:
  PartitionBasis basis_;
  double n_, shrub_y_;
  std::vector<PottsGraph> forests_;
  RMatrix gram_;
};

/// Numerical rank of the shrub-forest Gram matrix with shrub weight y.
inline int gram_rank(const PartitionBasis& basis, double n, double y) { return ShrubSpace(basis, n, y).gram_rank(); }

inline constexpr int kMaxTransferWidth = 8;

/// Z by a transfer sweep over a vertex order: the state is a combination of
/// connectivity partitions of the current frontier (shrub forests whose
/// edges are contracted). Each edge e sends P to P + (y_e - 1) merge(P);
/// a vertex leaves the frontier once all its edges are in, contributing n
/// if it is alone in its block.
template <class S>
S z_transfer(const BasicPottsGraph<S>& g, const S& n, std::vector<int> order = {}) {
  const int v = g.vertices;
  if (order.empty())
    for (int i = 0; i < v; ++i) order.push_back(i);
  require(static_cast<int>(order.size()) == v, "layout must list every vertex once");
  std::vector<int> pos(v, -1);
  for (int t = 0; t < v; ++t) {
    require(order[t] >= 0 && order[t] < v && pos[order[t]] < 0, "layout must list every vertex once");
    pos[order[t]] = t;
  }
  std::vector<int> last_use(v);
  for (int i = 0; i < v; ++i) last_use[i] = pos[i];
  std::vector<std::vector<int>> incident(v);  // edges processed when their later endpoint arrives
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    int a = g.edges[e].u, b = g.edges[e].v;
    int later = pos[a] >= pos[b] ? a : b;
    incident[later].push_back(e);
    last_use[a] = std::max(last_use[a], pos[later]);
    last_use[b] = std::max(last_use[b], pos[later]);
  }
  using State = std::vector<int>;
  auto canon = [](State s) {
    std::map<int, int> relabel;
    for (auto& x : s) {
      auto it = relabel.find(x);
      if (it == relabel.end()) it = relabel.emplace(x, static_cast<int>(relabel.size())).first;
      x = it->second;
    }
    return s;
  };
  std::vector<int> frontier;
  std::map<State, S> cur{{State{}, S(1)}};
  for (int t = 0; t < v; ++t) {
    const int w = order[t];
    frontier.push_back(w);
    if (static_cast<int>(frontier.size()) > kMaxTransferWidth) fail(ErrorKind::Budget, "transfer frontier wider than 8");
    {
      std::map<State, S> next;
      for (auto& [s, c] : cur) {
        State s2 = s;
        s2.push_back(block_count(s));
        next[s2] += c;
      }
      cur.swap(next);
    }
    for (int e : incident[w]) {
      const auto& ed = g.edges[e];
      if (ed.u == ed.v) {
        for (auto& [s, c] : cur) c *= ed.y;
        continue;
      }
      int iu = static_cast<int>(std::find(frontier.begin(), frontier.end(), ed.u) - frontier.begin());
      int iv = static_cast<int>(std::find(frontier.begin(), frontier.end(), ed.v) - frontier.begin());
      std::map<State, S> next;
      S ym1 = ed.y - S(1);
      for (auto& [s, c] : cur) {
        next[s] += c;
        if (ym1 == S(0)) continue;
        State m = s;
        int from = m[iv], to = m[iu];
        for (auto& x : m)
          if (x == from) x = to;
        next[canon(m)] += ym1 * c;
      }
      cur.swap(next);
    }
    // retire finished vertices
    for (int i = static_cast<int>(frontier.size()) - 1; i >= 0; --i) {
      if (last_use[frontier[i]] > t) continue;
      std::map<State, S> next;
      for (auto& [s, c] : cur) {
        bool alone = std::count(s.begin(), s.end(), s[i]) == 1;
        State s2 = s;
        s2.erase(s2.begin() + i);
        next[canon(s2)] += alone ? c * n : c;
      }
      cur.swap(next);
      frontier.erase(frontier.begin() + i);
    }
  }
  S total = 0;
  for (auto& [s, c] : cur) total += c;
  return total;
}

}  // namespace skeinkit

#endif  // SKEINKIT_PARTITION_HPP
