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

#ifndef SKEINKIT_COMPILER_HPP
#define SKEINKIT_COMPILER_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "skeinkit/bracket.hpp"
#include "skeinkit/braid.hpp"
#include "skeinkit/circuit.hpp"
#include "skeinkit/common.hpp"
#include "skeinkit/net.hpp"
#include "skeinkit/params.hpp"
#include "skeinkit/skein_rep.hpp"

namespace skeinkit {

/// A qubit is the 2-dimensional path space of 4 points: |0> is the zigzag
/// (cup pair) path 0,1,0,1,0 and |1> is 0,1,2,1,0. Two qubits sit inside the
/// 8-point space as the paths through height 0 at the middle point.
class QubitEncoding {
 public:
  static constexpr int kStrandsPerQubit = 4;

  explicit QubitEncoding(const BracketParams& params)
      : params_(params), rep4_(check_dense(params), 4, BasisKind::Path), rep8_(params, 8, BasisKind::Path) {
    if (rep4_.dim() != 2) fail(ErrorKind::Usage, "qubit space must be 2-dimensional");
    const auto& pb = rep4_.path_basis();
    zero_ = pb.index_of({0, 1, 0, 1, 0});
    one_ = pb.index_of({0, 1, 2, 1, 0});
    const auto& pb8 = rep8_.path_basis();
    for (int a0 = 0; a0 < 2; ++a0)
      for (int a1 = 0; a1 < 2; ++a1) {
        std::vector<int> p = {0, 1, a0 ? 2 : 0, 1, 0, 1, a1 ? 2 : 0, 1, 0};
        sub_[2 * a0 + a1] = pb8.index_of(p);
      }
    inclusion_ = CMatrix::Zero(rep8_.dim(), 4);
    for (int k = 0; k < 4; ++k) inclusion_(sub_[k], k) = 1.0;
  }

  const BracketParams& params() const { return params_; }
  const SkeinRep& rep4() const { return rep4_; }
  const SkeinRep& rep8() const { return rep8_; }

  /// rho(sigma_i) on the qubit, i = 1..3, in the (|0>, |1>) ordering.
  Mat2 qubit_generator(int i, int sign = +1) const {
    const CMatrix& g = rep4_.generator(i, sign);
    Mat2 m;
    m << g(zero_, zero_), g(zero_, one_), g(one_, zero_), g(one_, one_);
    return m;
  }

  std::vector<Mat2> qubit_generators() const { return {qubit_generator(1), qubit_generator(2), qubit_generator(3)}; }

  CVector zero_state() const {
    CVector v = CVector::Zero(2);
    v(0) = 1.0;
    return v;
  }

  /// Isometric inclusion of the two-qubit space into the 8-point path space.
  const CMatrix& inclusion() const { return inclusion_; }

  Mat2 word_on_qubit(const BraidWord& w) const {
    Mat2 m = Mat2::Identity();
    for (const auto& l : w.letters()) m = qubit_generator(l.index, l.sign) * m;
    return m;
  }

 private:
  static const BracketParams& check_dense(const BracketParams& p) {
    if (!p.is_root_of_unity() || !p.dense())
      fail(ErrorKind::NotDense, "compiler needs a dense evaluation point (r = 5 or r >= 7), got " + p.describe());
    return p;
  }

  BracketParams params_;
  SkeinRep rep4_;
  SkeinRep rep8_;
  int zero_ = 0, one_ = 1;
  std::array<int, 4> sub_{};
  CMatrix inclusion_;
};

inline SU2Net build_net(const QubitEncoding& enc, int max_word_len) {
  return SU2Net(enc.qubit_generators(), 4, max_word_len);
}

enum class SynthesisMethod { NetLookup, SKRecursion, LocalSearch };

inline const char* to_string(SynthesisMethod m) {
  switch (m) {
    case SynthesisMethod::NetLookup: return "NetLookup";
    case SynthesisMethod::SKRecursion: return "SKRecursion";
    case SynthesisMethod::LocalSearch: return "LocalSearch";
  }
  return "?";
}

struct SynthesisResult {
  BraidWord word;
  double achieved_distance = 0.0;
  double leakage = 0.0;
  SynthesisMethod method = SynthesisMethod::NetLookup;
  int depth = 0;
};

namespace detail {

inline Quat rotation_quat(const Eigen::Vector3d& axis, double angle) {
  Eigen::Vector3d n = axis.normalized();
  return Quat(std::cos(angle / 2), std::sin(angle / 2) * n(0), std::sin(angle / 2) * n(1), std::sin(angle / 2) * n(2));
}

/// Balanced group commutator: returns (V, W) with V W V^-1 W^-1 = delta.
inline std::pair<Quat, Quat> group_commutator(Quat delta) {
  if (delta(0) < 0) delta = -delta;
  double w = std::min(1.0, delta(0));
  double theta = 2 * std::acos(w);
  Eigen::Vector3d n(delta(1), delta(2), delta(3));
  if (n.norm() < 1e-15) return {Quat(1, 0, 0, 0), Quat(1, 0, 0, 0)};
  double s = std::sqrt((1 - std::cos(theta / 2)) / 2);  // sin^2(phi/2)
  double phi = 2 * std::asin(std::sqrt(s));
  Quat v = rotation_quat({1, 0, 0}, phi), u = rotation_quat({0, 1, 0}, phi);
  Quat c = quat_mul(quat_mul(v, u), quat_mul(quat_conj(v), quat_conj(u)));
  if (c(0) < 0) c = -c;
  Eigen::Vector3d m(c(1), c(2), c(3));
  m.normalize();
  n.normalize();
  Eigen::Vector3d ax = m.cross(n);
  double ang = std::acos(std::clamp(m.dot(n), -1.0, 1.0));
  Quat sq;
  if (ax.norm() < 1e-12) {
    if (m.dot(n) > 0) {
      sq = Quat(1, 0, 0, 0);
    } else {
      Eigen::Vector3d perp = std::abs(m(0)) < 0.9 ? Eigen::Vector3d(1, 0, 0).cross(m) : Eigen::Vector3d(0, 1, 0).cross(m);
      sq = rotation_quat(perp, kPi);
    }
  } else {
    sq = rotation_quat(ax, ang);
  }
  auto conj_by = [&](const Quat& x) { return quat_mul(quat_mul(sq, x), quat_conj(sq)); };
  return {conj_by(v), conj_by(u)};
}

struct Approx {
  PackedWord word;
  Quat q;
};

inline Approx sk_recurse(const SU2Net& net, const Quat& target, int depth) {
  if (depth == 0) {
    const auto& e = net.entries()[net.nearest(target)];
    return {e.word, e.q};
  }
  Approx u = sk_recurse(net, target, depth - 1);
  Quat delta = quat_mul(target, quat_conj(u.q));
  auto [vq, wq] = group_commutator(delta);
  Approx v = sk_recurse(net, vq, depth - 1);
  Approx w = sk_recurse(net, wq, depth - 1);
  // matrix V W V^-1 W^-1 U, so U's word acts first
  Approx out;
  out.word = u.word;
  auto cat = [&](const PackedWord& p) { out.word.insert(out.word.end(), p.begin(), p.end()); };
  cat(inverse_word(w.word));
  cat(inverse_word(v.word));
  cat(w.word);
  cat(v.word);
  out.q = quat_mul(quat_mul(quat_mul(v.q, w.q), quat_mul(quat_conj(v.q), quat_conj(w.q))), u.q);
  return out;
}

inline PackedWord free_reduce(const PackedWord& w) {
  PackedWord out;
  for (auto l : w) {
    if (!out.empty() && out.back() == -l) out.pop_back();
    else out.push_back(l);
  }
  return out;
}

}  // namespace detail

/// Re-multiplies the word on the qubit space and measures its projective
/// distance to `target`.
inline double qubit_distance(const QubitEncoding& enc, const BraidWord& w, const Mat2& target) {
  return projective_distance(enc.word_on_qubit(w), target);
}

/// Shortest net word within eps, otherwise group-commutator recursion seeded
/// by the net, depth <= max_depth.
inline SynthesisResult synthesize(const Mat2& target, double eps, const QubitEncoding& enc, const SU2Net& net,
                                  bool allow_sk = true, int max_depth = 3) {
  require(eps > 0, "synthesize needs eps > 0");
  require((target * target.adjoint() - Mat2::Identity()).norm() < 1e-9, "synthesis target must be unitary");
  Quat tq = quat_of_unitary(target);
  SynthesisResult res;
  auto idx = net.first_within(tq, eps);
  if (idx >= 0) {
    res.word = unpack_word(net.entries()[idx].word, 4);
    res.method = SynthesisMethod::NetLookup;
  } else {
    if (!allow_sk) {
      double d;
      net.nearest(tq, &d);
      fail(ErrorKind::TargetUnreachable, "net reaches only " + std::to_string(d) + " > eps and recursion is disabled");
    }
    double best = 1e300;
    for (int depth = 1; depth <= max_depth; ++depth) {
      auto a = detail::sk_recurse(net, tq, depth);
      BraidWord w = unpack_word(detail::free_reduce(a.word), 4);
      double d = qubit_distance(enc, w, target);
      if (d < best) {
        best = d;
        res.word = w;
        res.depth = depth;
      }
      if (d <= eps) break;
    }
    res.method = SynthesisMethod::SKRecursion;
    if (best > eps)
      fail(ErrorKind::TargetUnreachable, "recursion depth " + std::to_string(max_depth) + " reaches only " + std::to_string(best));
  }
  res.achieved_distance = qubit_distance(enc, res.word, target);
  res.leakage = 0.0;
  if (res.achieved_distance > eps) fail(ErrorKind::Verification, "re-multiplied word misses the target");
  return res;
}

struct TwoQubitSearchOptions {
  int iterations = 4000;
  int max_len = 60;
  std::uint64_t seed = 1;
};

/// Encoded block and leakage of an 8-strand word: B = P^T M P and
/// ||(1 - P P^T) M P||.
inline std::pair<CMatrix, double> two_qubit_block(const QubitEncoding& enc, const BraidWord& w) {
  CMatrix m = word_matrix(enc.rep8(), w);
  const CMatrix& p = enc.inclusion();
  CMatrix mp = m * p;
  CMatrix b = p.transpose() * mp;
  CMatrix off = mp - p * b;
  double leak = off.norm() == 0 ? 0.0 : Eigen::JacobiSVD<CMatrix>(off).singularValues()(0);
  return {b, leak};
}

/// Best-effort local search for an 8-strand word whose encoded block
/// approximates a two-qubit target. The result is re-verified; reaching eps
/// is not guaranteed.
inline SynthesisResult search_two_qubit(const CMatrix& target, const QubitEncoding& enc,
                                        const TwoQubitSearchOptions& opt = {}) {
  require(target.rows() == 4 && target.cols() == 4, "two-qubit target must be 4x4");
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> letter(1, 7), sign(0, 1), move(0, 2);
  auto cost = [&](const BraidWord& w) {
    auto [b, leak] = two_qubit_block(enc, w);
    double overlap = std::abs((target.adjoint() * b).trace()) / 4.0;
    return std::sqrt(std::max(0.0, 2 * (1 - overlap))) + leak;
  };
  BraidWord best(8);
  double best_cost = cost(best);
  for (int it = 0; it < opt.iterations; ++it) {
    auto letters = best.letters();
    int mv = letters.empty() ? 0 : move(rng);
    if (mv == 0 && static_cast<int>(letters.size()) < opt.max_len) {
      std::uniform_int_distribution<std::size_t> pos(0, letters.size());
      letters.insert(letters.begin() + pos(rng), BraidLetter{letter(rng), sign(rng) ? 1 : -1});
    } else if (mv == 1 && !letters.empty()) {
      std::uniform_int_distribution<std::size_t> pos(0, letters.size() - 1);
      letters.erase(letters.begin() + pos(rng));
    } else if (!letters.empty()) {
      std::uniform_int_distribution<std::size_t> pos(0, letters.size() - 1);
      letters[pos(rng)] = BraidLetter{letter(rng), sign(rng) ? 1 : -1};
    }
    BraidWord cand(8, letters);
    double c = cost(cand);
    if (c < best_cost) {
      best_cost = c;
      best = cand;
    }
  }
  SynthesisResult res;
  res.word = best;
  res.method = SynthesisMethod::LocalSearch;
  auto [b, leak] = two_qubit_block(enc, best);
  res.achieved_distance = projective_distance(b, target);
  res.leakage = leak;
  return res;
}

struct CompileResult {
  PlatPresentation plat;
  double reported_eps = 0.0;  // bound on |p_plat - p_circuit|
  double total_distance = 0.0;
  double total_leakage = 0.0;
  std::vector<SynthesisResult> gates;
};

/// Local unitary of a gate on its own qubits.
inline CMatrix local_unitary(const Gate& g) {
  if (g.linear) fail(ErrorKind::Usage, "non-unitary gates cannot be compiled to braids");
  return gate_matrix(g);
}

/// Each gate becomes a braid word on 4 strands per qubit; the plat closure
/// gives |<L>|^2 / |delta|^{2g} ~ |<0..0|C|0..0>|^2. Per-gate accuracy is
/// eps / #gates; the reported bound is 2 (sum of distances + leakages).
inline CompileResult compile_circuit(const QuantumCircuit& c, double eps, const QubitEncoding& enc, const SU2Net& net,
                                     const TwoQubitSearchOptions& two_q = {}) {
  const int nq = c.n_qubits();
  if (nq < 1 || nq > 2) fail(ErrorKind::Usage, "compile_circuit handles 1 or 2 qubits");
  require(eps > 0, "compile_circuit needs eps > 0");
  const int n = 4 * nq;
  CompileResult out;
  BraidWord word(n);
  const double eps_gate = c.gates().empty() ? eps : eps / static_cast<double>(c.gates().size());
  for (const auto& g : c.gates()) {
    CMatrix u = local_unitary(g);
    SynthesisResult r;
    if (g.qubits.size() == 1) {
      r = synthesize(Mat2(u), eps_gate, enc, net);
      word.append(r.word.shifted(4 * g.qubits[0], n));
    } else if (g.qubits.size() == 2) {
      CMatrix t = u;
      if (g.qubits[0] == 1) {  // reorder to (qubit 0, qubit 1)
        CMatrix swap = CMatrix::Zero(4, 4);
        swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1;
        t = swap * u * swap;
      }
      r = search_two_qubit(t, enc, two_q);
      if (r.achieved_distance + r.leakage > eps_gate)
        fail(ErrorKind::TargetUnreachable, std::string("two-qubit gate ") + to_string(g.type) + " reached distance " +
                                               std::to_string(r.achieved_distance) + " with leakage " +
                                               std::to_string(r.leakage));
      word.append(r.word);
    } else {
      fail(ErrorKind::Usage, "gates on more than 2 qubits cannot be compiled");
    }
    out.total_distance += r.achieved_distance;
    out.total_leakage += r.leakage;
    out.gates.push_back(std::move(r));
  }
  out.plat = PlatPresentation(word);
  out.reported_eps = 2 * (out.total_distance + out.total_leakage);
  return out;
}

struct ReductionReport {
  double p_circuit = 0.0;
  double p_plat = 0.0;
  double bound = 0.0;
  bool pass = false;
};

inline ReductionReport verify_reduction(const QuantumCircuit& c, const PlatPresentation& plat, const BracketParams& params,
                                        double bound) {
  ReductionReport r;
  r.p_circuit = simulate_accept(c).probability;
  r.p_plat = plat_probability(plat, params);
  r.bound = bound;
  r.pass = std::abs(r.p_circuit - r.p_plat) <= bound;
  return r;
}

/// Bracket by the Morse scan in the preferred basis.
inline Complex plat_bracket(const PlatPresentation& p, const BracketParams& params) { return bracket_morse(p, params); }

/// Base plat with m extra unknots and some copies of a small link L0, all
/// split from each other.
struct GadgetLink {
  PlatPresentation base;
  int unknots = 0;
  int l0_copies = 0;
  PlatPresentation l0;
  Complex base_bracket = 0.0;
  Complex l0_bracket = 0.0;
  Complex delta = 0.0;

  Complex bracket() const { return base_bracket * std::pow(delta, unknots) * std::pow(l0_bracket, l0_copies); }

  PlatPresentation to_plat() const {
    PlatPresentation out = base;
    for (int i = 0; i < unknots; ++i) out = split_union(out, PlatPresentation::identity(1));
    for (int i = 0; i < l0_copies; ++i) out = split_union(out, l0);
    return out;
  }
};

/// L0: the 2-bridge plat of a 1-qubit y-rotation with |<0|R|0>| = 0.3/|delta|,
/// so |<L0>| / |delta| is about 0.3.
inline PlatPresentation make_l0(const QubitEncoding& enc, const SU2Net& net, double eps = 0.01) {
  double c = 0.3 / enc.params().delta_abs();
  double s = std::sqrt(1 - c * c);
  Mat2 ry;
  ry << c, -s, s, c;
  return PlatPresentation(synthesize(ry, eps, enc, net).word);
}

inline constexpr int kMaxL0Copies = 200;

/// Adds unknots (factor |delta| > 1 each) and copies of L0 (factor
/// |<L0>| < 1 each) so that |bracket| lands in [lo, hi], using as few extra
/// components as possible.
inline GadgetLink pad_to_window(const PlatPresentation& p, double lo, double hi, const BracketParams& params,
                                const PlatPresentation& l0) {
  require(0 < lo && lo < hi, "pad_to_window needs 0 < lo < hi");
  GadgetLink gl;
  gl.base = p;
  gl.l0 = l0;
  gl.delta = params.delta();
  gl.base_bracket = plat_bracket(p, params);
  gl.l0_bracket = plat_bracket(l0, params);
  const double b = std::abs(gl.base_bracket);
  const double d = params.delta_abs(), q = std::abs(gl.l0_bracket);
  if (b <= 1e-12 * std::pow(d, p.g())) fail(ErrorKind::ZeroBracket, "bracket is zero; no padding reaches a positive window");
  require(d > 1 && q < 1 && q > 0, "padding needs |delta| > 1 and 0 < |<L0>| < 1");
  const double ld = std::log(d), lq = std::log(q);
  int best_total = -1;
  for (int c = 0; c <= kMaxL0Copies; ++c) {
    double base_log = std::log(b) + c * lq;
    double m_lo = std::ceil((std::log(lo) - base_log) / ld - 1e-12);
    double m_hi = std::floor((std::log(hi) - base_log) / ld + 1e-12);
    int m = static_cast<int>(std::max(0.0, m_lo));
    if (m > m_hi) continue;
    // confirm on the actual product, not the logarithms
    double v = b * std::pow(d, m) * std::pow(q, c);
    if (v < lo || v > hi) {
      if (m + 1 <= m_hi && b * std::pow(d, m + 1) * std::pow(q, c) >= lo) ++m;
      else continue;
      v = b * std::pow(d, m) * std::pow(q, c);
      if (v < lo || v > hi) continue;
    }
    if (best_total < 0 || m + c < best_total) {
      best_total = m + c;
      gl.unknots = m;
      gl.l0_copies = c;
    }
  }
  if (best_total < 0)
    fail(ErrorKind::InfeasibleWindow, "no combination of unknots and up to 200 copies of L0 lands in the window");
  double got = std::abs(gl.bracket());
  if (got < lo || got > hi) fail(ErrorKind::Verification, "padded bracket left the window");
  return gl;
}

/// Pure-braid words on 4 strands with their qubit matrices (full U(2), not
/// projective), used to undo the state change of a merging crossing.
class PureBraidNet {
 public:
  struct Entry {
    PackedWord word;  // sigma letters on strands 1..4
    Mat2 m;
  };

  PureBraidNet(const QubitEncoding& enc, int max_gen_len, std::size_t cap = 40000) {
    // A_ij = sigma_{j-1} .. sigma_{i+1} sigma_i^2 sigma_{i+1}^-1 .. sigma_{j-1}^-1
    std::vector<PackedWord> gens;
    for (int i = 1; i <= 3; ++i)
      for (int j = i + 1; j <= 4; ++j) {
        PackedWord w;
        for (int k = j - 1; k > i; --k) w.push_back(static_cast<std::int8_t>(-k));
        w.push_back(static_cast<std::int8_t>(i));
        w.push_back(static_cast<std::int8_t>(i));
        for (int k = i + 1; k <= j - 1; ++k) w.push_back(static_cast<std::int8_t>(k));
        gens.push_back(w);
        gens.push_back(inverse_word(w));
      }
    auto mat = [&](const PackedWord& w) { return enc.word_on_qubit(unpack_word(w, 4)); };
    std::vector<Mat2> gm;
    for (const auto& g : gens) gm.push_back(mat(g));
    auto key = [](const Mat2& m) {
      std::array<long long, 8> k;
      for (int a = 0; a < 4; ++a) {
        k[2 * a] = std::llround(m(a / 2, a % 2).real() * 1e8);
        k[2 * a + 1] = std::llround(m(a / 2, a % 2).imag() * 1e8);
      }
      return k;
    };
    std::map<std::array<long long, 8>, int> seen;
    entries_.push_back({{}, Mat2::Identity()});
    seen[key(Mat2::Identity())] = 0;
    std::size_t begin = 0, end = 1;
    for (int len = 1; len <= max_gen_len && entries_.size() < cap; ++len) {
      for (std::size_t k = begin; k < end && entries_.size() < cap; ++k)
        for (std::size_t g = 0; g < gens.size() && entries_.size() < cap; ++g) {
          Mat2 m = gm[g] * entries_[k].m;
          auto kk = key(m);
          if (seen.count(kk)) continue;
          seen[kk] = 1;
          PackedWord w = entries_[k].word;
          w.insert(w.end(), gens[g].begin(), gens[g].end());
          entries_.push_back({std::move(w), m});
        }
      begin = end;
      end = entries_.size();
    }
  }

  const std::vector<Entry>& entries() const { return entries_; }

  /// Word W (pure) minimizing ||rho(W) psi - target||, meet in the middle:
  /// W = W2 then W1 with W2 psi ~ W1^dagger target.
  std::pair<PackedWord, double> best_correction(const CVector& psi, const CVector& target) const {
    const double cell = 0.1;
    using Key = std::array<int, 4>;
    auto to4 = [](const CVector& v) { return Eigen::Vector4d(v(0).real(), v(0).imag(), v(1).real(), v(1).imag()); };
    auto key_of = [&](const Eigen::Vector4d& x) {
      return Key{int(std::floor(x(0) / cell)), int(std::floor(x(1) / cell)), int(std::floor(x(2) / cell)),
                 int(std::floor(x(3) / cell))};
    };
    std::map<Key, std::vector<std::uint32_t>> grid;
    std::vector<Eigen::Vector4d> img(entries_.size());
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      img[k] = to4(entries_[k].m * psi);
      grid[key_of(img[k])].push_back(static_cast<std::uint32_t>(k));
    }
    double best = 1e300;
    std::size_t b1 = 0, b2 = 0;
    for (std::size_t k1 = 0; k1 < entries_.size(); ++k1) {
      Eigen::Vector4d u = to4(entries_[k1].m.adjoint() * target);
      Key kc = key_of(u);
      for (int d = 0; d < 81; ++d) {
        Key n = kc;
        int r = d;
        for (int a = 0; a < 4; ++a, r /= 3) n[a] += r % 3 - 1;
        auto it = grid.find(n);
        if (it == grid.end()) continue;
        for (auto k2 : it->second) {
          double dist = (img[k2] - u).norm();
          if (dist < best) {
            best = dist;
            b1 = k1;
            b2 = k2;
          }
        }
      }
    }
    if (best > 1e299) {  // nothing in the neighbourhood: fall back to single words
      for (std::size_t k = 0; k < entries_.size(); ++k) {
        double dist = (entries_[k].m * psi - target).norm();
        if (dist < best) {
          best = dist;
          b1 = 0;
          b2 = k;
        }
      }
    }
    PackedWord w = entries_[b2].word;
    w.insert(w.end(), entries_[b1].word.begin(), entries_[b1].word.end());
    return {w, best};
  }

 private:
  std::vector<Entry> entries_;
};

struct KnotifyResult {
  PlatPresentation plat;
  int merges = 0;
  Complex bracket_in = 0.0;
  Complex bracket_out = 0.0;
  double deviation = 0.0;  // |bracket_out - bracket_in|
  double bound = 0.0;      // eps |delta|^g
  BraidWord prefix;        // crossings and pure corrections placed below the input braid
};

/// Merges components by a crossing between neighbouring cups of different
/// components, each followed by a pure braid on the same four strands that
/// maps the disturbed cup state back to the cup state (phase included).
inline KnotifyResult knotify(const PlatPresentation& p, double eps, const QubitEncoding& enc, const PureBraidNet& pure) {
  require(eps > 0, "knotify needs eps > 0");
  const BracketParams& params = enc.params();
  KnotifyResult res;
  res.bracket_in = bracket_morse(p, params, BasisKind::Path);
  res.bound = eps * std::pow(params.delta_abs(), p.g());
  const int n = p.n_strands();
  res.prefix = BraidWord(n);
  if (plat_components(p) == 1) {
    res.plat = p;
    res.bracket_out = res.bracket_in;
    return res;
  }
  // which component each bottom cup belongs to
  auto cup_components = [&](const BraidWord& full) {
    auto perm = underlying_permutation(full);
    detail::DisjointSets ds(2 * n);
    for (int j = 0; j < n; j += 2) {
      ds.unite(j, j + 1);
      ds.unite(n + j, n + j + 1);
    }
    for (int s = 1; s <= n; ++s) ds.unite(s - 1, n + perm[s] - 1);
    std::vector<int> comp(p.g());
    for (int j = 0; j < p.g(); ++j) comp[j] = ds.find(2 * j);
    return comp;
  };
  const int needed = plat_components(p) - 1;
  const double eps_merge = eps / needed;
  CVector zero = enc.zero_state();
  CVector psi = enc.qubit_generator(2) * zero;
  auto [corr, err] = pure.best_correction(psi, zero);
  if (err > eps_merge)
    fail(ErrorKind::TargetUnreachable, "pure-braid correction reaches only " + std::to_string(err));
  for (int j = 1; j < p.g(); ++j) {
    BraidWord full = res.prefix * p.braid();
    auto comp = cup_components(full);
    if (comp[j - 1] == comp[j]) continue;
    // strands 2j-1 .. 2j+2 carry cups j and j+1; sigma_{2j} joins them
    res.prefix.push(2 * j, +1);
    res.prefix.append(unpack_word(corr, 4).shifted(2 * j - 2, n));
    ++res.merges;
  }
  res.plat = PlatPresentation(res.prefix * p.braid());
  if (plat_components(res.plat) != 1) fail(ErrorKind::Verification, "knotify left more than one component");
  if (!is_pure(unpack_word(corr, 4))) fail(ErrorKind::Verification, "correction word is not pure");
  res.bracket_out = bracket_morse(res.plat, params, BasisKind::Path);
  res.deviation = std::abs(res.bracket_out - res.bracket_in);
  if (res.deviation > res.bound) fail(ErrorKind::Verification, "knotify bracket deviation exceeds eps |delta|^g");
  return res;
}

}  // namespace skeinkit

#endif  // SKEINKIT_COMPILER_HPP
