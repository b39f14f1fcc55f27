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

#ifndef SKEINKIT_NET_HPP
#define SKEINKIT_NET_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "skeinkit/braid.hpp"
#include "skeinkit/common.hpp"

namespace skeinkit {

using Mat2 = Eigen::Matrix2cd;
using Quat = Eigen::Vector4d;  // (w, x, y, z)

// U = w I - i (x X + y Y + z Z); quaternion product matches matrix product.
inline Quat quat_of_su2(const Mat2& u) {
  return Quat(u(0, 0).real(), -u(0, 1).imag(), u(1, 0).real(), -u(0, 0).imag());
}

inline Mat2 su2_of_quat(const Quat& q) {
  const Complex I(0, 1);
  Mat2 u;
  u << Complex(q(0), -q(3)), -I * q(1) - q(2), -I * q(1) + q(2), Complex(q(0), q(3));
  return u;
}

/// Rescales a 2x2 unitary to determinant 1 (one of the two square roots).
inline Mat2 to_su2(const Mat2& u) { return u / std::sqrt(u.determinant()); }

inline Quat quat_of_unitary(const Mat2& u) {
  Quat q = quat_of_su2(to_su2(u));
  return q / q.norm();
}

inline Quat quat_mul(const Quat& a, const Quat& b) {
  return Quat(a(0) * b(0) - a(1) * b(1) - a(2) * b(2) - a(3) * b(3),
              a(0) * b(1) + a(1) * b(0) + a(2) * b(3) - a(3) * b(2),
              a(0) * b(2) - a(1) * b(3) + a(2) * b(0) + a(3) * b(1),
              a(0) * b(3) + a(1) * b(2) - a(2) * b(1) + a(3) * b(0));
}

inline Quat quat_conj(const Quat& q) { return Quat(q(0), -q(1), -q(2), -q(3)); }

/// min over phases of ||U - e^{i phi} V||_2 for unit quaternions: 2 sin(theta/4)
/// where theta is the rotation angle of U^{-1} V.
/// Computed as the chordal distance min(|a - b|, |a + b|), which equals it
/// for unit quaternions and keeps full precision near zero.
inline double quat_distance(const Quat& a, const Quat& b) { return std::min((a - b).norm(), (a + b).norm()); }

inline double projective_distance(const Mat2& u, const Mat2& v) {
  return quat_distance(quat_of_unitary(u), quat_of_unitary(v));
}

/// min over phases of the operator 2-norm ||X - e^{i phi} Y|| for square
/// matrices of any size. Coarse scan around the trace-aligned phase, then a
/// golden-section refinement.
inline double projective_distance(const CMatrix& x, const CMatrix& y) {
  if (x.rows() == 2 && x.cols() == 2 && y.rows() == 2) {
    Mat2 a = x, b = y;
    if (std::abs(std::abs(a.determinant()) - 1) < 1e-9 && std::abs(std::abs(b.determinant()) - 1) < 1e-9 &&
        (a * a.adjoint() - Mat2::Identity()).norm() < 1e-9 && (b * b.adjoint() - Mat2::Identity()).norm() < 1e-9)
      return projective_distance(a, b);
  }
  auto f = [&](double phi) {
    CMatrix d = x - std::polar(1.0, phi) * y;
    return Eigen::JacobiSVD<CMatrix>(d).singularValues()(0);
  };
  double phi0 = std::arg((y.adjoint() * x).trace());
  double best_phi = phi0, best = f(phi0);
  const int samples = 48;
  for (int s = 1; s < samples; ++s) {
    double phi = phi0 + 2 * kPi * s / samples;
    double v = f(phi);
    if (v < best) {
      best = v;
      best_phi = phi;
    }
  }
  double lo = best_phi - 2 * kPi / samples, hi = best_phi + 2 * kPi / samples;
  const double g = (std::sqrt(5.0) - 1) / 2;
  for (int it = 0; it < 40; ++it) {
    double m1 = hi - g * (hi - lo), m2 = lo + g * (hi - lo);
    if (f(m1) < f(m2)) hi = m2;
    else lo = m1;
  }
  return std::min(best, f((lo + hi) / 2));
}

/// Letters are stored as signed indices: +i for sigma_i, -i for its inverse.
using PackedWord = std::vector<std::int8_t>;

inline BraidWord unpack_word(const PackedWord& w, int n_strands, int offset = 0) {
  BraidWord out(n_strands);
  for (auto l : w) out.push(std::abs(l) + offset, l > 0 ? 1 : -1);
  return out;
}

inline PackedWord pack_word(const BraidWord& w) {
  PackedWord out;
  out.reserve(w.size());
  for (const auto& l : w.letters()) out.push_back(static_cast<std::int8_t>(l.sign * l.index));
  return out;
}

inline PackedWord inverse_word(const PackedWord& w) {
  PackedWord out(w.rbegin(), w.rend());
  for (auto& l : out) l = static_cast<std::int8_t>(-l);
  return out;
}

/// Projective epsilon-net over words in a few generators acting on C^2.
///
/// Entries are kept in breadth-first order with letters tried as
/// s1, s1^-1, s2, s2^-1, ..., so the first entry within a distance is the
/// shortest word and, among those, the lexicographically first found.
class SU2Net {
 public:
  static constexpr std::size_t kMaxEntries = 10'000'000;

  struct Entry {
    PackedWord word;
    Quat q;
  };

  SU2Net() = default;

  /// generators[k] is the matrix of letter k+1; inverses are added.
  SU2Net(std::vector<Mat2> generators, int n_strands, int max_len, double dedup_tol = 1e-7)
      : gens_(std::move(generators)), n_strands_(n_strands), max_len_(max_len), tol_(dedup_tol) {
    require(max_len >= 0, "net word length must be >= 0");
    build();
  }

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  int max_len() const { return max_len_; }
  int n_strands() const { return n_strands_; }
  const std::vector<Mat2>& generators() const { return gens_; }

  Quat letter_quat(std::int8_t l) const {
    Quat q = gen_q_[std::abs(l) - 1];
    return l > 0 ? q : quat_conj(q);
  }

  Quat word_quat(const PackedWord& w) const {
    Quat q(1, 0, 0, 0);
    for (auto l : w) q = quat_mul(letter_quat(l), q);
    return q;
  }

  Mat2 word_matrix(const PackedWord& w) const {
    Mat2 m = Mat2::Identity();
    for (auto l : w) m = (l > 0 ? gens_[l - 1] : Mat2(gens_[-l - 1].adjoint())) * m;
    return m;
  }

  /// Index of the nearest entry; ties go to the earliest entry.
  std::size_t nearest(const Quat& target, double* dist = nullptr) const {
    std::size_t best = 0;
    double best_c = -1;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      double c = std::abs(entries_[k].q.dot(target));
      if (c > best_c + 1e-15) {
        best_c = c;
        best = k;
      }
    }
    if (dist) *dist = quat_distance(entries_[best].q, target);
    return best;
  }

  /// First entry (shortest, then lexicographic) within eps, or -1.
  std::ptrdiff_t first_within(const Quat& target, double eps) const {
    double c_min = std::cos(2.0 * std::asin(std::min(1.0, eps / 2.0)));
    for (std::size_t k = 0; k < entries_.size(); ++k)
      if (std::abs(entries_[k].q.dot(target)) >= c_min - 1e-15 &&
          quat_distance(entries_[k].q, target) <= eps)
        return static_cast<std::ptrdiff_t>(k);
    return -1;
  }

  /// Largest nearest-entry distance over `samples` Haar-random targets.
  double covering_radius(int samples, std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd;
    double worst = 0;
    for (int s = 0; s < samples; ++s) {
      Quat t(nd(rng), nd(rng), nd(rng), nd(rng));
      t /= t.norm();
      double d;
      nearest(t, &d);
      worst = std::max(worst, d);
    }
    return worst;
  }

  /// Text cache: a header line then one word per line (signed indices,
  /// "e" for the empty word). Matrices are recomputed on load.
  void save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) fail(ErrorKind::Usage, "cannot write net cache " + path);
    out << "skeinkit-net v1 strands=" << n_strands_ << " max_len=" << max_len_ << " count=" << entries_.size() << "\n";
    for (const auto& e : entries_) {
      if (e.word.empty()) out << "e";
      for (std::size_t i = 0; i < e.word.size(); ++i) out << (i ? " " : "") << int(e.word[i]);
      out << "\n";
    }
  }

  static SU2Net load(const std::string& path, std::vector<Mat2> generators) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Parse, "cannot read net cache " + path);
    std::string header;
    std::getline(in, header);
    SU2Net net;
    std::size_t count = 0;
    if (std::sscanf(header.c_str(), "skeinkit-net v1 strands=%d max_len=%d count=%zu", &net.n_strands_, &net.max_len_, &count) != 3)
      fail(ErrorKind::Parse, "bad net cache header");
    net.gens_ = std::move(generators);
    net.init_gen_quats();
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      Entry e;
      if (line != "e") {
        std::istringstream ls(line);
        int v;
        while (ls >> v) {
          if (v == 0 || std::abs(v) > static_cast<int>(net.gens_.size())) fail(ErrorKind::Parse, "bad letter in net cache");
          e.word.push_back(static_cast<std::int8_t>(v));
        }
      }
      e.q = net.word_quat(e.word);
      net.entries_.push_back(std::move(e));
    }
    if (net.entries_.size() != count) fail(ErrorKind::Parse, "net cache entry count mismatch");
    return net;
  }

 private:
  using Key = std::array<int, 4>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = 1469598103934665603ull;
      for (int v : k) h = (h ^ static_cast<std::uint32_t>(v)) * 1099511628211ull;
      return h;
    }
  };

  void init_gen_quats() {
    gen_q_.clear();
    for (const auto& g : gens_) gen_q_.push_back(quat_of_unitary(g));
  }

  static Quat canonical(Quat q) {
    for (int i = 0; i < 4; ++i) {
      if (q(i) > 1e-12) break;
      if (q(i) < -1e-12) {
        q = -q;
        break;
      }
    }
    return q;
  }

  Key key_of(const Quat& q) const {
    return {int(std::floor(q(0) / cell_)), int(std::floor(q(1) / cell_)), int(std::floor(q(2) / cell_)),
            int(std::floor(q(3) / cell_))};
  }

  bool seen(const Quat& q) const {
    for (const Quat& s : {q, Quat(-q)}) {
      Key k = key_of(s);
      for (int d = 0; d < 81; ++d) {
        Key n = k;
        int r = d;
        for (int a = 0; a < 4; ++a, r /= 3) n[a] += r % 3 - 1;
        auto it = grid_.find(n);
        if (it == grid_.end()) continue;
        for (auto idx : it->second)
          if ((entries_[idx].q - s).norm() < tol_) return true;
      }
    }
    return false;
  }

  void insert(Entry e) {
    e.q = canonical(e.q);
    grid_[key_of(e.q)].push_back(static_cast<std::uint32_t>(entries_.size()));
    entries_.push_back(std::move(e));
    if (entries_.size() > kMaxEntries) fail(ErrorKind::Budget, "net exceeds 10^7 entries");
  }

  void build() {
    init_gen_quats();
    cell_ = std::max(tol_ * 4, 1e-4);
    insert({{}, Quat(1, 0, 0, 0)});
    std::size_t layer_begin = 0, layer_end = 1;
    const int ng = static_cast<int>(gens_.size());
    for (int len = 1; len <= max_len_; ++len) {
      for (std::size_t k = layer_begin; k < layer_end; ++k) {
        for (int g = 1; g <= ng; ++g)
          for (int sign : {1, -1}) {
            auto l = static_cast<std::int8_t>(sign * g);
            const auto& base = entries_[k].word;
            if (!base.empty() && base.back() == -l) continue;
            Quat q = quat_mul(letter_quat(l), entries_[k].q);
            q /= q.norm();
            if (seen(q)) continue;
            PackedWord w = base;
            w.push_back(l);
            insert({std::move(w), q});
          }
      }
      layer_begin = layer_end;
      layer_end = entries_.size();
      if (layer_begin == layer_end) break;
    }
    grid_.clear();
  }

  std::vector<Mat2> gens_;
  std::vector<Quat> gen_q_;
  int n_strands_ = 4;
  int max_len_ = 0;
  double tol_ = 1e-7;
  double cell_ = 1e-4;
  std::vector<Entry> entries_;
  std::unordered_map<Key, std::vector<std::uint32_t>, KeyHash> grid_;
};

}  // namespace skeinkit

#endif  // SKEINKIT_NET_HPP
