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

#ifndef SKEINKIT_BRAID_HPP
#define SKEINKIT_BRAID_HPP

#include <cctype>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "skeinkit/common.hpp"

namespace skeinkit {

struct BraidLetter {
  int index = 1;  // sigma_index, 1-based
  int sign = +1;
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
  friend auto operator<=>(const BraidLetter&, const BraidLetter&) = default;
};

class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int n_strands, std::vector<BraidLetter> letters = {})
      : n_(n_strands), letters_(std::move(letters)) {
    require(n_ >= 1, "braid needs at least one strand");
    for (const auto& l : letters_) check(l);
  }

  int n_strands() const { return n_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BraidWord& push(int index, int sign = +1) {
    BraidLetter l{index, sign > 0 ? +1 : -1};
    check(l);
    letters_.push_back(l);
    return *this;
  }

  BraidWord& append(const BraidWord& other) {
    require(other.n_ == n_, "append: strand counts differ");
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
    return *this;
  }

  /// Same letters with every index moved up by `offset` on a wider braid.
  BraidWord shifted(int offset, int new_n) const {
    BraidWord out(new_n);
    for (const auto& l : letters_) out.push(l.index + offset, l.sign);
    return out;
  }

  /// Reversed order, flipped signs.
  BraidWord inverse() const {
    BraidWord out(n_);
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back({it->index, -it->sign});
    return out;
  }

  friend BraidWord operator*(BraidWord a, const BraidWord& b) { return a.append(b); }
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  void check(const BraidLetter& l) const {
    if (l.index < 1 || l.index >= n_)
      fail(ErrorKind::Usage, "letter s" + std::to_string(l.index) + " out of range for " + std::to_string(n_) + " strands");
    if (l.sign != 1 && l.sign != -1) fail(ErrorKind::Usage, "letter sign must be +1 or -1");
  }

  int n_ = 1;
  std::vector<BraidLetter> letters_;
};

/// Braid on 2g strands closed by g adjacent cups below and g adjacent caps above.
class PlatPresentation {
 public:
  PlatPresentation() : braid_(2) {}
  explicit PlatPresentation(BraidWord braid) : braid_(std::move(braid)) {
    require(braid_.n_strands() >= 2 && braid_.n_strands() % 2 == 0, "plat needs an even, positive strand count");
  }
  static PlatPresentation identity(int g) { return PlatPresentation(BraidWord(2 * g)); }

  const BraidWord& braid() const { return braid_; }
  int g() const { return braid_.n_strands() / 2; }
  int n_strands() const { return braid_.n_strands(); }

 private:
  BraidWord braid_;
};

inline int writhe(const BraidWord& w) {
  int s = 0;
  for (const auto& l : w.letters()) s += l.sign;
  return s;
}

/// perm[p] = final position (1-based, perm[0] unused) of the strand that
/// starts at position p, letters applied left to right. With this convention
/// perm(w1 w2) = perm(w2) o perm(w1).
inline std::vector<int> underlying_permutation(const BraidWord& w) {
  const int n = w.n_strands();
  std::vector<int> at(n + 1);  // at[pos] = starting position of the strand now at pos
  std::iota(at.begin(), at.end(), 0);
  for (const auto& l : w.letters()) std::swap(at[l.index], at[l.index + 1]);
  std::vector<int> perm(n + 1, 0);
  for (int pos = 1; pos <= n; ++pos) perm[at[pos]] = pos;
  return perm;
}

inline bool is_pure(const BraidWord& w) {
  auto p = underlying_permutation(w);
  for (int i = 1; i < static_cast<int>(p.size()); ++i)
    if (p[i] != i) return false;
  return true;
}

namespace detail {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  int count() {
    int c = 0;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i) c += find(i) == i;
    return c;
  }
};

}  // namespace detail

inline int plat_components(const PlatPresentation& p) {
  const int n = p.n_strands();
  auto perm = underlying_permutation(p.braid());
  // nodes 0..n-1 bottom ends, n..2n-1 top ends
  detail::DisjointSets ds(2 * n);
  for (int j = 0; j < n; j += 2) {
    ds.unite(j, j + 1);
    ds.unite(n + j, n + j + 1);
  }
  for (int s = 1; s <= n; ++s) ds.unite(s - 1, n + perm[s] - 1);
  return ds.count();
}

inline int trace_components(const BraidWord& w) {
  auto perm = underlying_permutation(w);
  detail::DisjointSets ds(w.n_strands());
  for (int s = 1; s <= w.n_strands(); ++s) ds.unite(s - 1, perm[s] - 1);
  return ds.count();
}

/// Writhe of the plat closure with each component oriented. A crossing whose
/// two strands run in opposite vertical directions has the opposite sign of
/// its braid letter.
inline int plat_writhe(const PlatPresentation& p) {
  const auto& letters = p.braid().letters();
  const int n = p.n_strands();
  const int c = static_cast<int>(letters.size());
  // dir[k][s]: direction (+1 up, -1 down) of the segment at height k, position s
  std::vector<std::vector<int>> dir(c + 1, std::vector<int>(n, 0));
  for (int start = 0; start < n; ++start) {
    if (dir[0][start] != 0) continue;
    int pos = start, level = 0, d = +1;
    while (dir[level][pos] == 0) {
      dir[level][pos] = d;
      if (d > 0) {
        if (level == c) {
          pos ^= 1;
          d = -1;
          continue;
        }
        const auto& l = letters[level];
        if (pos == l.index - 1) pos = l.index;
        else if (pos == l.index) pos = l.index - 1;
        ++level;
      } else {
        if (level == 0) {
          pos ^= 1;
          d = +1;
          continue;
        }
        const auto& l = letters[level - 1];
        if (pos == l.index - 1) pos = l.index;
        else if (pos == l.index) pos = l.index - 1;
        --level;
      }
    }
  }
  int w = 0;
  for (int k = 0; k < c; ++k) {
    const auto& l = letters[k];
    // strand entering at bottom-left leaves at top-right
    int d1 = dir[k][l.index - 1], d2 = dir[k][l.index];
    w += (d1 == d2) ? l.sign : -l.sign;
  }
  return w;
}

inline std::string serialize_braid(const BraidWord& w) {
  std::ostringstream os;
  os << "B" << w.n_strands() << ":";
  for (const auto& l : w.letters()) {
    os << " s" << l.index;
    if (l.sign < 0) os << "^-1";
  }
  return os.str();
}

/// Grammar: "B<n>:" followed by whitespace-separated tokens "s<i>" or "s<i>^-1".
/// Errors carry the 1-based character column of the offending token.
inline BraidWord parse_braid(const std::string& text) {
  std::size_t pos = 0;
  auto err = [&](std::size_t at, const std::string& what) -> void {
    fail(ErrorKind::Parse, "braid parse error at column " + std::to_string(at + 1) + ": " + what);
  };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&](std::size_t& p, int& out) -> bool {
    std::size_t b = p;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
    if (p == b || p - b > 6) return false;
    out = std::stoi(text.substr(b, p - b));
    return true;
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != 'B') err(pos, "expected 'B<n>:' header");
  ++pos;
  int n = 0;
  std::size_t num_at = pos;
  if (!read_int(pos, n) || n < 1) err(num_at, "bad strand count");
  if (pos >= text.size() || text[pos] != ':') err(pos, "expected ':' after strand count");
  ++pos;
  BraidWord w(n);
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    std::size_t tok = pos;
    if (text[pos] != 's') err(tok, "expected token s<i>");
    ++pos;
    int idx = 0;
    if (!read_int(pos, idx)) err(tok, "malformed token");
    int sign = +1;
    if (pos < text.size() && text[pos] == '^') {
      if (text.compare(pos, 3, "^-1") != 0) err(tok, "only ^-1 exponents are allowed");
      pos += 3;
      sign = -1;
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) err(tok, "malformed token");
    if (idx < 1 || idx >= n) err(tok, "index out of range: s" + std::to_string(idx) + " on " + std::to_string(n) + " strands");
    w.push(idx, sign);
  }
  return w;
}

}  // namespace skeinkit

#endif  // SKEINKIT_BRAID_HPP
