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

#ifndef SKEINKIT_CIRCUIT_HPP
#define SKEINKIT_CIRCUIT_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "skeinkit/common.hpp"

namespace skeinkit {

enum class GateType { H, X, CNOT, Toffoli, U1, U2 };

inline const char* to_string(GateType g) {
  switch (g) {
    case GateType::H: return "H";
    case GateType::X: return "X";
    case GateType::CNOT: return "CNOT";
    case GateType::Toffoli: return "Toffoli";
    case GateType::U1: return "U1";
    case GateType::U2: return "U2";
  }
  return "?";
}

inline int gate_arity(GateType g) {
  switch (g) {
    case GateType::H:
    case GateType::X:
    case GateType::U1: return 1;
    case GateType::CNOT:
    case GateType::U2: return 2;
    case GateType::Toffoli: return 3;
  }
  return 0;
}

/// For CNOT the first qubit is the control; for Toffoli the first two.
/// U1 carries a 2x2 matrix, U2 a 4x4 matrix indexed by 2*b(q0) + b(q1).
struct Gate {
  GateType type = GateType::H;
  std::vector<int> qubits;
  CMatrix matrix;
  bool linear = false;  // non-unitary matrices allowed (postselection demos)
};

class QuantumCircuit {
 public:
  static constexpr int kMaxQubits = 12;

  QuantumCircuit() = default;
  explicit QuantumCircuit(int n_qubits) : n_(n_qubits) {
    if (n_qubits < 0 || n_qubits > kMaxQubits) fail(ErrorKind::Budget, "circuit limited to 12 qubits");
  }

  int n_qubits() const { return n_; }
  const std::vector<Gate>& gates() const { return gates_; }

  QuantumCircuit& add(Gate g) {
    if (static_cast<int>(g.qubits.size()) != gate_arity(g.type))
      fail(ErrorKind::Usage, std::string("gate ") + to_string(g.type) + " has the wrong number of qubits");
    for (std::size_t a = 0; a < g.qubits.size(); ++a) {
      if (g.qubits[a] < 0 || g.qubits[a] >= n_) fail(ErrorKind::Usage, "qubit index out of range");
      for (std::size_t b = 0; b < a; ++b)
        if (g.qubits[a] == g.qubits[b]) fail(ErrorKind::Usage, "repeated qubit in one gate");
    }
    if (g.type == GateType::U1 || g.type == GateType::U2) {
      int d = g.type == GateType::U1 ? 2 : 4;
      if (g.matrix.rows() != d || g.matrix.cols() != d) fail(ErrorKind::Usage, "gate matrix has the wrong shape");
      if (!g.linear && (g.matrix * g.matrix.adjoint() - CMatrix::Identity(d, d)).norm() > 1e-9)
        fail(ErrorKind::Usage, "gate matrix is not unitary (mark it linear to allow this)");
    }
    gates_.push_back(std::move(g));
    return *this;
  }

  QuantumCircuit& h(int q) { return add({GateType::H, {q}, {}, false}); }
  QuantumCircuit& x(int q) { return add({GateType::X, {q}, {}, false}); }
  QuantumCircuit& cnot(int c, int t) { return add({GateType::CNOT, {c, t}, {}, false}); }
  QuantumCircuit& toffoli(int a, int b, int t) { return add({GateType::Toffoli, {a, b, t}, {}, false}); }
  QuantumCircuit& u1(int q, CMatrix m, bool linear = false) { return add({GateType::U1, {q}, std::move(m), linear}); }
  QuantumCircuit& u2(int a, int b, CMatrix m, bool linear = false) {
    return add({GateType::U2, {a, b}, std::move(m), linear});
  }

  int hadamard_count() const {
    int h = 0;
    for (const auto& g : gates_) h += g.type == GateType::H;
    return h;
  }

 private:
  int n_ = 1;
  std::vector<Gate> gates_;
};

/// 2x2 or 4x4 matrix of a gate in its local ordering.
inline CMatrix gate_matrix(const Gate& g) {
  const double s = 1.0 / std::sqrt(2.0);
  switch (g.type) {
    case GateType::H: {
      CMatrix m(2, 2);
      m << s, s, s, -s;
      return m;
    }
    case GateType::X: {
      CMatrix m(2, 2);
      m << 0, 1, 1, 0;
      return m;
    }
    case GateType::CNOT: {
      CMatrix m = CMatrix::Zero(4, 4);
      m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
      return m;
    }
    case GateType::Toffoli: {
      CMatrix m = CMatrix::Identity(8, 8);
      m(6, 6) = m(7, 7) = 0;
      m(6, 7) = m(7, 6) = 1;
      return m;
    }
    default: return g.matrix;
  }
}

// Qubit 0 is the most significant bit of a basis index.
inline int qubit_bit(int n, int q) { return n - 1 - q; }

inline void apply_gate(const Gate& g, int n, CVector& state) {
  CMatrix m = gate_matrix(g);
  const int k = static_cast<int>(g.qubits.size());
  const int local = 1 << k;
  std::vector<int> bits(k);
  std::uint32_t mask = 0;
  for (int a = 0; a < k; ++a) {
    bits[a] = qubit_bit(n, g.qubits[a]);
    mask |= 1u << bits[a];
  }
  const std::uint32_t dim = 1u << n;
  std::vector<std::uint32_t> idx(local);
  CVector in(local);
  for (std::uint32_t base = 0; base < dim; ++base) {
    if (base & mask) continue;
    for (int l = 0; l < local; ++l) {
      std::uint32_t i = base;
      for (int a = 0; a < k; ++a)
        if ((l >> (k - 1 - a)) & 1) i |= 1u << bits[a];
      idx[l] = i;
      in(l) = state(i);
    }
    CVector out = m * in;
    for (int l = 0; l < local; ++l) state(idx[l]) = out(l);
  }
}

inline CVector simulate_state(const QuantumCircuit& c) {
  CVector state = CVector::Zero(std::size_t{1} << c.n_qubits());
  state(0) = 1.0;
  for (const auto& g : c.gates()) apply_gate(g, c.n_qubits(), state);
  return state;
}

struct AcceptResult {
  Complex amplitude;
  double probability = 0.0;
};

/// <0^n| C |0^n> and its squared modulus.
inline AcceptResult simulate_accept(const QuantumCircuit& c) {
  CVector s = simulate_state(c);
  return {s(0), std::norm(s(0))};
}

using Rational = boost::multiprecision::cpp_rational;

struct PathSumResult {
  std::int64_t n_plus = 0;
  std::int64_t n_minus = 0;
  int h = 0;
  Rational exact_probability() const {
    return Rational(n_plus - n_minus) / Rational(boost::multiprecision::cpp_int(1) << h);
  }
  double probability() const { return exact_probability().convert_to<double>(); }
};

/// Exact acceptance probability as a signed count of density-matrix paths.
/// Classical gates move the pair (x, x') deterministically; each Hadamard
/// branches into four pairs with weight +-1/2, so every surviving path
/// contributes +-2^{-h}. Counts per pair are kept separately for each sign,
/// so nothing cancels before the final tally.
inline PathSumResult pathsum_accept(const QuantumCircuit& c) {
  const int n = c.n_qubits();
  for (const auto& g : c.gates())
    if (g.type == GateType::U1 || g.type == GateType::U2) fail(ErrorKind::Usage, "path sum supports H, X, CNOT and Toffoli only");
  const int h = c.hadamard_count();
  if (h > 20) fail(ErrorKind::Budget, "path sum limited to 20 Hadamards");

  using Counts = std::pair<std::int64_t, std::int64_t>;
  std::unordered_map<std::uint64_t, Counts> cur{{0, {1, 0}}}, next;
  auto key = [](std::uint32_t x, std::uint32_t xp) { return (std::uint64_t(x) << 32) | xp; };

  for (const auto& g : c.gates()) {
    next.clear();
    if (g.type == GateType::H) {
      const std::uint32_t bit = 1u << qubit_bit(n, g.qubits[0]);
      for (const auto& [k, cnt] : cur) {
        std::uint32_t x = k >> 32, xp = k & 0xffffffffu;
        for (int y = 0; y < 2; ++y)
          for (int yp = 0; yp < 2; ++yp) {
            // H[y][b] = -1/sqrt2 only when y = b = 1
            bool neg = ((y & ((x & bit) != 0)) ^ (yp & ((xp & bit) != 0))) != 0;
            std::uint32_t nx = (x & ~bit) | (y ? bit : 0u), nxp = (xp & ~bit) | (yp ? bit : 0u);
            auto& slot = next[key(nx, nxp)];
            slot.first += neg ? cnt.second : cnt.first;
            slot.second += neg ? cnt.first : cnt.second;
          }
      }
    } else {
      auto flip = [&](std::uint32_t x) {
        const auto& q = g.qubits;
        std::uint32_t t = 1u << qubit_bit(n, q.back());
        bool fire = true;
        for (std::size_t a = 0; a + 1 < q.size(); ++a) fire = fire && (x >> qubit_bit(n, q[a]) & 1u);
        return fire ? x ^ t : x;
      };
      for (const auto& [k, cnt] : cur) {
        auto& slot = next[key(flip(k >> 32), flip(k & 0xffffffffu))];
        slot.first += cnt.first;
        slot.second += cnt.second;
      }
    }
    std::swap(cur, next);
  }
  PathSumResult out;
  out.h = h;
  auto it = cur.find(0);
  if (it != cur.end()) {
    out.n_plus = it->second.first;
    out.n_minus = it->second.second;
  }
  return out;
}

/// Feeds `in_state` to the left qubit of a two-qubit matrix and projects the
/// left output onto `out_state`: sum_{a,b} conj(out_a) in_b g[a-block, b-block].
inline CMatrix postselect_contract(const CMatrix& g, const CVector& in_state, const CVector& out_state) {
  require(g.rows() == 4 && g.cols() == 4, "postselect_contract needs a 4x4 matrix");
  require(in_state.size() == 2 && out_state.size() == 2, "postselect_contract needs 2-vectors");
  CMatrix r = CMatrix::Zero(2, 2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) r += std::conj(out_state(a)) * in_state(b) * g.block(2 * a, 2 * b, 2, 2);
  return r;
}

/// The integer gate with the irrational-angle postselected reduction.
inline CMatrix integer_gate() {
  CMatrix g(4, 4);
  g << 4, -3, 1, 0,
       3, 4, 0, 1,
       1, 0, 0, 0,
       0, 1, 0, 0;
  return g;
}

}  // namespace skeinkit

#endif  // SKEINKIT_CIRCUIT_HPP
