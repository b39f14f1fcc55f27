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

#ifndef SKEINKIT_GADGETS_HPP
#define SKEINKIT_GADGETS_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>

#include "skeinkit/common.hpp"

namespace skeinkit {

struct GadgetParams {
  double c = 8.0;   // separation constant of the promise
  double C = 2.0;   // threshold factor
  int p_bits = 1;

  void validate() const {
    require(c > 1.0 && C > 1.0, "gadget constants c and C must exceed 1");
    require(p_bits >= 1, "p_bits must be >= 1");
  }
};

/// Probability of |-> after postselection: (2a-1)^2 / (1 + (2a-1)^2).
inline double postselected_success(double a) {
  if (!(a >= 0.0 && a <= 1.0)) fail(ErrorKind::Usage, "postselected_success needs a in [0,1]");
  double s = (2 * a - 1) * (2 * a - 1);
  return s / (1 + s);
}

enum class Threshold { Above, Below };
enum class Side { A, B };
enum class Comparison { AoverB, BoverA };

inline const char* to_string(Comparison c) { return c == Comparison::AoverB ? "AoverB" : "BoverA"; }

/// query(side, k) compares the hidden probability on `side` with 2^{-k}.
using ThresholdOracle = std::function<Threshold(Side, int)>;

struct PromiseResult {
  Comparison answer;
  int queries = 0;
};

/// Asks about both sides at every scale 2^{-k}, 0 <= k <= n, and checks
/// which of the two exclusive answer patterns occurred.
inline PromiseResult promise_compare(const ThresholdOracle& oracle, int n) {
  require(n >= 0, "promise_compare needs n >= 0");
  bool a_pattern = true, b_pattern = true, a_both = false, b_both = false;
  int queries = 0;
  for (int k = 0; k <= n; ++k) {
    Threshold qa = oracle(Side::A, k);
    Threshold qb = oracle(Side::B, k);
    queries += 2;
    bool a_up = qa == Threshold::Above, b_down = qb == Threshold::Below;
    bool b_up = qb == Threshold::Above, a_down = qa == Threshold::Below;
    a_pattern = a_pattern && (a_up || b_down);
    b_pattern = b_pattern && (b_up || a_down);
    a_both = a_both || (a_up && b_down);
    b_both = b_both || (b_up && a_down);
  }
  bool is_a = a_pattern && a_both, is_b = b_pattern && b_both;
  if (is_a == is_b) fail(ErrorKind::PromiseViolated, is_a ? "both comparison patterns occurred" : "neither comparison pattern occurred");
  return {is_a ? Comparison::AoverB : Comparison::BoverA, queries};
}

/// Threshold oracle over known probabilities with a factor-`gap` promise gap:
/// Above when p > 2^{-k}, Below when p < 2^{-k}/gap, a seeded coin otherwise.
class SimulatedThresholdOracle {
 public:
  SimulatedThresholdOracle(double a, double b, double gap = 2.0, std::uint64_t seed = 1)
      : a_(a), b_(b), gap_(gap), rng_(seed) {}

  Threshold operator()(Side side, int k) {
    ++calls_;
    double p = side == Side::A ? a_ : b_;
    double t = std::ldexp(1.0, -k);
    if (p > t) return Threshold::Above;
    if (p < t / gap_) return Threshold::Below;
    return std::bernoulli_distribution(0.5)(rng_) ? Threshold::Above : Threshold::Below;
  }

  int calls() const { return calls_; }

 private:
  double a_, b_, gap_;
  std::mt19937_64 rng_;
  int calls_ = 0;
};

/// decide(n) reports whether f(y_n(x)) is above `hi` or below `lo`; the
/// answer is arbitrary in between.
using WindowDecider = std::function<Threshold(int)>;

struct ApxEstimate {
  double estimate = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  int n_star = 0;        // smallest n reported Below
  double scale = 1.0;    // k^{n_star}
  double guaranteed_factor = 0.0;
  int queries = 0;
};

/// f(y_n) shrinks roughly like k^{-n}: f < k^n f(y_n) < c f. The first n in
/// [-m, m] reported Below brackets f between lo k^{n-1}/c and hi k^n; the
/// estimate is the geometric middle of that interval.
inline ApxEstimate apv_to_apx(const WindowDecider& decide, double lo, double hi, double k, double c, int m) {
  require(0 < lo && lo < hi, "apv_to_apx needs 0 < lo < hi");
  require(k > 1 && c > 1 && m >= 0, "apv_to_apx needs k > 1, c > 1, m >= 0");
  ApxEstimate out;
  for (int n = -m; n <= m; ++n) {
    ++out.queries;
    if (decide(n) != Threshold::Below) continue;
    out.n_star = n;
    out.scale = std::pow(k, n);
    out.upper = hi * out.scale;
    out.lower = n == -m ? std::pow(k, -m) : lo * std::pow(k, n - 1) / c;
    out.lower = std::min(out.lower, out.upper);
    out.estimate = std::sqrt(out.lower * out.upper);
    out.guaranteed_factor = std::sqrt(out.upper / out.lower);
    return out;
  }
  fail(ErrorKind::BoundViolated, "no rescaling in [-m, m] was reported below the window");
}

}  // namespace skeinkit

#endif  // SKEINKIT_GADGETS_HPP
