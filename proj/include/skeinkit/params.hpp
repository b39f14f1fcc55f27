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

#ifndef SKEINKIT_PARAMS_HPP
#define SKEINKIT_PARAMS_HPP

#include <cmath>
#include <sstream>
#include <string>

#include "skeinkit/common.hpp"

namespace skeinkit {

/// Evaluation point of the Kauffman bracket.
///
/// The quarter root is fixed as A = t^{-1/4} (principal branch of arg t), so
/// that a positive kink multiplies the bracket by -A^3 and the loop value is
/// delta = -A^2 - A^{-2} = -t^{1/2} - t^{-1/2}.
class BracketParams {
 public:
  static BracketParams root_of_unity(int r) {
    if (r < 3) fail(ErrorKind::Usage, "root of unity order must be >= 3, got " + std::to_string(r));
    BracketParams p;
    p.r_ = r;
    p.t_ = std::polar(1.0, 2.0 * kPi / r);
    p.A_ = std::polar(1.0, -kPi / (2.0 * r));
    p.finish();
    return p;
  }

  /// Generic unit-modulus t. A root of unity passed here is still treated as
  /// generic (diagram basis, no truncation).
  static BracketParams generic(Complex t) {
    if (std::abs(std::abs(t) - 1.0) > 1e-12) fail(ErrorKind::Usage, "generic t must satisfy |t| = 1");
    BracketParams p;
    p.r_ = 0;
    p.t_ = t / std::abs(t);
    p.A_ = std::polar(1.0, -std::arg(p.t_) / 4.0);
    p.finish();
    return p;
  }

  static BracketParams generic_angle(double theta) { return generic(std::polar(1.0, theta)); }

  bool is_root_of_unity() const { return r_ != 0; }
  /// Order r in root-of-unity mode, 0 in generic mode.
  int r() const { return r_; }
  Complex t() const { return t_; }
  Complex A() const { return A_; }
  Complex A_inv() const { return 1.0 / A_; }
  Complex delta() const { return delta_; }
  double delta_abs() const { return std::abs(delta_); }

  /// Braid images are dense at r = 5 and r >= 7; r in {3, 4, 6} give finite images.
  bool dense() const { return r_ == 5 || r_ >= 7; }

  /// Multiplier of the bracket for one positive kink.
  Complex kink_factor() const { return -A_ * A_ * A_; }

  std::string describe() const {
    std::ostringstream os;
    os.precision(17);
    if (r_ != 0)
      os << "root_of_unity(r=" << r_ << ")";
    else
      os << "generic(t=" << t_.real() << (t_.imag() < 0 ? "" : "+") << t_.imag() << "i)";
    return os.str();
  }

 private:
  BracketParams() = default;
  void finish() {
    Complex a2 = A_ * A_;
    delta_ = -a2 - 1.0 / a2;
  }

  int r_ = 0;
  Complex t_{1.0, 0.0};
  Complex A_{1.0, 0.0};
  Complex delta_{-2.0, 0.0};
};

/// Closed-loop value.
inline Complex loop_value(const BracketParams& params) { return params.delta(); }

/// Quantum integer [m] = sin(m pi / r) / sin(pi / r).
inline double quantum_integer(int m, int r) { return std::sin(m * kPi / r) / std::sin(kPi / r); }

}  // namespace skeinkit

#endif  // SKEINKIT_PARAMS_HPP
