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

#ifndef SKEINKIT_COMMON_HPP
#define SKEINKIT_COMMON_HPP

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace skeinkit {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr double kPi = std::numbers::pi;

/// Failure categories. Each maps onto one CLI exit code (see exit_code()).
enum class ErrorKind {
  Usage,              // bad arguments or violated preconditions
  Parse,              // malformed input text / files
  Budget,             // a size or work budget would be exceeded
  Verification,       // a computed result failed its own check
  NotDense,           // operation requires a dense evaluation point
  TargetUnreachable,  // synthesis could not reach the requested accuracy
  ZeroBracket,
  InfeasibleWindow,
  PromiseViolated,
  BoundViolated,
  SingularGram,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Usage: return "Usage";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Budget: return "Budget";
    case ErrorKind::Verification: return "Verification";
    case ErrorKind::NotDense: return "NotDense";
    case ErrorKind::TargetUnreachable: return "TargetUnreachable";
    case ErrorKind::ZeroBracket: return "ZeroBracket";
    case ErrorKind::InfeasibleWindow: return "InfeasibleWindow";
    case ErrorKind::PromiseViolated: return "PromiseViolated";
    case ErrorKind::BoundViolated: return "BoundViolated";
    case ErrorKind::SingularGram: return "SingularGram";
  }
  return "Unknown";
}

/// 1 usage, 2 parse, 3 budget, 4 verification failure.
inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Usage:
    case ErrorKind::NotDense: return 1;
    case ErrorKind::Parse: return 2;
    case ErrorKind::Budget: return 3;
    default: return 4;
  }
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::Usage, what);
}

/// |a - b| <= tol * max(1, |a|, |b|).
inline bool close_rel(Complex a, Complex b, double tol) {
  double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tol * scale;
}

}  // namespace skeinkit

#endif  // SKEINKIT_COMMON_HPP
