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

#include <gtest/gtest.h>

#include <cstdio>
#include <random>

#include <unsupported/Eigen/KroneckerProduct>

#include "skeinkit/compiler.hpp"

using namespace skeinkit;

namespace {

const BracketParams& r5() {
  static BracketParams p = BracketParams::root_of_unity(5);
  return p;
}

const QubitEncoding& enc5() {
  static QubitEncoding e(r5());
  return e;
}

const SU2Net& net5() {
  static SU2Net n = build_net(enc5(), 10);
  return n;
}

Mat2 haar(std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  Quat q(nd(rng), nd(rng), nd(rng), nd(rng));
  return su2_of_quat(q / q.norm());
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::Usage;
}

}  // namespace

TEST(encoding, needs_dense_point) {
  for (int r : {3, 4, 6})
    EXPECT_EQ(kind_of([&] { QubitEncoding e(BracketParams::root_of_unity(r)); }), ErrorKind::NotDense) << r;
  EXPECT_EQ(kind_of([] { QubitEncoding e(BracketParams::generic_angle(0.3)); }), ErrorKind::NotDense);
  EXPECT_NO_THROW(QubitEncoding(BracketParams::root_of_unity(7)));
}

TEST(encoding, qubit_generators) {
  const auto& e = enc5();
  for (int i = 1; i <= 3; ++i) {
    Mat2 g = e.qubit_generator(i);
    EXPECT_LT((g * g.adjoint() - Mat2::Identity()).norm(), 1e-12);
    EXPECT_LT((g * e.qubit_generator(i, -1) - Mat2::Identity()).norm(), 1e-12);
  }
  // outer crossings act the same way on the qubit
  EXPECT_LT((e.qubit_generator(1) - e.qubit_generator(3)).norm(), 1e-12);
  EXPECT_GT((e.qubit_generator(1) - e.qubit_generator(2)).norm(), 0.1);
  EXPECT_EQ(e.rep8().dim(), 13);
  CMatrix p = e.inclusion();
  EXPECT_LT((p.adjoint() * p - CMatrix::Identity(4, 4)).norm(), 1e-15);
}

TEST(encoding, single_qubit_words_do_not_leak) {
  const auto& e = enc5();
  BraidWord w = parse_braid("B4: s1 s2^-1 s3 s2 s2");
  for (int q = 0; q < 2; ++q) {
    auto [b, leak] = two_qubit_block(e, w.shifted(4 * q, 8));
    EXPECT_LT(leak, 1e-12) << q;
    Mat2 u = e.word_on_qubit(w);
    CMatrix want = q == 0 ? CMatrix(Eigen::kroneckerProduct(CMatrix(u), CMatrix::Identity(2, 2)))
                          : CMatrix(Eigen::kroneckerProduct(CMatrix::Identity(2, 2), CMatrix(u)));
    EXPECT_LT((b - want).norm(), 1e-12) << q;
  }
}

TEST(net, quaternion_roundtrip_and_distance) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    Mat2 u = haar(rng), v = haar(rng);
    EXPECT_LT((su2_of_quat(quat_of_su2(u)) - u).norm(), 1e-12);
    EXPECT_LT((su2_of_quat(quat_mul(quat_of_su2(u), quat_of_su2(v))) - u * v).norm(), 1e-12);
    double d2 = projective_distance(u, v);
    double dn = projective_distance(CMatrix(u), CMatrix(v * std::polar(1.0, 0.7)));
    EXPECT_NEAR(d2, dn, 1e-9);
  }
}

TEST(net, shortest_words_first) {
  const auto& net = net5();
  EXPECT_TRUE(net.entries()[0].word.empty());
  for (std::size_t k = 1; k < net.size(); ++k) EXPECT_LE(net.entries()[k - 1].word.size(), net.entries()[k].word.size());
  std::mt19937_64 rng(8);
  for (int k = 0; k < 10; ++k) {
    const auto& e = net.entries()[std::uniform_int_distribution<std::size_t>(0, net.size() - 1)(rng)];
    EXPECT_LT(quat_distance(net.word_quat(e.word), e.q), 1e-9);
    EXPECT_LT(projective_distance(net.word_matrix(e.word), su2_of_quat(e.q)), 1e-9);
  }
}

TEST(net, covering_radius_at_length_10) {
  EXPECT_LE(net5().covering_radius(300, 11), 0.35);
}

TEST(net, cache_roundtrip) {
  SU2Net small = build_net(enc5(), 5);
  std::string path = ::testing::TempDir() + "skeinkit_net_cache.txt";
  small.save(path);
  SU2Net back = SU2Net::load(path, enc5().qubit_generators());
  ASSERT_EQ(back.size(), small.size());
  for (std::size_t k = 0; k < small.size(); ++k) {
    EXPECT_EQ(back.entries()[k].word, small.entries()[k].word);
    EXPECT_LT(quat_distance(back.entries()[k].q, small.entries()[k].q), 1e-12);
  }
  std::remove(path.c_str());
}

TEST(synthesis, group_commutator_identity) {
  std::mt19937_64 rng(12);
  std::normal_distribution<double> nd;
  for (int t = 0; t < 50; ++t) {
    Quat d(1, 0.2 * nd(rng), 0.2 * nd(rng), 0.2 * nd(rng));
    d /= d.norm();
    auto [v, w] = detail::group_commutator(d);
    Quat c = quat_mul(quat_mul(v, w), quat_mul(quat_conj(v), quat_conj(w)));
    EXPECT_LT(quat_distance(c, d), 1e-7);
  }
}

TEST(synthesis, random_targets_reach_eps) {
  std::mt19937_64 rng(2026);
  for (int t = 0; t < 20; ++t) {
    Mat2 u = haar(rng);
    auto r = synthesize(u, 0.05, enc5(), net5());
    EXPECT_LE(r.achieved_distance, 0.05);
    EXPECT_NEAR(r.achieved_distance, qubit_distance(enc5(), r.word, u), 1e-12);
  }
  for (int t = 0; t < 5; ++t) {
    auto r = synthesize(haar(rng), 0.005, enc5(), net5());
    EXPECT_LE(r.achieved_distance, 0.005);
  }
}

TEST(synthesis, identity_is_the_empty_word) {
  auto r = synthesize(Mat2::Identity(), 0.05, enc5(), net5());
  EXPECT_TRUE(r.word.empty());
  EXPECT_EQ(r.method, SynthesisMethod::NetLookup);
}

TEST(synthesis, unreachable_without_recursion) {
  std::mt19937_64 rng(1);
  Mat2 u = haar(rng);
  double d;
  net5().nearest(quat_of_unitary(u), &d);
  EXPECT_EQ(kind_of([&] { synthesize(u, d / 2, enc5(), net5(), false); }), ErrorKind::TargetUnreachable);
}

TEST(compile, empty_h_and_x) {
  QuantumCircuit empty(1);
  auto ce = compile_circuit(empty, 0.01, enc5(), net5());
  EXPECT_EQ(ce.plat.g(), 2);
  EXPECT_NEAR(plat_probability(ce.plat, r5()), 1.0, 1e-12);

  QuantumCircuit h(1);
  h.h(0);
  auto ch = compile_circuit(h, 0.02, enc5(), net5());
  auto rep = verify_reduction(h, ch.plat, r5(), 0.05);
  EXPECT_TRUE(rep.pass) << rep.p_plat;
  EXPECT_NEAR(rep.p_plat, 0.5, ch.reported_eps + 1e-12);

  QuantumCircuit x(1);
  x.x(0);
  auto cx = compile_circuit(x, 0.02, enc5(), net5());
  EXPECT_NEAR(plat_probability(cx.plat, r5()), 0.0, 0.05);
}

TEST(compile, random_one_and_two_qubit_products) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 6; ++t) {
    int nq = 1 + t % 2;
    QuantumCircuit c(nq);
    for (int g = 0; g < 4; ++g) c.u1(g % nq, CMatrix(haar(rng)));
    auto res = compile_circuit(c, 0.02, enc5(), net5());
    auto rep = verify_reduction(c, res.plat, r5(), res.reported_eps + 1e-12);
    EXPECT_TRUE(rep.pass) << rep.p_circuit << " " << rep.p_plat << " " << res.reported_eps;
    EXPECT_LE(std::abs(rep.p_circuit - rep.p_plat), 0.05);
    EXPECT_LE(res.reported_eps, 2 * 0.02 + 1e-12);
  }
}

TEST(compile, rejects_unsupported) {
  QuantumCircuit c3(3);
  EXPECT_EQ(kind_of([&] { compile_circuit(c3, 0.1, enc5(), net5()); }), ErrorKind::Usage);
  QuantumCircuit lin(1);
  lin.u1(0, CMatrix::Ones(2, 2), true);
  EXPECT_EQ(kind_of([&] { compile_circuit(lin, 0.1, enc5(), net5()); }), ErrorKind::Usage);
}

TEST(compile, two_qubit_search_is_verified) {
  // a product of one-qubit gates is reachable without leakage
  TwoQubitSearchOptions opt;
  opt.iterations = 300;
  CMatrix id = CMatrix::Identity(4, 4);
  auto r = search_two_qubit(id, enc5(), opt);
  EXPECT_LT(r.achieved_distance + r.leakage, 1e-9);
  CMatrix cnot = CMatrix::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1;
  auto rc = search_two_qubit(cnot, enc5(), opt);
  auto [b, leak] = two_qubit_block(enc5(), rc.word);
  EXPECT_NEAR(rc.achieved_distance, projective_distance(b, cnot), 1e-12);
  EXPECT_NEAR(rc.leakage, leak, 1e-12);
}

TEST(padding, lands_in_window) {
  PlatPresentation l0 = make_l0(enc5(), net5());
  double q = std::abs(plat_bracket(l0, r5())) / r5().delta_abs();
  EXPECT_NEAR(q, 0.3, 0.02);
  PlatPresentation p(parse_braid("B4: s2 s2 s2"));
  double b = std::abs(plat_bracket(p, r5()));
  struct W {
    double lo, hi;
  };
  for (W w : {W{b, 2 * b}, W{1e-3, 2e-3}, W{10, 13}, W{0.5, 0.6}}) {
    auto gl = pad_to_window(p, w.lo, w.hi, r5(), l0);
    double got = std::abs(gl.bracket());
    EXPECT_GE(got, w.lo);
    EXPECT_LE(got, w.hi);
    // the assembled plat agrees with the multiplicative value
    if (gl.unknots + gl.l0_copies <= 4) {
      PlatPresentation full = gl.to_plat();
      EXPECT_TRUE(close_rel(bracket_morse(full, r5()), gl.bracket(), 1e-9));
    }
  }
  auto same = pad_to_window(p, b * 0.99, b * 1.01, r5(), l0);
  EXPECT_EQ(same.unknots + same.l0_copies, 0);
}

TEST(padding, errors) {
  PlatPresentation l0 = make_l0(enc5(), net5());
  PlatPresentation p(parse_braid("B4: s2 s2 s2"));
  EXPECT_EQ(kind_of([&] { pad_to_window(p, 1.0, 1.0 + 1e-9, r5(), l0); }), ErrorKind::InfeasibleWindow);
  // Hopf link bracket vanishes at r = 4
  auto r4 = BracketParams::root_of_unity(4);
  PlatPresentation hopf(parse_braid("B4: s2 s2"));
  EXPECT_EQ(kind_of([&] { pad_to_window(hopf, 0.1, 1.0, r4, PlatPresentation::identity(1)); }), ErrorKind::ZeroBracket);
  EXPECT_EQ(kind_of([&] { pad_to_window(p, 2.0, 1.0, r5(), l0); }), ErrorKind::Usage);
}

TEST(knotify, merges_components) {
  static PureBraidNet pure(enc5(), 6);
  struct Case {
    std::string braid;
    double eps;
  };
  for (const Case& c : {Case{"B4:", 0.01}, Case{"B6:", 0.01}, Case{"B6: s2 s2 s4^-1 s4^-1 s1", 0.02},
                        Case{"B4: s2 s2 s2", 0.01}}) {
    PlatPresentation p(parse_braid(c.braid));
    auto res = knotify(p, c.eps, enc5(), pure);
    EXPECT_EQ(plat_components(res.plat), 1) << c.braid;
    EXPECT_LE(res.deviation, c.eps * std::pow(r5().delta_abs(), p.g())) << c.braid;
    EXPECT_EQ(res.merges, plat_components(p) - 1) << c.braid;
  }
}
