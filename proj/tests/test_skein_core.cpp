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

#include <algorithm>

#include "skeinkit/params.hpp"
#include "skeinkit/skein_rep.hpp"
#include "skeinkit/temperley_lieb.hpp"

using namespace skeinkit;

TEST(params, loop_value_closed_forms) {
  auto p4 = BracketParams::root_of_unity(4);
  EXPECT_NEAR(std::abs(loop_value(p4) - Complex(-std::sqrt(2.0), 0)), 0.0, 1e-12);
  auto p5 = BracketParams::root_of_unity(5);
  EXPECT_NEAR(p5.delta_abs(), 1.6180339887498949, 1e-12);
  auto g1 = BracketParams::generic(Complex(1, 0));
  EXPECT_NEAR(std::abs(loop_value(g1) - Complex(-2, 0)), 0.0, 1e-12);
}

TEST(params, delta_matches_t_form_and_density_flags) {
  for (int r = 3; r <= 12; ++r) {
    auto p = BracketParams::root_of_unity(r);
    Complex sqrt_t = std::polar(1.0, kPi / r);
    EXPECT_LT(std::abs(p.delta() - (-sqrt_t - 1.0 / sqrt_t)), 1e-12);
    EXPECT_NEAR(p.delta_abs(), 2 * std::cos(kPi / r), 1e-12);
    EXPECT_LT(std::abs(std::pow(p.A(), -4) - p.t()), 1e-12);
    EXPECT_EQ(p.dense(), r == 5 || r >= 7);
  }
  EXPECT_THROW(BracketParams::root_of_unity(2), Error);
  EXPECT_THROW(BracketParams::generic(Complex(2, 0)), Error);
}

TEST(temperley_lieb, dimensions) {
  auto g = BracketParams::generic_angle(1.1);
  EXPECT_EQ(tl_dimension(4, g), 2);
  EXPECT_EQ(tl_dimension(8, g), 14);
  EXPECT_EQ(tl_dimension(8, BracketParams::root_of_unity(5)), 13);
  EXPECT_EQ(tl_dimension(4, BracketParams::root_of_unity(3)), 1);
  EXPECT_THROW(tl_dimension(3, g), Error);
  for (int n = 0; n <= 12; n += 2)
    EXPECT_EQ(static_cast<std::int64_t>(noncrossing_matchings(n).size()), tl_dimension(n, g)) << n;
}

TEST(temperley_lieb, path_basis_walks_stay_in_range) {
  for (int r : {3, 4, 5, 7}) {
    auto b = make_path_basis(r, 10);
    for (const auto& p : b.paths) {
      EXPECT_EQ(p.front(), 0);
      EXPECT_EQ(p.back(), 0);
      for (std::size_t i = 1; i < p.size(); ++i) {
        EXPECT_EQ(std::abs(p[i] - p[i - 1]), 1);
        EXPECT_GE(p[i], 0);
        EXPECT_LE(p[i], r - 2);
      }
    }
    EXPECT_TRUE(std::is_sorted(b.paths.begin(), b.paths.end()));
  }
}

TEST(temperley_lieb, compose_examples) {
  auto e1 = PlanarMatching::generator(4, 1);
  auto id = PlanarMatching::identity(4);
  auto r = compose_diagrams(id, e1);
  EXPECT_EQ(r.diagram, e1);
  EXPECT_EQ(r.loops, 0);
  r = compose_diagrams(e1, e1);
  EXPECT_EQ(r.diagram, e1);
  EXPECT_EQ(r.loops, 1);

  // zig-zag: (id_1 x cup) then (cap x id_1) straightens to one strand
  PlanarMatching lower(1, 3, {1, 0, 3, 2});  // bottom 0 -> top 0, cup on tops 1,2
  PlanarMatching upper(3, 1, {1, 0, 3, 2});  // cap on bottoms 0,1, bottom 2 -> top 0
  r = compose_diagrams(lower, upper);
  EXPECT_EQ(r.diagram, PlanarMatching::identity(1));
  EXPECT_EQ(r.loops, 0);

  EXPECT_THROW(compose_diagrams(PlanarMatching::identity(2), e1), Error);
  EXPECT_THROW(PlanarMatching(0, 4, {2, 3, 0, 1}), Error);  // crossing
}

TEST(temperley_lieb, closing_one_strand_gives_one_loop) {
  auto cup = PlanarMatching::cups(2);
  auto cap = PlanarMatching::caps(2);
  EXPECT_EQ(compose_diagrams(cup, cap).loops, 1);
  for (int n : {2, 4, 6}) EXPECT_EQ(compose_diagrams(PlanarMatching::cups(n), PlanarMatching::caps(n)).loops, n / 2);
}

namespace {

void expect_braid_relations(const SkeinRep& rep, double tol) {
  const int n = rep.n_strands();
  for (int i = 1; i < n; ++i) {
    CMatrix inv = rep.generator(i, +1) * rep.generator(i, -1);
    EXPECT_LT((inv - CMatrix::Identity(rep.dim(), rep.dim())).norm(), tol);
    if (i + 1 < n) {
      const auto& a = rep.generator(i);
      const auto& b = rep.generator(i + 1);
      EXPECT_LT((a * b * a - b * a * b).norm(), tol) << "i=" << i;
    }
    for (int j = i + 2; j < n; ++j) {
      const auto& a = rep.generator(i);
      const auto& b = rep.generator(j);
      EXPECT_LT((a * b - b * a).norm(), tol);
    }
    const auto& e = rep.tl_generator(i);
    EXPECT_LT((e * e - rep.params().delta() * e).norm(), tol);
  }
}

}  // namespace

TEST(skein_rep, braid_relations_both_bases) {
  for (int r : {5, 7, 8}) {
    auto p = BracketParams::root_of_unity(r);
    for (int n = 2; n <= 8; n += 2) {
      expect_braid_relations(SkeinRep(p, n, BasisKind::Path), 1e-9);
      expect_braid_relations(SkeinRep(p, n, BasisKind::Diagram), 1e-9);
    }
  }
  auto g = BracketParams::generic_angle(0.77);
  for (int n = 2; n <= 8; n += 2) expect_braid_relations(SkeinRep(g, n, BasisKind::Diagram), 1e-9);
}

TEST(skein_rep, path_basis_is_unitary) {
  for (int r = 3; r <= 10; ++r) {
    auto p = BracketParams::root_of_unity(r);
    for (int n = 2; n <= 10; n += 2) {
      SkeinRep rep(p, n, BasisKind::Path);
      if (rep.dim() == 0) continue;
      for (int i = 1; i < n; ++i) {
        const auto& g = rep.generator(i);
        EXPECT_LT((g * g.adjoint() - CMatrix::Identity(rep.dim(), rep.dim())).norm(), 1e-9);
      }
    }
  }
}

TEST(skein_rep, generator_eigenvalues_on_four_points) {
  auto p = BracketParams::root_of_unity(5);
  SkeinRep rep(p, 4, BasisKind::Path);
  ASSERT_EQ(rep.dim(), 2);
  Eigen::ComplexEigenSolver<CMatrix> es(rep.generator(1));
  std::vector<Complex> want = {p.A(), -std::pow(p.A(), -3)};
  for (int k = 0; k < 2; ++k) {
    Complex ev = es.eigenvalues()(k);
    double best = std::min(std::abs(ev - want[0]), std::abs(ev - want[1]));
    EXPECT_LT(best, 1e-12);
  }
  EXPECT_GT(std::abs(want[0] - want[1]), 1e-3);
}

TEST(skein_rep, far_generators_commute_on_four_strands) {
  SkeinRep rep(BracketParams::generic_angle(2.0), 4, BasisKind::Diagram);
  EXPECT_LT((rep.generator(1) * rep.generator(3) - rep.generator(3) * rep.generator(1)).norm(), 1e-12);
  EXPECT_THROW(rep.generator(4), Error);
  EXPECT_THROW(rep.generator(0), Error);
}

TEST(skein_rep, cups_close_to_delta_power) {
  for (auto kind : {BasisKind::Path, BasisKind::Diagram}) {
    auto p = BracketParams::root_of_unity(7);
    for (int n = 2; n <= 8; n += 2) {
      SkeinRep rep(p, n, kind);
      Complex v = rep.close_with_caps(rep.cups_vector());
      EXPECT_LT(std::abs(v - std::pow(p.delta(), n / 2)), 1e-12);
    }
  }
}

TEST(skein_rep, nontriviality) {
  auto r5 = full_nontriviality_check(BracketParams::root_of_unity(5));
  EXPECT_TRUE(r5.ok);
  auto r3 = full_nontriviality_check(BracketParams::root_of_unity(3));
  EXPECT_FALSE(r3.ok);
  EXPECT_FALSE(r3.loop_exceeds_one);
  EXPECT_EQ(r3.space_dim, 1);
  // r = 4: measured, see README. |delta| = sqrt 2 and the crossings act on a
  // 2-dimensional space with distinct eigenvalue ratios.
  auto r4 = full_nontriviality_check(BracketParams::root_of_unity(4));
  EXPECT_EQ(r4.space_dim, 2);
  EXPECT_TRUE(r4.loop_exceeds_one);
  EXPECT_TRUE(r4.crossings_independent);
  EXPECT_TRUE(r4.ok);
  EXPECT_TRUE(full_nontriviality_check(BracketParams::generic_angle(0.5)).ok == (BracketParams::generic_angle(0.5).delta_abs() > 1));
}
