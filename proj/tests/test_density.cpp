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

#include "skeinkit/density.hpp"
#include "skeinkit/net.hpp"

namespace skeinkit {
namespace {

TEST(Density, KauffmanR5IsDense) {
  auto c = density_certificate(kauffman_generators(5));
  EXPECT_EQ(c.target_dim, 3);
  EXPECT_EQ(c.lie_dim, 3);
  EXPECT_TRUE(c.dense);
  EXPECT_GT(c.near_identity, 0u);
}

TEST(Density, KauffmanR7IsDense) {
  auto c = density_certificate(kauffman_generators(7));
  EXPECT_TRUE(c.dense);
}

TEST(Density, KauffmanR6IsFinite) {
  auto c = density_certificate(kauffman_generators(6));
  EXPECT_FALSE(c.dense);
  EXPECT_EQ(c.near_identity, 0u);
  EXPECT_EQ(c.words, 20u);  // the whole projective image
}

TEST(Density, TorusIsNotDense) {
  // diagonal unitaries of infinite order: closure is a circle
  CMatrix g = CMatrix::Zero(2, 2);
  g(0, 0) = std::polar(1.0, 1.0);
  g(1, 1) = std::polar(1.0, -1.0);
  CMatrix h = CMatrix::Zero(2, 2);
  h(0, 0) = std::polar(1.0, 0.37);
  h(1, 1) = std::polar(1.0, -0.37);
  auto c = density_certificate({g, h});
  EXPECT_EQ(c.lie_dim, 1);
  EXPECT_FALSE(c.dense);
}

TEST(Density, RandomUnitaryPairIsDense) {
  Quat a(0.3, 0.5, -0.2, 0.7), b(0.9, -0.1, 0.3, 0.2);
  a.normalize();
  b.normalize();
  auto c = density_certificate({CMatrix(su2_of_quat(a)), CMatrix(su2_of_quat(b))});
  EXPECT_TRUE(c.dense);
}

TEST(Density, PottsEdgeOperatorsN5K3) {
  auto gens = potts_edge_generators(5, 3, -2, -2.0 / 3.0);
  ASSERT_EQ(gens.size(), 5u);
  EXPECT_EQ(gens[0].rows(), 5);
  auto c = density_certificate(gens, -1, noncompact_density_options());
  EXPECT_EQ(c.target_dim, 24);
  EXPECT_EQ(c.lie_dim, 24);
  EXPECT_TRUE(c.dense);
}

TEST(Density, RejectsBadInput) {
  EXPECT_THROW(density_certificate({}), Error);
  EXPECT_THROW(density_certificate({CMatrix::Zero(2, 2)}), Error);
  EXPECT_THROW(density_certificate({CMatrix::Identity(2, 2), CMatrix::Identity(3, 3)}), Error);
}

}  // namespace
}  // namespace skeinkit
