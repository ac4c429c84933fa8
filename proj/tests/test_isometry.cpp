// Copyright 2026 The m20lattice Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <set>

#include "m20lattice/isometry.hpp"
#include "m20lattice/representability.hpp"
#include "test_util.hpp"

namespace {

using namespace m20lattice;
using testutil::to_lib;
using testutil::to_oracle;

oracle::Mat3 to_oracle(const Matrix3& m) {
  oracle::Mat3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = m[i][j];
  return out;
}

TEST(Isometry, GeneratorsActOnColumns) {
  EXPECT_EQ(rho1()(LatticeVector{1, 2, 3}), (LatticeVector{2, 1, 3}));
  EXPECT_EQ(minus_identity()(LatticeVector{1, 2, 3}), (LatticeVector{-1, -2, -3}));
  EXPECT_EQ((minus_identity() * rho2())(LatticeVector{1, 1, 1}), (LatticeVector{0, 1, 1}));
}

TEST(Isometry, WorkedOrbitChain) {
  const auto neg_rho2 = minus_identity() * rho2();
  LatticeVector efh{1, 1, 1}, fh{0, 1, 1}, eh{1, 0, 1}, h{0, 0, 1};
  EXPECT_EQ(neg_rho2(efh), fh);
  EXPECT_EQ(rho1()(fh), eh);
  EXPECT_EQ(neg_rho2(eh), h);
}

TEST(Isometry, RejectsNonIsometries) {
  EXPECT_THROW(Isometry(Matrix3{{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}}), Error);
  EXPECT_THROW(Isometry(Matrix3{{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}}), Error);
}

TEST(Isometry, TransposedGeneratorIsReportedAsConventionMismatch) {
  // rho2 transposed fails M^T G M = G; its transpose (rho2 itself) passes.
  const Matrix3 t = transpose(rho2().matrix());
  ASSERT_FALSE(preserves_gram(t));
  try {
    Isometry bad(t);
    FAIL() << "accepted a transposed generator";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("transpose"), std::string::npos);
  }
}

TEST(IsometryGroup, HasSixteenElementsMatchingOracle) {
  const auto& grp = isometry_group();
  EXPECT_EQ(grp.order(), 16u);
  std::set<oracle::Mat3> mine;
  for (const auto& g : grp.elements()) {
    EXPECT_TRUE(preserves_gram(g.matrix()));
    EXPECT_TRUE(oracle::preserves_gram(to_oracle(g.matrix())));
    mine.insert(to_oracle(g.matrix()));
  }
  EXPECT_EQ(mine, oracle::group_closure(oracle::generator_matrices()));
  // The generators give all of O(L20), not a subgroup.
  EXPECT_EQ(mine, oracle::small_isometries());
}

TEST(IsometryGroup, GroupAxioms) {
  const auto& grp = isometry_group();
  EXPECT_TRUE(grp.contains(Isometry::identity()));
  int plus = 0;
  for (const auto& g : grp.elements()) {
    if (g.det() == 1) ++plus;
    bool has_inverse = false;
    for (const auto& h : grp.elements())
      if (g * h == Isometry::identity()) has_inverse = true;
    EXPECT_TRUE(has_inverse) << g;
    for (const auto& h : grp.elements()) EXPECT_TRUE(grp.contains(g * h));
  }
  EXPECT_EQ(plus, 8);
}

TEST(IsometryGroup, SafetyBoundTripsOnBadGenerators) {
  // Isometry() validates matrices, so a bad generator cannot even be built.
  EXPECT_THROW(IsometryGroup::generate({Isometry(Matrix3{{{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}})}), Error);
}

TEST(Orbit, OfH) {
  auto o = orbit(LatticeVector{0, 0, 1});
  std::vector<LatticeVector> want{{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1},
                                  {0, 0, -1}, {-1, 0, -1}, {0, -1, -1}, {-1, -1, -1}};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(o, want);
  EXPECT_EQ(canonical_rep(LatticeVector{0, 0, 1}), (LatticeVector{-1, -1, -1}));
}

TEST(Orbit, TrivialCases) {
  EXPECT_EQ(orbit(LatticeVector{0, 0, 0}).size(), 1u);
  EXPECT_TRUE(same_orbit(LatticeVector{1, 0, 0}, LatticeVector{0, 1, 0}));
}

TEST(Orbit, DeltaDoesNotSeparateEverything) {
  EXPECT_EQ(norm(LatticeVector{3, 6, 5}), 300);
  EXPECT_EQ(norm(LatticeVector{5, 0, 5}), 300);
  EXPECT_FALSE(same_orbit(LatticeVector{3, 6, 5}, LatticeVector{5, 0, 5}));
}

TEST(OrbitProperty, MatchesBfsAndPreservesInvariants) {
  auto g = testutil::rng(10);
  for (int k = 0; k < 500; ++k) {
    auto v = testutil::random_vector(g, 50);
    auto o = orbit(v);
    std::set<oracle::Vec3> mine;
    for (const auto& w : o) {
      mine.insert(to_oracle(w));
      EXPECT_EQ(norm(w), norm(v));
      EXPECT_EQ(content(w), content(v));
      EXPECT_TRUE(abs_value(w.delta) == abs_value(v.delta));
      EXPECT_EQ(canonical_rep(w), canonical_rep(v));
    }
    EXPECT_EQ(mine, oracle::bfs_orbit(to_oracle(v)));
    EXPECT_EQ(16 % o.size(), 0u);
    EXPECT_EQ(canonical_rep(v), o.front());
  }
}

TEST(OrbitProperty, DeltaConditionExhaustiveToNorm400) {
  // Every vector of norm <= 400: same orbit implies delta' = +-delta.
  std::vector<std::vector<LatticeVector>> by_norm(401);
  const long b = oracle::coordinate_bound(400);
  for (long x = -b; x <= b; ++x)
    for (long y = -b; y <= b; ++y)
      for (long z = -b; z <= b; ++z) {
        long long m = oracle::gram_norm({x, y, z});
        if (m > 0 && m <= 400) by_norm[m].push_back({x, y, z});
      }
  std::size_t pairs = 0;
  for (const auto& vs : by_norm)
    for (const auto& v : vs)
      for (const auto& w : vs)
        if (same_orbit(v, w)) {
          ++pairs;
          EXPECT_EQ(abs_value(v.delta), abs_value(w.delta)) << v << " " << w;
        }
  EXPECT_GT(pairs, 0u);
}

TEST(Orbit, CheckedIntegersAgree) {
  BasicLatticeVector<CheckedInt64> v{7, -3, 2};
  auto o = orbit(v);
  auto big = orbit(LatticeVector{7, -3, 2});
  ASSERT_EQ(o.size(), big.size());
  for (std::size_t k = 0; k < o.size(); ++k) EXPECT_EQ(o[k].cast<Integer>(), big[k]);
}

}  // namespace
