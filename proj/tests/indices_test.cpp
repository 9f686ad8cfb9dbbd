// SPDX-License-Identifier: Apache-2.0

#include "sombor/indices.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sombor/extremal.hpp"

namespace sombor {
namespace {

constexpr VdbKernel kAllKernels[] = {
    VdbKernel::kSecondSombor, VdbKernel::kSombor,          VdbKernel::kFirstZagreb,
    VdbKernel::kSecondZagreb, VdbKernel::kForgotten,       VdbKernel::kRandic,
    VdbKernel::kSumConnectivity, VdbKernel::kSymmetricDivision,
};

Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, static_cast<Vertex>((v + 1) % n)});
  return Graph(n, edges);
}

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, edges);
}

// CC(C)CCCCC
Graph methylheptane() {
  return Graph(8, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
}

TEST(So2Test, Octane) {
  const IndexValue v = so2(build_path(8));
  ASSERT_TRUE(v.exact.has_value());
  EXPECT_EQ(*v.exact, Rational(6, 5));
  EXPECT_DOUBLE_EQ(v.approx, 1.2);
}

TEST(So2Test, RegularGraphsVanish) {
  for (std::size_t n = 3; n <= 9; ++n) {
    EXPECT_TRUE(so2(cycle(n)).exact->is_zero()) << "C" << n;
    EXPECT_TRUE(so2(complete(n)).exact->is_zero()) << "K" << n;
  }
  EXPECT_TRUE(so2(Graph(4, {})).exact->is_zero());
}

TEST(So2Test, MethylHeptane) {
  // 2 (1,2)-edges would give 3/5 each; here: (1,3) twice, (2,3), (2,2) x3, (1,2).
  const Rational expected = Rational(4, 5) * Rational(2) + Rational(5, 13) + Rational(3, 5);
  EXPECT_EQ(*so2(methylheptane()).exact, expected);
  EXPECT_EQ(expected, Rational(168, 65));
  EXPECT_NEAR(expected.to_double(), 2.5846, 5e-5);
}

TEST(So2Test, StarClosedForm) {
  for (std::int64_t n = 2; n <= 30; ++n) {
    const Rational expected((n * n - 2 * n) * (n - 1), n * n - 2 * n + 2);
    EXPECT_EQ(*so2(build_star(static_cast<std::size_t>(n))).exact, expected) << n;
  }
}

TEST(So2FromProfileTest, Examples) {
  EXPECT_EQ(so2_from_profile(edge_type_profile(build_path(4))), Rational(6, 5));
  EdgeTypeProfile tmb(8, {{DegreePair(1, 4), 6}, {DegreePair(4, 4), 1}}, {{1, 6}, {4, 2}});
  EXPECT_EQ(so2_from_profile(tmb), Rational(90, 17));
  EXPECT_NEAR(Rational(90, 17).to_double(), 5.2941, 5e-5);
  EdgeTypeProfile t3(7, {{DegreePair(1, 3), 2}, {DegreePair(1, 4), 3}, {DegreePair(3, 4), 1}},
                     {{1, 5}, {3, 1}, {4, 1}});
  EXPECT_EQ(so2_from_profile(t3), Rational(1924, 425));
  EXPECT_EQ(so2_from_profile(t3), theorem33_upper(7));
}

TEST(VdbIndexTest, Examples) {
  EXPECT_EQ(*vdb_index(build_path(4), VdbKernel::kFirstZagreb).exact, Rational(10));
  const IndexValue randic = vdb_index(build_star(5), VdbKernel::kRandic);
  EXPECT_FALSE(randic.exact.has_value());
  EXPECT_DOUBLE_EQ(randic.approx, 2.0);
  EXPECT_EQ(*vdb_index(build_path(4), VdbKernel::kSecondZagreb).exact, Rational(8));
  EXPECT_EQ(*vdb_index(build_path(4), VdbKernel::kForgotten).exact, Rational(18));
  EXPECT_EQ(*vdb_index(build_path(4), VdbKernel::kSymmetricDivision).exact, Rational(7));
  EXPECT_DOUBLE_EQ(vdb_index(build_path(3), VdbKernel::kSombor).approx, 2.0 * std::sqrt(5.0));
  EXPECT_DOUBLE_EQ(vdb_index(build_path(3), VdbKernel::kSumConnectivity).approx,
                   2.0 / std::sqrt(3.0));
}

TEST(VdbIndexTest, SecondSomborKernelMatchesSo2) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 1000; ++i) {
    const Graph t = testing::random_tree(rng, 1 + rng() % 16);
    ASSERT_EQ(*vdb_index(t, VdbKernel::kSecondSombor).exact, *so2(t).exact);
  }
}

TEST(VdbIndexTest, KernelsAreSymmetric) {
  for (VdbKernel k : kAllKernels) {
    for (std::size_t x = 1; x <= 10; ++x) {
      for (std::size_t y = 1; y <= 10; ++y) {
        EXPECT_EQ(kernel_approx(k, x, y), kernel_approx(k, y, x));
        if (is_rational_kernel(k)) EXPECT_EQ(kernel_exact(k, x, y), kernel_exact(k, y, x));
      }
    }
  }
  EXPECT_THROW(kernel_exact(VdbKernel::kRandic, 1, 2), std::domain_error);
}

TEST(VdbIndexTest, NamesRoundTrip) {
  for (VdbKernel k : kAllKernels) EXPECT_EQ(parse_kernel(kernel_name(k)), k);
  EXPECT_FALSE(parse_kernel("so7").has_value());
  EXPECT_THROW(compute_index(build_path(3), "bogus"), std::invalid_argument);
}

TEST(VdbIndexTest, EdgelessGraphsGiveZero) {
  const Graph empty(3, {});
  for (VdbKernel k : kAllKernels) EXPECT_EQ(vdb_index(empty, k).approx, 0.0);
  EXPECT_EQ(neighborhood_zagreb(empty).approx, 0.0);
}

TEST(VdbIndexTest, ApproxIsNearestDoubleOfExact) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 300; ++i) {
    const Graph g = testing::random_graph(rng, 2 + rng() % 10, 0.5);
    for (VdbKernel k : kAllKernels) {
      const IndexValue v = vdb_index(g, k);
      if (v.exact) ASSERT_EQ(v.approx, v.exact->to_double());
    }
  }
}

TEST(NeighborhoodZagrebTest, Examples) {
  EXPECT_EQ(*neighborhood_zagreb(Graph(2, {{0, 1}})).exact, Rational(2));
  EXPECT_EQ(*neighborhood_zagreb(build_path(3)).exact, Rational(12));
  EXPECT_EQ(*neighborhood_zagreb(build_path(8)).exact, Rational(90));
}

TEST(NeighborhoodZagrebTest, MatchesPerVertexBruteForce) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    const Graph g = testing::random_graph(rng, 1 + rng() % 12, 0.35);
    const auto adj = testing::adjacency_of(g);
    std::int64_t expected = 0;
    for (const auto& nbrs : adj) {
      std::int64_t s = 0;
      for (std::size_t w : nbrs) s += static_cast<std::int64_t>(adj[w].size());
      expected += s * s;
    }
    ASSERT_EQ(*neighborhood_zagreb(g).exact, Rational(expected));
  }
}

TEST(Theorem31Test, Examples) {
  EXPECT_TRUE(theorem31_upper(6, 3, 3).is_zero());
  EXPECT_EQ(theorem31_upper(5, 1, 4), Rational(75, 17));
  for (std::int64_t n = 3; n <= 20; ++n) {
    const auto un = static_cast<std::size_t>(n);
    EXPECT_EQ(theorem31_upper(un - 1, 1, un - 1), *so2(build_star(un)).exact);
  }
  EXPECT_THROW(theorem31_upper(3, 0, 2), std::invalid_argument);
  EXPECT_THROW(theorem31_upper(3, 3, 2), std::invalid_argument);
}

// Star S6 has all edges at ratio 5/1 > 4/1, so the bound for Delta=4 does not
// apply; S5 attains it exactly because every edge has ratio Delta/delta.
TEST(Theorem31Test, EqualityNeedsExtremeRatioOnEveryEdge) {
  EXPECT_EQ(*so2(build_star(5)).exact, theorem31_upper(4, 1, 4));
  const Graph p = build_path(5);
  EXPECT_LT(*so2(p).exact, theorem31_upper(p.size(), 1, 2));
}

TEST(IndexPropertyTest, BoundsAndZeroCharacterisationOnRandomGraphs) {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = 1 + rng() % 12;
    const Graph g = testing::random_graph(rng, n, (1 + rng() % 9) / 10.0);
    const Rational value = *so2(g).exact;
    ASSERT_GE(value.sign(), 0);
    ASSERT_EQ(value.is_zero(), testing::components_regular(g));
    if (g.size() == 0) continue;
    std::size_t lo = n, hi = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (g.degree(v) == 0) continue;
      lo = std::min(lo, g.degree(v));
      hi = std::max(hi, g.degree(v));
    }
    ASSERT_LE(value, theorem31_upper(g.size(), lo, hi));
  }
}

TEST(IndexPropertyTest, So2EqualsProfileRoute) {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 1000; ++i) {
    const Graph g = testing::random_graph(rng, 1 + rng() % 12, 0.3);
    ASSERT_EQ(*so2(g).exact, so2_from_profile(edge_type_profile(g)));
  }
}

TEST(IndexPropertyTest, IsomorphismInvariance) {
  std::mt19937_64 rng(26);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 12;
    const Graph g = testing::random_graph(rng, n, 0.4);
    const Graph h = relabel(g, testing::random_permutation(rng, n));
    for (VdbKernel k : kAllKernels) {
      const IndexValue a = vdb_index(g, k), b = vdb_index(h, k);
      if (a.exact) {
        ASSERT_EQ(*a.exact, *b.exact);
      } else {
        ASSERT_NEAR(a.approx, b.approx, 1e-9 * (1.0 + std::abs(a.approx)));
      }
    }
    ASSERT_EQ(*neighborhood_zagreb(g).exact, *neighborhood_zagreb(h).exact);
  }
}

// SO2 = m - sum over edges of 2 / (r + 1), r = max(d^2) / min(d^2).
TEST(IndexPropertyTest, RatioReformulation) {
  std::mt19937_64 rng(27);
  for (int i = 0; i < 500; ++i) {
    const Graph t = testing::random_tree(rng, 2 + rng() % 15);
    Rational total(static_cast<std::int64_t>(t.size()));
    for (const auto& e : t.edges()) {
      const auto a = static_cast<std::int64_t>(t.degree(e.u) * t.degree(e.u));
      const auto b = static_cast<std::int64_t>(t.degree(e.v) * t.degree(e.v));
      const Rational ratio(std::max(a, b), std::min(a, b));
      total -= Rational(2) / (ratio + Rational(1));
    }
    ASSERT_EQ(total, *so2(t).exact);
  }
}

}  // namespace
}  // namespace sombor
