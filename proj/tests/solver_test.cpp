#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include <unionsep/constructions.hpp>
#include <unionsep/generators.hpp>
#include <unionsep/solver.hpp>

#include "oracles.hpp"

using namespace unionsep;
namespace gen = unionsep::generators;

TEST(Solve, TinyInstances) {
  const auto k2 = gen::complete(2);
  EXPECT_TRUE(solve(k2, ListAssignment(std::vector<ColorSet>{{1}, {1}})).unsat());

  const auto r = solve(k2, ListAssignment(std::vector<ColorSet>{{1}, {2}}));
  ASSERT_TRUE(r.sat());
  EXPECT_EQ(*r.witness, (Coloring{1, 2}));
}

TEST(Solve, BookK24IsUnsat) {
  const auto book = build_book(2, 3);
  EXPECT_EQ(book.graph, gen::complete_bipartite(2, 4));
  EXPECT_TRUE(solve(book.graph, book.lists).unsat());
}

TEST(Solve, EmptyGraphIsSat) {
  const auto r = solve(gen::empty(0), ListAssignment{});
  EXPECT_TRUE(r.sat());
}

TEST(Solve, ListSizeMismatchIsUsageError) {
  EXPECT_THROW(solve(gen::complete(3), ListAssignment(std::vector<ColorSet>{{1}})), UsageError);
}

TEST(SolveWithPrecolor, GadgetWithFixedEndsIsUnsat) {
  // The full (3,5) graph with v_A = a and v_B = b for every choice.
  const auto inst = build_gadget35();
  for (Color a : {0u, 1u, 2u})
    for (Color b : {3u, 4u, 5u}) {
      PartialColoring fixed(inst.graph.order());
      fixed[0] = a;
      fixed[1] = b;
      EXPECT_TRUE(solve_with_precolor(inst.graph, inst.lists, fixed).unsat())
          << "a=" << a << " b=" << b;
    }
}

TEST(SolveWithPrecolor, OwnWitnessIsSat) {
  std::mt19937_64 rng(21);
  int sat = 0;
  for (int i = 0; i < 200; ++i) {
    const auto g = gen::random_graph(6, 0.4, rng);
    const auto L = oracle::random_lists(6, 3, 5, rng);
    const auto r = solve(g, L);
    if (!r.sat())
      continue;
    ++sat;
    PartialColoring fixed(r.witness->begin(), r.witness->end());
    const auto again = solve_with_precolor(g, L, fixed);
    ASSERT_TRUE(again.sat());
    EXPECT_EQ(*again.witness, *r.witness);
  }
  EXPECT_GT(sat, 20);
}

TEST(SolveWithPrecolor, PathCenterFixedToSharedColor) {
  // Ends list {7} only; center fixed to 7 conflicts with both.
  const auto p3 = gen::path(3);
  const ListAssignment L(std::vector<ColorSet>{{7}, {7, 8}, {7}});
  PartialColoring fixed(3);
  fixed[1] = 7;
  EXPECT_TRUE(solve_with_precolor(p3, L, fixed).unsat());
}

TEST(SolveWithPrecolor, ConflictingPrecolorsAreUnsat) {
  const ListAssignment L(std::vector<ColorSet>{{1, 2}, {1, 2}});
  PartialColoring fixed{1u, 1u};
  EXPECT_TRUE(solve_with_precolor(gen::complete(2), L, fixed).unsat());
}

TEST(SolveWithPrecolor, ColorOutsideListIsUsageError) {
  const ListAssignment L(std::vector<ColorSet>{{1, 2}, {1, 2}});
  PartialColoring fixed{3u, std::nullopt};
  EXPECT_THROW(solve_with_precolor(gen::complete(2), L, fixed), UsageError);
}

TEST(SolveOptions, NodeLimitIsReported) {
  const auto inst = build_gadget35();
  SolveOptions opts;
  opts.max_nodes = 10;
  EXPECT_EQ(solve(inst.graph, inst.lists, opts).verdict,
            SolveVerdict::NodeLimit);
}

TEST(CountColorings, Examples) {
  EXPECT_EQ(count_colorings(gen::empty(1), ListAssignment(std::vector<ColorSet>{{0, 1, 2}}), 100),
            3u);
  EXPECT_EQ(count_colorings(gen::complete(2), ListAssignment(std::vector<ColorSet>{{1, 2}, {1, 2}}),
                            100),
            2u);
  const ListAssignment c4(std::vector<ColorSet>{{1, 2}, {1, 2}, {1, 2}, {1, 2}});
  // Oracle: 16 assignments, 2 proper.
  ASSERT_EQ(oracle::count_colorings(gen::cycle(4), c4), 2u);
  EXPECT_EQ(count_colorings(gen::cycle(4), c4, 100), 2u);
}

TEST(CountColorings, SaturatesAtCap) {
  const ListAssignment L(std::vector<ColorSet>{{0, 1, 2}, {0, 1, 2}, {0, 1, 2}});
  EXPECT_EQ(count_colorings(gen::empty(3), L, 10), 10u);
  EXPECT_EQ(count_colorings(gen::empty(3), L, 1000), 27u);
}

TEST(SolverProperty, MatchesProductSpaceOracle) {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = 1 + i % 5;
    const auto g = gen::random_graph(n, 0.6, rng);
    const auto L = oracle::random_lists(n, 3, 6, rng);
    const auto expected = oracle::count_colorings(g, L);
    const auto r = solve(g, L);
    ASSERT_EQ(r.sat(), expected > 0) << "trial " << i;
    EXPECT_EQ(count_colorings(g, L, 1'000'000), expected);
  }
}

TEST(SolverProperty, VerdictInvariantUnderRelabeling) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 7;
    const auto g = gen::random_graph(n, 0.5, rng);
    const auto L = oracle::random_lists(n, 3, 4, rng);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<ColorSet> moved(n);
    for (Vertex v = 0; v < n; ++v)
      moved[perm[v]] = L[v];
    EXPECT_EQ(solve(g, L).sat(),
              solve(g.relabeled(perm), ListAssignment(moved, L.universe()))
                  .sat());
  }
}
