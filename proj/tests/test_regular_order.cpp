#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wallcross/crystal.hpp"
#include "wallcross/regular_order.hpp"

using namespace wallcross;

TEST(RegularOrder, LinearForm) {
  EXPECT_EQ(f_ab({1, 2}, {1, 2}), 3);
  EXPECT_EQ(f_ab({2, 3}, {3, 1}), 5);
  for (int r = 1; r <= 4; ++r)
    for (int c = 1; c <= 4; ++c) EXPECT_EQ(f_ab(kTerminalWall, {r, c}), c);
}

TEST(RegularOrder, TieBreaks) {
  Wall half{1, 2};
  EXPECT_TRUE(box_cmp(half, {1, 2}, {2, 1}, TieBreak::shallow_first) < 0);
  EXPECT_TRUE(box_cmp(half, {1, 2}, {2, 1}, TieBreak::paper_literal) > 0);
  EXPECT_TRUE(box_cmp(half, {1, 1}, {1, 2}) < 0);
  EXPECT_TRUE(box_cmp(half, {1, 1}, {1, 2}, TieBreak::paper_literal) < 0);
}

TEST(RegularOrder, Chambers) {
  EXPECT_EQ(chamber_partition(3, {1, 2}), Partition({2, 1}));
  EXPECT_EQ(chamber_partition(4, kTerminalWall), Partition({1, 1, 1, 1}));
  EXPECT_EQ(chamber_partition(5, {1, 5}), Partition({5}));
  EXPECT_THROW(chamber_partition(3, {1, 5}), InvalidArgument);
  EXPECT_THROW(chamber_partition(0, kTerminalWall), InvalidArgument);
}

TEST(RegularOrder, LiteralTieBreakStartsAtHook) {
  // with the literal tie-break the first chamber is (n-1,1), not the row (n)
  for (int n = 3; n <= 10; ++n)
    EXPECT_EQ(chamber_partition(n, {1, n}, TieBreak::paper_literal), Partition({n - 1, 1}));
}

TEST(RegularOrder, ChambersMatchBruteForce) {
  for (int n = 1; n <= 14; ++n) {
    auto walls = farey_walls(n);
    walls.push_back(kTerminalWall);
    for (const auto& w : walls)
      EXPECT_EQ(chamber_partition(n, w).parts(), oracle::smallest_boxes(n, w.a, w.b))
          << n << " " << w.str();
  }
}

TEST(RegularOrder, Ladders) {
  using V = std::vector<Box>;
  EXPECT_EQ(ladder_positions({1, 3}, {1, 3}, 4), (V{{1, 3}, {2, 1}}));
  EXPECT_EQ(ladder_positions({1, 2}, {1, 2}, 4), (V{{1, 2}, {2, 1}}));
  EXPECT_EQ(ladder_positions(kTerminalWall, {1, 1}, 3), (V{{1, 1}, {2, 1}, {3, 1}}));
}

TEST(RegularOrder, LadderStepIsPrimitive) {
  for (int n = 2; n <= 9; ++n)
    for (const auto& w : farey_walls(n))
      for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) {
          auto lad = ladder_positions(w, {r, c}, 3 * n);
          for (std::size_t k = 0; k + 1 < lad.size(); ++k) {
            EXPECT_EQ(lad[k + 1].row - lad[k].row, w.a);
            EXPECT_EQ(lad[k].col - lad[k + 1].col, w.b - w.a);
          }
        }
}

TEST(RegularOrder, ColumnRegularization) {
  EXPECT_EQ(rc_regularize(Partition({3}), {1, 3}), Partition({2, 1}));
  EXPECT_EQ(rc_regularize(Partition({3, 1}), {1, 2}), Partition({2, 1, 1}));
  EXPECT_EQ(rc_regularize(Partition({1, 1, 1}), {1, 3}), Partition({1, 1, 1}));
  EXPECT_THROW(rc_regularize(Partition({1}), kTerminalWall), InvalidArgument);
}

TEST(RegularOrder, ColumnRegularizationReportsBrokenShape) {
  // at 2/3 the boxes of [3] slide to (1,1),(3,1),(5,1); (3,1) has nothing above
  try {
    rc_regularize(Partition({3}), {2, 3});
    FAIL() << "expected NotAYoungDiagram";
  } catch (const NotAYoungDiagram& e) {
    ASSERT_TRUE(e.ladder().has_value());
    EXPECT_EQ(*e.ladder(), 5);
  }
}

TEST(RegularOrder, NeighbourLemma) {
  EXPECT_TRUE(lemma1_no_crossing({1, 3}, {1, 2}, 3).passed());
  EXPECT_TRUE(lemma1_no_crossing({1, 4}, {1, 3}, 4).passed());
  auto bad = lemma1_no_crossing({1, 3}, {2, 3}, 3);
  EXPECT_FALSE(bad.neighbors);
  ASSERT_TRUE(bad.counterexample);
  EXPECT_EQ(bad.counterexample->first, (Box{1, 2}));
  EXPECT_EQ(bad.counterexample->second, (Box{2, 1}));
  EXPECT_THROW(lemma1_no_crossing({1, 2}, {1, 3}, 3), InvalidArgument);
}

TEST(RegularOrder, NeighbourLemmaOnlyCountsCellsThatFitTogether) {
  // each cell fits in a 4-box diagram, but the pair needs [4,1,1]
  EXPECT_EQ(joint_diagram_size({1, 4}, {3, 1}), 6);
  EXPECT_EQ(joint_diagram_size({2, 2}, {1, 1}), 4);
  EXPECT_TRUE(f_ab({1, 3}, {1, 4}) < f_ab({1, 3}, {3, 1}));
  EXPECT_TRUE(f_ab({1, 2}, {1, 4}) > f_ab({1, 2}, {3, 1}));
  EXPECT_TRUE(lemma1_no_crossing({1, 3}, {1, 2}, 4).passed());
  EXPECT_FALSE(lemma1_no_crossing({1, 3}, {1, 2}, 6).passed());
}

TEST(RegularOrder, NeighbourLemmaAllNeighbours) {
  for (int n = 2; n <= 12; ++n) {
    auto ws = farey_walls(n);
    for (std::size_t k = 0; k + 1 < ws.size(); ++k) {
      auto res = lemma1_no_crossing(ws[k], ws[k + 1], n);
      EXPECT_TRUE(res.neighbors);
      EXPECT_TRUE(res.passed()) << n << " " << ws[k].str();
    }
  }
}

TEST(RegularOrder, RegularizationCascadeMatchesChambers) {
  for (int n = 1; n <= 12; ++n) {
    auto ws = farey_walls(n);
    for (std::size_t k = 0; k < ws.size(); ++k) {
      Wall next = k + 1 < ws.size() ? ws[k + 1] : kTerminalWall;
      EXPECT_EQ(rc_regularize(chamber_partition(n, ws[k]), ws[k]), chamber_partition(n, next))
          << n << " " << ws[k].str();
    }
  }
}

TEST(RegularOrder, MonotoneAndGoodGrowth) {
  for (int n = 2; n <= 12; ++n)
    for (const auto& w : farey_walls(n - 1)) {
      Partition small = chamber_partition(n - 1, w);
      Partition big = chamber_partition(n, w);
      std::vector<Box> extra;
      for (const Box& b : big.boxes())
        if (!small.contains(b)) extra.push_back(b);
      ASSERT_EQ(extra.size(), 1u) << n << " " << w.str();
      for (const Box& b : small.boxes()) ASSERT_TRUE(big.contains(b));
      // the added box is the next one in the order among all outside cells
      for (int r = 1; r <= n; ++r)
        for (int c = 1; r + c <= n + 1; ++c)
          if (!big.contains({r, c})) { EXPECT_TRUE(box_cmp(w, extra[0], {r, c}) < 0); }
      EXPECT_TRUE(is_good_addable(small, extra[0], w.base())) << n << " " << w.str();
    }
}
