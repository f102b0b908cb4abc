#include <gtest/gtest.h>

#include "wallcross/conjectures.hpp"

using namespace wallcross;

TEST(TwoBlock, Fits) {
  auto f = fit_two_block(Partition({3, 3, 1, 1}));
  EXPECT_EQ(f.kind, TwoBlockFit::Kind::exact);
  ASSERT_EQ(f.shapes.size(), 1u);
  EXPECT_EQ(f.shapes[0], (TwoBlockShape{3, 2, 1, 2}));

  f = fit_two_block(Partition({2, 2}));
  EXPECT_EQ(f.kind, TwoBlockFit::Kind::degenerate);
  ASSERT_EQ(f.shapes.size(), 2u);
  EXPECT_EQ(f.shapes[0], (TwoBlockShape{2, 2, 0, 0}));
  EXPECT_EQ(f.shapes[1], (TwoBlockShape{0, 0, 2, 2}));

  EXPECT_EQ(fit_two_block(Partition({3, 2, 1})).kind, TwoBlockFit::Kind::none);
  EXPECT_EQ(fit_two_block(Partition()).kind, TwoBlockFit::Kind::degenerate);
  EXPECT_EQ(distinct_part_sizes(Partition({3, 2, 2, 1})), 3);
}

TEST(TwoBlock, EquationsImplyDiophantineIdentity) {
  // every (x,y,z,t) determines b_i, b_{i+1} and n satisfying the three
  // equations; the consolidated identity must then hold
  for (int x = 2; x <= 9; ++x)
    for (int z = 1; z < x; ++z)
      for (int y = 1; y <= 6; ++y)
        for (int t = 1; t <= 6; ++t) {
          int bi = z + y, bj = y + t + z - x, n = x * y + z * t;
          EquationVerdict v;
          ASSERT_NO_THROW(v = check_shape_equations({x, y, z, t}, n, bi, bj));
          EXPECT_TRUE(v.passed());
          EXPECT_TRUE(v.diophantine);
        }
}

TEST(SignConjecture, NThree) {
  auto rep = check_sign_conjecture(3);
  ASSERT_EQ(rep.chambers.size(), 3u);
  EXPECT_EQ(rep.chambers[0].state, Partition({2, 1}));
  EXPECT_EQ(rep.chambers[2].state, Partition({1, 1, 1}));
  ASSERT_EQ(rep.chambers[0].fit.shapes.size(), 1u);
  EXPECT_EQ(rep.chambers[0].fit.shapes[0], (TwoBlockShape{2, 1, 1, 1}));
  ASSERT_EQ(rep.thresholds.size(), 2u);
  EXPECT_EQ(rep.thresholds[0], (Wall{1, 3}));
  EXPECT_EQ(rep.thresholds[1], (Wall{2, 3}));
  EXPECT_FALSE(rep.chambers[0].interior);
  EXPECT_TRUE(rep.chambers[1].interior);
  EXPECT_FALSE(rep.chambers[2].interior);
  // r = 1/2 sits strictly between 1/3 and 2/3, but z + y = 2 != 3
  EXPECT_FALSE(rep.chambers[1].passed());
  EXPECT_FALSE(rep.passed());
  ASSERT_TRUE(rep.first_counterexample);
  EXPECT_NE(rep.first_counterexample->find("r=1/2"), std::string::npos);
}

TEST(SignConjecture, NTwoUsesDegenerateReading) {
  auto rep = check_sign_conjecture(2);
  ASSERT_EQ(rep.chambers.size(), 1u);
  const auto& ch = rep.chambers[0];
  EXPECT_EQ(ch.state, Partition({1, 1}));
  EXPECT_EQ(ch.fit.kind, TwoBlockFit::Kind::degenerate);
  EXPECT_TRUE(ch.interior);
  EXPECT_EQ(ch.lower, (Wall{0, 1}));
  EXPECT_EQ(ch.upper, kTerminalWall);
  EXPECT_TRUE(rep.thresholds.empty());
  EXPECT_TRUE(ch.equations_hold());
  EXPECT_TRUE(rep.passed());
}

TEST(SignConjecture, StepFailureIsReportedNotThrown) {
  auto rep = check_sign_conjecture(7, Variant::restricted);
  EXPECT_TRUE(rep.step_error);
  EXPECT_FALSE(rep.passed());
  EXPECT_THROW(check_sign_conjecture(9), InvalidArgument);
}

TEST(SignConjecture, ChambersCoverEveryWall) {
  for (int n : {5, 7, 11}) {
    auto rep = check_sign_conjecture(n);
    ASSERT_FALSE(rep.step_error) << n;
    EXPECT_EQ(rep.chambers.size(), farey_walls(n).size());
    for (std::size_t k = 0; k + 1 < rep.thresholds.size(); ++k)
      EXPECT_LT(rep.thresholds[k], rep.thresholds[k + 1]);
  }
}

TEST(RimRemark, SmallPrimes) {
  auto three = check_rim_remark(3);
  ASSERT_EQ(three.rows.size(), 3u);
  // [2,1] between 1/3 and 2/3: the 3-rim of [2,1] is the whole rim, not rim minus top row
  const auto& r = three.rows[0];
  EXPECT_EQ(r.state, Partition({2, 1}));
  ASSERT_TRUE(r.upper_rim);
  EXPECT_FALSE(*r.upper_rim);
  ASSERT_TRUE(r.lower_rim_transposed);
  ASSERT_TRUE(r.remainder_two_sizes);
  EXPECT_TRUE(*r.remainder_two_sizes);

  auto two = check_rim_remark(2);
  ASSERT_EQ(two.rows.size(), 1u);
  // both thresholds are virtual (b = 1): nothing to check
  EXPECT_FALSE(two.rows[0].upper_rim);
  EXPECT_FALSE(two.rows[0].lower_rim_transposed);
  EXPECT_TRUE(two.passed());

  auto five = check_rim_remark(5);
  EXPECT_EQ(five.rows.size(), farey_walls(5).size());
}

TEST(RimRemark, RimWithoutTopRow) {
  using V = std::vector<Box>;
  EXPECT_EQ(rim_without_top_row(Partition({3, 1})), (V{{2, 1}}));
  EXPECT_EQ(rim_without_top_row(Partition({2, 2})), (V{{2, 2}, {2, 1}}));
}

TEST(GoodBox, SingleBoxDifference) {
  EXPECT_EQ(single_box_difference(Partition({2}), Partition({3})), (Box{1, 3}));
  EXPECT_EQ(single_box_difference(Partition({1, 1}), Partition({1, 1, 1})), (Box{3, 1}));
  EXPECT_FALSE(single_box_difference(Partition({2}), Partition({1, 1, 1})));
  EXPECT_FALSE(single_box_difference(Partition({2}), Partition({2})));
}

TEST(GoodBox, HandTraceMThree) {
  std::vector<Semantics> all(kAllSemantics.begin(), kAllSemantics.end());
  auto reps = check_goodbox_conjecture(3, all);
  ASSERT_EQ(reps.size(), 2u);
  EXPECT_EQ(reps[0].smaller, Partition({2}));
  EXPECT_EQ(reps[0].larger, Partition({3}));
  EXPECT_EQ(reps[1].smaller, Partition({1, 1}));
  EXPECT_EQ(reps[1].larger, Partition({2, 1}));

  const auto& r = reps[0];
  ASSERT_TRUE(r.hard_ok());
  ASSERT_EQ(r.chambers.size(), 4u);  // (0,1/3) (1/3,1/2) (1/2,2/3) (2/3,1)
  const std::size_t dir_up = 0, conj_up = 1, dir_last = 2, conj_last = 3;

  EXPECT_EQ(r.chambers[0].diff, (Box{1, 3}));
  EXPECT_EQ(r.chambers[0].good[dir_up], true);
  EXPECT_FALSE(r.chambers[0].good[dir_last]);  // nothing crossed yet

  EXPECT_EQ(r.chambers[2].smaller, Partition({1, 1}));
  EXPECT_EQ(r.chambers[2].larger, Partition({2, 1}));
  EXPECT_EQ(r.chambers[2].diff, (Box{1, 2}));
  EXPECT_EQ(r.chambers[2].good[dir_up], true);

  const auto& fin = r.chambers[3];
  EXPECT_TRUE(fin.is_final());
  EXPECT_EQ(fin.smaller, Partition({1, 1}));
  EXPECT_EQ(fin.larger, Partition({1, 1, 1}));
  EXPECT_EQ(fin.diff, (Box{3, 1}));
  EXPECT_FALSE(fin.good[dir_up]);
  EXPECT_FALSE(fin.good[conj_up]);
  EXPECT_EQ(fin.good[dir_last], false);
  EXPECT_EQ(fin.good[conj_last], true);

  for (const auto& rep : reps) EXPECT_TRUE(rep.nonfinal_good(dir_up));
}

TEST(GoodBox, SemanticsNames) {
  for (const auto& s : kAllSemantics) EXPECT_EQ(parse_semantics(s.str()), s);
  EXPECT_THROW(parse_semantics("direct"), InvalidArgument);
  EXPECT_THROW(check_goodbox_conjecture(1, {}), InvalidArgument);
}
