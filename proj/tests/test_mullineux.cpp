#include <gtest/gtest.h>

#include "wallcross/mullineux.hpp"

using namespace wallcross;

TEST(Mullineux, ERim) {
  using V = std::vector<Box>;
  EXPECT_EQ(e_rim(Partition({3}), 2), (V{{1, 3}, {1, 2}}));
  EXPECT_EQ(e_rim(Partition({3, 1}), 3), (V{{1, 3}, {1, 2}, {1, 1}, {2, 1}}));
  EXPECT_EQ(e_rim(Partition({1}), 5), (V{{1, 1}}));
  EXPECT_THROW(e_rim(Partition(), 3), InvalidArgument);
}

TEST(Mullineux, ERimRemovalLeavesPartition) {
  for (int n = 1; n <= 12; ++n)
    for (const auto& p : enumerate_partitions(n))
      for (int e = 2; e <= n + 1; ++e) EXPECT_NO_THROW(remove_boxes(p, e_rim(p, e)));
}

TEST(Mullineux, Symbols) {
  auto s = mullineux_symbol(Partition({3}), 2);
  EXPECT_EQ(s.a, (std::vector<int>{2, 1}));
  EXPECT_EQ(s.r, (std::vector<int>{1, 1}));
  s = mullineux_symbol(Partition({3, 1}), 3);
  EXPECT_EQ(s.a, (std::vector<int>{4}));
  EXPECT_EQ(s.r, (std::vector<int>{2}));
  s = mullineux_symbol(Partition({2, 1}), 3);
  EXPECT_EQ(s.a, (std::vector<int>{3}));
  EXPECT_EQ(s.r, (std::vector<int>{2}));
  EXPECT_EQ(s.str(), "(3;2)");
  EXPECT_THROW(mullineux_symbol(Partition({1, 1}), 2), InvalidArgument);
}

TEST(Mullineux, Images) {
  EXPECT_EQ(mullineux(Partition({3}), 3), Partition({2, 1}));
  EXPECT_EQ(mullineux(Partition({3, 1}), 2), Partition({3, 1}));
  EXPECT_EQ(mullineux(Partition({3, 1}), 5), Partition({2, 1, 1}));
  EXPECT_EQ(mullineux(Partition({4}), 4), Partition({2, 1, 1}));
  EXPECT_EQ(mullineux(Partition({2, 1, 1}), 4), Partition({4}));
  EXPECT_EQ(mullineux(Partition(), 3), Partition());
  EXPECT_THROW(mullineux(Partition({1, 1, 1}), 3), InvalidArgument);
}

TEST(Mullineux, RestrictedVariant) {
  EXPECT_EQ(mullineux_restricted(Partition({1, 1, 1}), 3), Partition({2, 1}));
  EXPECT_EQ(mullineux_restricted(Partition({1, 1}), 2), Partition({1, 1}));
  EXPECT_EQ(mullineux_restricted(Partition({2, 1}), 3), Partition({1, 1, 1}));
  EXPECT_THROW(mullineux_restricted(Partition({3}), 3), InvalidArgument);
}

TEST(Mullineux, Certificate) {
  EXPECT_TRUE(symbol_certificate(Partition({3, 1}), Partition({2, 1, 1}), 3));
  EXPECT_TRUE(symbol_certificate(Partition({3}), Partition({3}), 2));
  EXPECT_TRUE(symbol_certificate(Partition({2, 1}), Partition({3}), 3));
  EXPECT_FALSE(symbol_certificate(Partition({2, 1}), Partition({2, 1}), 3));
  EXPECT_THROW(symbol_certificate(Partition({2, 1}), Partition({2}), 3), InvalidArgument);
}

TEST(Mullineux, InvolutionCertifiedExhaustive) {
  for (int n = 0; n <= 10; ++n)
    for (const auto& p : enumerate_partitions(n))
      for (int e = 2; e <= n + 1; ++e) {
        if (!is_regular(p, e)) continue;
        Partition q = mullineux(p, e);
        ASSERT_EQ(q.size(), n);
        ASSERT_TRUE(is_regular(q, e));
        EXPECT_EQ(mullineux(q, e), p) << p << " e=" << e;
        EXPECT_TRUE(symbol_certificate(p, q, e)) << p << " e=" << e;
        if (e == 2) { EXPECT_EQ(q, p); }
        if (e > n) { EXPECT_EQ(q, transpose(p)); }
      }
}

TEST(Mullineux, ResidueChoiceIndependence) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& p : enumerate_partitions(n))
      for (int e = 2; e <= n + 1; ++e) {
        if (!is_regular(p, e)) continue;
        Partition ref = mullineux(p, e);
        for (std::size_t k = 0;; ++k) {
          auto q = mullineux_with_first_choice(p, e, k);
          if (!q) break;
          EXPECT_EQ(*q, ref) << p << " e=" << e << " option " << k;
        }
      }
}
