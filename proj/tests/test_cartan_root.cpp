#include <gtest/gtest.h>

#include <algorithm>

#include "test_util.hpp"

using namespace wt;

TEST(CartanRoot, A1HasTwoRoots) {
  const auto roots = build_root_system({{2}});
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0].coords, std::vector<int>{1});
  EXPECT_EQ(roots[1].coords, std::vector<int>{-1});
}

TEST(CartanRoot, A2PositiveRoots) {
  const auto rs = RootSystem::build({{2, -1}, {-1, 2}});
  EXPECT_EQ(rs->size(), 6);
  EXPECT_EQ(rs->num_positive(), 3);
  std::vector<std::vector<int>> pos;
  for (int k = 0; k < rs->num_positive(); ++k) pos.push_back(rs->root(k).coords);
  std::sort(pos.begin(), pos.end());
  EXPECT_EQ(pos, (std::vector<std::vector<int>>{{0, 1}, {1, 0}, {1, 1}}));
}

TEST(CartanRoot, B2HasEightRoots) {
  const auto rs = RootSystem::build({{2, -1}, {-2, 2}});
  EXPECT_EQ(rs->size(), 8);
  EXPECT_EQ(rs->num_positive(), 4);
}

TEST(CartanRoot, SimpleRootsComeFirst) {
  for (const char* t : {"A3", "B3", "C3", "G2", "A1xA1"}) {
    const auto rs = datum(t);
    for (int i = 0; i < rs->rank(); ++i) EXPECT_EQ(rs->root(i), rs->simple_root(i)) << t;
  }
}

TEST(CartanRoot, KnownRootCounts) {
  EXPECT_EQ(datum("G2")->size(), 12);
  EXPECT_EQ(datum("A3")->size(), 12);
  EXPECT_EQ(datum("B3")->size(), 18);
  EXPECT_EQ(datum("D4")->size(), 24);
  EXPECT_EQ(datum("F4")->size(), 48);
  EXPECT_EQ(datum("E6")->size(), 72);
  EXPECT_EQ(datum("A1xA1")->size(), 4);
}

TEST(CartanRoot, PhiSubset) {
  const auto rs = datum("A2");
  EXPECT_TRUE(rs->phi_subset(Subset()).empty());
  const auto j1 = rs->phi_subset(labels({1}));
  ASSERT_EQ(j1.size(), 2u);
  EXPECT_EQ(j1[0].coords, (std::vector<int>{1, 0}));
  EXPECT_EQ(j1[1].coords, (std::vector<int>{-1, 0}));
  EXPECT_EQ(rs->phi_subset(labels({1, 2})).size(), 6u);
}

TEST(CartanRoot, ClosedUnderNegationAndReflections) {
  for (const char* t : {"A1", "A2", "B2", "G2", "A3", "A1xA1"}) {
    const auto rs = datum(t);
    EXPECT_EQ(rs->size() % 2, 0);
    EXPECT_EQ(2 * rs->num_positive(), rs->size());
    for (int k = 0; k < rs->size(); ++k) {
      const Root& r = rs->root(k);
      EXPECT_EQ(rs->root(rs->negate(k)), -r);
      const bool pos = std::all_of(r.coords.begin(), r.coords.end(), [](int c) { return c >= 0; });
      const bool neg = std::all_of(r.coords.begin(), r.coords.end(), [](int c) { return c <= 0; });
      EXPECT_TRUE(pos != neg) << t;
      for (int i = 0; i < rs->rank(); ++i) EXPECT_GE(rs->index_of(rs->apply_reflection(i, r)), 0);
    }
  }
}

TEST(CartanRoot, SubsystemIntersection) {
  for (const char* t : {"A2", "B2", "A3"}) {
    const auto rs = datum(t);
    const Subset all = Subset::full(rs->rank());
    for (Subset j : subsets_of(all))
      for (Subset k : subsets_of(all)) {
        std::vector<Root> a = rs->phi_subset(j), b = rs->phi_subset(k), both;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
        std::vector<Root> expect = rs->phi_subset(j & k);
        std::sort(expect.begin(), expect.end());
        EXPECT_EQ(both, expect);
      }
  }
}

TEST(CartanRoot, MalformedMatrix) {
  for (const CartanMatrix& a : std::vector<CartanMatrix>{{{2, 1}, {1, 2}}, {{2, -1}, {0, 2}}, {{3}}, {{2, -1}}, {}}) {
    try {
      RootSystem::build(a);
      ADD_FAILURE() << "accepted a malformed matrix";
    } catch (const Error& e) {
      EXPECT_STREQ(e.what(), "invalid Cartan matrix");
    }
  }
}

TEST(CartanRoot, NotFiniteType) {
  try {
    RootSystem::build({{2, -3}, {-3, 2}});
    ADD_FAILURE() << "accepted a hyperbolic matrix";
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "not finite type");
  }
  EXPECT_THROW(RootSystem::build({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, 8), Error);
}

TEST(CartanRoot, TypeStrings) {
  EXPECT_EQ(cartan_from_type_string("G2"), (CartanMatrix{{2, -3}, {-1, 2}}));
  EXPECT_EQ(cartan_from_type_string("B2"), (CartanMatrix{{2, -1}, {-2, 2}}));
  EXPECT_EQ(cartan_from_type_string("A1xA1"), (CartanMatrix{{2, 0}, {0, 2}}));
  EXPECT_THROW(cartan_from_type_string("Q3"), Error);
}
