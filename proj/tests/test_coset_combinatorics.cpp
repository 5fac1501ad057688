#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace wt;

TEST(CosetCombinatorics, CosetDecompose) {
  const auto rs = datum("A2");
  auto [x, v] = coset_decompose(el(rs, "121"), labels({1}), Side::right);
  EXPECT_EQ(x, el(rs, "12"));
  EXPECT_EQ(v, el(rs, "1"));
  std::tie(x, v) = coset_decompose(el(rs, "21"), Subset(), Side::right);
  EXPECT_EQ(x, el(rs, "21"));
  EXPECT_TRUE(v.is_identity());
  std::tie(x, v) = coset_decompose(el(rs, "2"), labels({1}), Side::right);
  EXPECT_EQ(x, el(rs, "2"));
  EXPECT_TRUE(v.is_identity());
}

TEST(CosetCombinatorics, LeftDecompose) {
  const auto rs = datum("A2");
  const auto [v, x] = coset_decompose(el(rs, "121"), labels({1}), Side::left);
  EXPECT_EQ(v * x, el(rs, "121"));
  EXPECT_TRUE(in_parabolic(v, labels({1})));
  EXPECT_TRUE(is_min_left(x, labels({1})));
  EXPECT_EQ(v.length() + x.length(), 3);
}

TEST(CosetCombinatorics, MinCosetReps) {
  const auto rs = datum("A2");
  EXPECT_EQ(as_set(min_coset_reps(rs, Subset(), labels({1}), CosetKind::right)), elems(rs, {"", "2", "12"}));
  EXPECT_EQ(as_set(min_coset_reps(rs, labels({1}), labels({2}), CosetKind::both)), elems(rs, {"", "21"}));
  EXPECT_EQ(min_coset_reps(rs, Subset(), Subset(), CosetKind::right).size(), 6u);
  EXPECT_EQ(as_set(min_coset_reps(rs, labels({1}), Subset(), CosetKind::left)), elems(rs, {"", "2", "21"}));
}

TEST(CosetCombinatorics, CosetCounts) {
  for (const char* t : {"A2", "B2", "G2", "A3"}) {
    const auto rs = datum(t);
    const std::size_t order = WeylGroup(rs).size();
    for (Subset j : subsets_of(Subset::full(rs->rank())))
      EXPECT_EQ(min_coset_reps(rs, Subset(), j, CosetKind::right).size() * parabolic_elements(rs, j).size(), order);
  }
}

TEST(CosetCombinatorics, Support) {
  const auto rs = datum("A2");
  EXPECT_EQ(support(el(rs, "")), Subset());
  EXPECT_EQ(support(el(rs, "2")), labels({2}));
  EXPECT_EQ(support(el(rs, "121")), labels({1, 2}));
}

TEST(CosetCombinatorics, Lemma36Examples) {
  const auto a2 = datum("A2");
  auto [v, u1] = lemma_3_6_factor(el(a2, "2"), el(a2, "1"), labels({1}), labels({1}));
  EXPECT_EQ(v, el(a2, "1"));
  EXPECT_TRUE(u1.is_identity());
  std::tie(v, u1) = lemma_3_6_factor(el(a2, "2"), el(a2, ""), labels({1}), labels({1}));
  EXPECT_TRUE(v.is_identity());
  EXPECT_TRUE(u1.is_identity());

  // A3, J = J' = {1,2}, w = s3: K = {1}.
  const auto a3 = datum("A3");
  const WeylElement w = el(a3, "3");
  const Subset j = labels({1, 2});
  EXPECT_EQ(conjugate_intersection(w, j, j), labels({1}));
  for (const WeylElement& u : parabolic_elements(a3, j)) {
    std::tie(v, u1) = lemma_3_6_factor(w, u, j, j);
    EXPECT_EQ(u * w, v * w * u1);
    EXPECT_TRUE(in_parabolic(v, j));
    EXPECT_TRUE(is_min_right(v, labels({1})));
    EXPECT_TRUE(in_parabolic(u1, labels({1})));
  }
}

TEST(CosetCombinatorics, Lemma36Errors) {
  const auto rs = datum("A2");
  try {
    lemma_3_6_factor(el(rs, "1"), el(rs, ""), labels({1}), labels({1}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "w not a double-coset minimal representative");
  }
  try {
    lemma_3_6_factor(el(rs, "2"), el(rs, "2"), labels({1}), labels({1}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "u not in W_{J'}");
  }
}

TEST(CosetCombinatorics, Lemma310Examples) {
  const auto rs = datum("A2");
  const Subset j = labels({2});
  EXPECT_EQ(lemma_3_10_lift(j, el(rs, "1"), el(rs, "12"), el(rs, "")), el(rs, "2"));
  EXPECT_EQ(lemma_3_10_lift(j, el(rs, "1"), el(rs, "12"), el(rs, "2")), el(rs, "12"));
  EXPECT_TRUE(lemma_3_10_lift(j, el(rs, "1"), el(rs, ""), el(rs, "")).is_identity());
  EXPECT_THROW(lemma_3_10_lift(j, el(rs, "12"), el(rs, ""), el(rs, "")), Error);
}

TEST(CosetCombinatorics, Lemma310Exhaustive) {
  for (const char* t : {"A2", "B2", "A3"}) {
    const auto rs = datum(t);
    const Subset all = Subset::full(rs->rank());
    for (Subset j : subsets_of(all))
      for (const WeylElement& w : min_coset_reps(rs, Subset(), j, CosetKind::right))
        for (const WeylElement& u : parabolic_elements(rs, all)) {
          if ((u * w).length() != u.length() + w.length()) continue;
          const auto [x, v] = coset_decompose(u * w, j, Side::right);
          for (const WeylElement& vp : lower_set(v)) {
            const WeylElement up = lemma_3_10_lift(j, w, u, vp);
            EXPECT_TRUE(bruhat_leq(up, u));
            EXPECT_EQ(up * w, x * vp);
          }
        }
  }
}
