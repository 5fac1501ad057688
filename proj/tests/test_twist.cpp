#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace wt;

TEST(Twist, Validate) {
  const auto a2 = datum("A2");
  EXPECT_TRUE(Automorphism::validate({0, 1}, a2).is_identity());
  EXPECT_FALSE(Automorphism::validate({1, 0}, a2).is_identity());
  try {
    Automorphism::validate({1, 0}, datum("B2"));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "not a diagram automorphism");
  }
  EXPECT_THROW(Automorphism::validate({0, 0}, a2), Error);
  EXPECT_THROW(Automorphism::validate({0}, a2), Error);
}

TEST(Twist, Apply) {
  const auto a2 = datum("A2");
  const Automorphism sw = flip(a2);
  EXPECT_EQ(apply_element(id(a2), el(a2, "12")), el(a2, "12"));
  EXPECT_EQ(apply_element(sw, el(a2, "12")), el(a2, "21"));
  EXPECT_EQ(apply_element(sw, el(a2, "121")), el(a2, "121"));
  EXPECT_EQ(apply_subset(sw, labels({1})), labels({2}));
  EXPECT_EQ(apply_subset(id(a2), labels({1})), labels({1}));
  EXPECT_EQ(sw.inverse(), sw);
}

TEST(Twist, FactorSwap) {
  const auto rs = datum("A1xA1");
  const Automorphism sw = flip(rs);
  EXPECT_EQ(apply_element(sw, el(rs, "1")), el(rs, "2"));
}

TEST(Twist, PreservesLengthAndOrder) {
  for (const char* t : {"A2", "A3", "A1xA1"}) {
    const auto rs = datum(t);
    const Automorphism d = flip(rs);
    const auto all = parabolic_elements(rs, Subset::full(rs->rank()));
    for (const WeylElement& u : all) {
      EXPECT_EQ(d.apply(u).length(), u.length());
      EXPECT_EQ(from_word(rs, [&] {
                  Word w = reduced_word(u);
                  for (int& i : w) i = d(i);
                  return w;
                }()),
                d.apply(u));
      for (const WeylElement& v : all) {
        EXPECT_EQ(bruhat_leq(u, v), bruhat_leq(d.apply(u), d.apply(v)));
        EXPECT_EQ(d.apply(u * v), d.apply(u) * d.apply(v));
      }
    }
  }
}

TEST(Twist, MapsCosetReps) {
  for (const char* t : {"A2", "A3"}) {
    const auto rs = datum(t);
    const Automorphism d = flip(rs);
    for (Subset j : subsets_of(Subset::full(rs->rank()))) {
      std::set<WeylElement> image;
      for (const WeylElement& w : min_coset_reps(rs, Subset(), j, CosetKind::right)) image.insert(d.apply(w));
      EXPECT_EQ(image, as_set(min_coset_reps(rs, Subset(), d.apply(j), CosetKind::right)));
    }
  }
}
