#include <gtest/gtest.h>

#include "test_util.hpp"
#include "wonderful/oracle.hpp"

using namespace wt;

TEST(BruhatDemazure, Leq) {
  const auto rs = datum("A2");
  for (const WeylElement& v : parabolic_elements(rs, Subset::full(2))) {
    EXPECT_TRUE(bruhat_leq(el(rs, ""), v));
    EXPECT_TRUE(bruhat_leq(v, el(rs, "121")));
  }
  EXPECT_TRUE(bruhat_leq(el(rs, "1"), el(rs, "12")));
  EXPECT_FALSE(bruhat_leq(el(rs, "1"), el(rs, "2")));
  EXPECT_TRUE(bruhat_leq(el(rs, "2"), el(rs, "121")));
}

TEST(BruhatDemazure, LowerSetAndCovers) {
  const auto rs = datum("A2");
  EXPECT_EQ(lower_set(el(rs, "")), elems(rs, {""}));
  EXPECT_EQ(lower_set(el(rs, "12")), elems(rs, {"", "1", "2", "12"}));
  EXPECT_EQ(lower_set(el(rs, "121")).size(), 6u);
  EXPECT_EQ(covers(el(rs, "121")), elems(rs, {"12", "21"}));
  for (const WeylElement& v : parabolic_elements(rs, Subset::full(2)))
    for (const WeylElement& c : covers(v)) EXPECT_EQ(c.length() + 1, v.length());
}

TEST(BruhatDemazure, MinShiftProduct) {
  const auto rs = datum("A2");
  EXPECT_EQ(min_shift_product(el(rs, ""), el(rs, "21")), el(rs, "21"));
  EXPECT_EQ(min_shift_product(el(rs, "2"), el(rs, "21")), el(rs, "1"));
  EXPECT_EQ(min_shift_product(el(rs, "1"), el(rs, "21")), el(rs, "21"));
}

TEST(BruhatDemazure, MaxShiftProduct) {
  const auto rs = datum("A2");
  EXPECT_EQ(max_shift_product(el(rs, ""), el(rs, "21")), el(rs, "21"));
  EXPECT_EQ(max_shift_product(el(rs, "1"), el(rs, "2")), el(rs, "12"));
  EXPECT_EQ(max_shift_product(el(rs, "2"), el(rs, "21")), el(rs, "21"));
}

TEST(BruhatDemazure, ShiftProductsMatchEnumeration) {
  for (const char* t : {"A2", "B2", "G2", "A3"}) {
    const auto rs = datum(t);
    const auto all = parabolic_elements(rs, Subset::full(rs->rank()));
    for (const WeylElement& u : all)
      for (const WeylElement& w : all) {
        const WeylElement lo = min_shift_product(u, w);
        const WeylElement hi = max_shift_product(u, w);
        EXPECT_EQ(lo.length(), w.length() - (lo * w.inverse()).length());
        EXPECT_EQ(hi.length(), w.length() + (hi * w.inverse()).length());
        for (const WeylElement& v : lower_set(u)) {
          EXPECT_TRUE(bruhat_leq(lo, v * w));
          EXPECT_TRUE(bruhat_leq(v * w, hi));
        }
      }
  }
}

TEST(BruhatDemazure, Cor34Witness) {
  const auto rs = datum("A2");
  const WeylElement u = el(rs, "1"), w = el(rs, "12");
  const WeylElement v = cor_3_4_witness(u, w, el(rs, "2"), 1);
  EXPECT_TRUE(bruhat_leq(v, u));
  EXPECT_TRUE(bruhat_leq(v * el(rs, "2"), u * w));
  EXPECT_TRUE(v.is_identity());
  EXPECT_TRUE(cor_3_4_witness(el(rs, ""), w, el(rs, "1"), 1).is_identity());
  const WeylElement same = cor_3_4_witness(u, w, w, 1);
  EXPECT_TRUE(bruhat_leq(same * w, u * w));
  try {
    cor_3_4_witness(u, el(rs, "1"), el(rs, "2"), 1);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "w' not ≤ w");
  }
}

TEST(BruhatDemazure, Cor34Exhaustive) {
  for (const char* t : {"A2", "B2"}) {
    const auto rs = datum(t);
    const auto all = parabolic_elements(rs, Subset::full(rs->rank()));
    for (const WeylElement& u : all)
      for (const WeylElement& w : all)
        for (const WeylElement& wp : lower_set(w)) {
          const WeylElement v1 = cor_3_4_witness(u, w, wp, 1);
          EXPECT_TRUE(bruhat_leq(v1, u) && bruhat_leq(v1 * wp, u * w));
          const WeylElement v2 = cor_3_4_witness(u, w, wp, 2);
          EXPECT_TRUE(bruhat_leq(v2, u) && bruhat_leq(u * wp, v2 * w));
        }
  }
}

TEST(BruhatDemazure, SubwordProduct) {
  // l(wu) = l(w) + l(u), w1 <= w, u1 <= u  =>  w1 u1 <= w u.
  for (const char* t : {"A2", "B2", "G2"}) {
    const auto rs = datum(t);
    const auto all = parabolic_elements(rs, Subset::full(2));
    for (const WeylElement& w : all)
      for (const WeylElement& u : all) {
        if ((w * u).length() != w.length() + u.length()) continue;
        for (const WeylElement& w1 : lower_set(w))
          for (const WeylElement& u1 : lower_set(u)) EXPECT_TRUE(bruhat_leq(w1 * u1, w * u));
      }
  }
}

TEST(BruhatDemazure, MatrixMatchesOracle) {
  const WeylGroup g(datum("A3"));
  const auto m = bruhat_matrix(g);
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b) EXPECT_EQ(m[a][b], oracle::brute_bruhat_leq(g[a], g[b]));
}
