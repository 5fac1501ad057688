#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace wt;

TEST(WeylCore, FromWord) {
  const auto rs = datum("A2");
  EXPECT_TRUE(el(rs, "").is_identity());
  EXPECT_TRUE(el(rs, "11").is_identity());
  EXPECT_EQ(el(rs, "121"), el(rs, "212"));
  EXPECT_THROW(from_word(rs, {2}), Error);
  try {
    from_word(rs, {0, -1});
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "invalid generator");
  }
}

TEST(WeylCore, GroupOperations) {
  const auto rs = datum("A2");
  EXPECT_EQ(length(el(rs, "121")), 3);
  EXPECT_EQ(length(el(rs, "")), 0);
  EXPECT_EQ(act_on_root(el(rs, "1"), rs->simple_root(1)).coords, (std::vector<int>{1, 1}));
  EXPECT_EQ(invert(el(rs, "12")), el(rs, "21"));
  EXPECT_EQ(compose(el(rs, "1"), el(rs, "2")), el(rs, "12"));
}

TEST(WeylCore, MixedParents) {
  const auto a = datum("A2");
  const auto b = datum("B2");
  EXPECT_EQ(el(a, "1") * el(datum("A2"), "2"), el(a, "12"));
  try {
    compose(el(a, "1"), el(b, "1"));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "incompatible root systems");
  }
}

TEST(WeylCore, Descents) {
  const auto rs = datum("A2");
  EXPECT_EQ(descents(el(rs, ""), Side::left), Subset());
  EXPECT_EQ(descents(el(rs, ""), Side::right), Subset());
  EXPECT_EQ(descents(el(rs, "12"), Side::right), labels({2}));
  EXPECT_EQ(descents(el(rs, "12"), Side::left), labels({1}));
  EXPECT_EQ(descents(el(rs, "121"), Side::left), labels({1, 2}));
  EXPECT_EQ(descents(el(rs, "121"), Side::right), labels({1, 2}));
}

TEST(WeylCore, ReducedWord) {
  EXPECT_EQ(reduced_word(el(datum("A2"), "212")), (Word{0, 1, 0}));
  EXPECT_TRUE(reduced_word(el(datum("A2"), "")).empty());
  const auto b2 = datum("B2");
  EXPECT_EQ(reduced_word(longest_element(b2, Subset::full(2))).size(), 4u);
}

TEST(WeylCore, AllReducedWords) {
  const auto a2 = datum("A2");
  EXPECT_EQ(all_reduced_words(el(a2, "121")), (std::set<Word>{{0, 1, 0}, {1, 0, 1}}));
  EXPECT_EQ(all_reduced_words(el(a2, "")).size(), 1u);
  EXPECT_EQ(all_reduced_words(el(a2, "2")).size(), 1u);
  const auto a3 = datum("A3");
  EXPECT_EQ(all_reduced_words(longest_element(a3, Subset::full(3))).size(), 16u);
}

TEST(WeylCore, LongestElement) {
  const auto rs = datum("A2");
  EXPECT_TRUE(longest_element(rs, Subset()).is_identity());
  EXPECT_EQ(longest_element(rs, labels({1})), el(rs, "1"));
  EXPECT_EQ(longest_element(rs, labels({1, 2})), el(rs, "121"));
  EXPECT_EQ(length(longest_element(rs, labels({1, 2}))), rs->num_positive());
}

TEST(WeylCore, GroupSizes) {
  EXPECT_EQ(WeylGroup(datum("A1")).size(), 2);
  EXPECT_EQ(WeylGroup(datum("A2")).size(), 6);
  EXPECT_EQ(WeylGroup(datum("B2")).size(), 8);
  EXPECT_EQ(WeylGroup(datum("G2")).size(), 12);
  EXPECT_EQ(WeylGroup(datum("A3")).size(), 24);
  EXPECT_EQ(WeylGroup(datum("A1xA1")).size(), 4);
}

TEST(WeylCore, LengthProperties) {
  for (const char* t : {"A2", "B2", "G2", "A3"}) {
    const WeylGroup g(datum(t));
    for (const WeylElement& u : g.elements()) {
      EXPECT_EQ(from_word(g.root_system(), reduced_word(u)), u);
      EXPECT_EQ(static_cast<int>(reduced_word(u).size()), u.length());
      for (const WeylElement& v : g.elements()) {
        const int l = (u * v).length();
        EXPECT_LE(l, u.length() + v.length());
        EXPECT_EQ((l - u.length() - v.length()) % 2, 0);
      }
    }
  }
}

TEST(WeylCore, LongestElementNormalizesReflections) {
  const auto rs = datum("A3");
  for (Subset j : subsets_of(Subset::full(3))) {
    const WeylElement w0 = longest_element(rs, j);
    EXPECT_TRUE((w0 * w0).is_identity());
    std::set<WeylElement> refl, conj;
    for (int i : j.members()) {
      refl.insert(WeylElement::simple(rs, i));
      conj.insert(w0 * WeylElement::simple(rs, i) * w0);
    }
    EXPECT_EQ(refl, conj);
    for (int k = 0; k < rs->num_positive(); ++k)
      if (rs->in_phi(k, j)) { EXPECT_FALSE(rs->is_positive(w0(k))); }
  }
}

TEST(WeylCore, ShortlexOrder) {
  const auto rs = datum("A2");
  const auto sorted = sorted_shortlex(parabolic_elements(rs, Subset::full(2)));
  std::vector<std::string> words;
  for (const auto& w : sorted) words.push_back(format_word(w));
  EXPECT_EQ(words, (std::vector<std::string>{"e", "1", "2", "12", "21", "121"}));
}
