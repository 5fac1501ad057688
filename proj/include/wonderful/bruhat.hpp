#pragma once

#include <optional>
#include <vector>

#include "wonderful/cosets.hpp"
#include "wonderful/error.hpp"
#include "wonderful/weyl.hpp"

namespace wonderful {

/// u <= v in the Bruhat order.
///
/// Descent recursion: if s_i v < v then u <= v iff min(u, s_i u) <= s_i v.
inline bool bruhat_leq(const WeylElement& u, const WeylElement& v) {
  u.check_compatible(v);
  WeylElement x = u;
  WeylElement y = v;
  while (true) {
    if (x.length() > y.length()) return false;
    if (x.is_identity()) return true;
    if (x.length() == y.length()) return x == y;
    int i = 0;
    while (!y.left_descent(i)) ++i;
    y = y.left_multiply(i);
    if (x.left_descent(i)) x = x.left_multiply(i);
  }
}

/// {v : v <= u}.  Uses L(s_i u') = L(u') cup s_i L(u') for a left descent s_i.
inline ElementSet lower_set(const WeylElement& u) {
  Word word = reduced_word(u);
  ElementSet out{WeylElement::identity(u.root_system())};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    ElementSet next = out;
    for (const WeylElement& x : out) next.insert(x.left_multiply(*it));
    out = std::move(next);
  }
  return out;
}

/// Elements covered by v in the Bruhat order.
inline ElementSet covers(const WeylElement& v) {
  ElementSet out;
  for (const WeylElement& x : lower_set(v))
    if (x.length() + 1 == v.length()) out.insert(x);
  return out;
}

/// Unique Bruhat-minimum of {x w : x <= u}.
///
/// Recursion on a left descent s_i of u (the smallest one): with
/// y1 = min(s_i u, w), the answer is s_i y1 if that is shorter, else y1.
/// The result satisfies l(y) = l(w) - l(y w^{-1}).
inline WeylElement min_shift_product(const WeylElement& u, const WeylElement& w) {
  u.check_compatible(w);
  if (u.is_identity()) return w;
  int i = 0;
  while (!u.left_descent(i)) ++i;
  WeylElement y1 = min_shift_product(u.left_multiply(i), w);
  return y1.left_descent(i) ? y1.left_multiply(i) : y1;
}

/// Unique Bruhat-maximum of {x w : x <= u}; dual of min_shift_product.
inline WeylElement max_shift_product(const WeylElement& u, const WeylElement& w) {
  u.check_compatible(w);
  if (u.is_identity()) return w;
  int i = 0;
  while (!u.left_descent(i)) ++i;
  WeylElement y1 = max_shift_product(u.left_multiply(i), w);
  return y1.left_descent(i) ? y1 : y1.left_multiply(i);
}

/// Existence witnesses for w' <= w:
///   part 1: v <= u with v w' <= u w;
///   part 2: v' <= u with u w' <= v' w.
/// Searched over lower_set(u) in shortlex order.
inline WeylElement cor_3_4_witness(const WeylElement& u, const WeylElement& w, const WeylElement& wprime,
                                   int part) {
  if (part != 1 && part != 2) throw Error("part must be 1 or 2");
  if (!bruhat_leq(wprime, w)) throw Error("w' not ≤ w");
  for (const WeylElement& v : sorted_shortlex(lower_set(u))) {
    bool ok = part == 1 ? bruhat_leq(v * wprime, u * w) : bruhat_leq(u * wprime, v * w);
    if (ok) return v;
  }
  throw Error("no witness found");
}

/// See lemma_3_10_lift_with; uses the Bruhat order above.
inline WeylElement lemma_3_10_lift(Subset j, const WeylElement& w, const WeylElement& u,
                                   const WeylElement& vprime) {
  return lemma_3_10_lift_with(j, w, u, vprime,
                              [](const WeylElement& a, const WeylElement& b) { return bruhat_leq(a, b); });
}

/// The Bruhat relation on a whole group as a dense matrix, indexed like
/// WeylGroup::elements(): order[a][b] is true iff element a <= element b.
inline std::vector<std::vector<bool>> bruhat_matrix(const WeylGroup& group) {
  const int n = group.size();
  std::vector<std::vector<bool>> order(n, std::vector<bool>(n, false));
  for (int b = 0; b < n; ++b)
    for (const WeylElement& x : lower_set(group[b])) order[group.index_of(x)][b] = true;
  return order;
}

}  // namespace wonderful
