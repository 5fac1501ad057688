#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wonderful/error.hpp"
#include "wonderful/subset.hpp"
#include "wonderful/weyl.hpp"

namespace wonderful {

/// w in W^J: w(alpha_j) > 0 for every j in J.
inline bool is_min_right(const WeylElement& w, Subset j) { return (w.descents(Side::right) & j).empty(); }

/// w in ^J W.
inline bool is_min_left(const WeylElement& w, Subset j) { return (w.descents(Side::left) & j).empty(); }

/// w in ^J W^K.
inline bool is_min_double(const WeylElement& w, Subset left, Subset right) {
  return is_min_left(w, left) && is_min_right(w, right);
}

/// supp(w): the generators occurring in a reduced word of w.
inline Subset support(const WeylElement& w) { return Subset::from_indices(reduced_word(w)); }

inline bool in_parabolic(const WeylElement& w, Subset j) { return support(w).is_subset_of(j); }

/// The set {label of w(alpha_k) : k in K} when w maps every alpha_k (k in K)
/// to a simple root, otherwise nullopt.
inline std::optional<Subset> simple_image(const WeylElement& w, Subset k) {
  Subset out;
  for (int i : k.members()) {
    int label = w.roots().simple_label(w(i));
    if (label < 0) return std::nullopt;
    out = out.with(label);
  }
  return out;
}

/// K = J' cap Ad(w)J: those k in J' with w^{-1}(alpha_k) = alpha_j for some j in J.
inline Subset conjugate_intersection(const WeylElement& w, Subset jprime, Subset j) {
  WeylElement winv = w.inverse();
  Subset k;
  for (int i : jprime.members()) {
    int label = w.roots().simple_label(winv(i));
    if (label >= 0 && j.contains(label)) k = k.with(i);
  }
  return k;
}

/// Length-additive factorization through a parabolic subgroup.
///
/// Side::right returns (x, v) with w = x*v, x in W^J, v in W_J.
/// Side::left returns (v, x) with w = v*x, x in ^J W.
inline std::pair<WeylElement, WeylElement> coset_decompose(const WeylElement& w, Subset j, Side side) {
  if (side == Side::left) {
    auto [x, v] = coset_decompose(w.inverse(), j, Side::right);
    return {v.inverse(), x.inverse()};
  }
  WeylElement x = w;
  for (bool shrunk = true; shrunk;) {
    shrunk = false;
    for (int i : j.members()) {
      if (x.right_descent(i)) {
        x = x.right_multiply(i);
        shrunk = true;
      }
    }
  }
  return {x, x.inverse() * w};
}

enum class CosetKind { right, left, both };

/// W^K (right), ^J W (left) or ^J W^K (both), in shortlex order.
inline std::vector<WeylElement> min_coset_reps(const RootSystemPtr& rs, Subset j, Subset k, CosetKind kind) {
  std::vector<WeylElement> out;
  for (const WeylElement& w : parabolic_elements(rs, Subset::full(rs->rank()))) {
    bool keep = true;
    if (kind != CosetKind::left) keep = keep && is_min_right(w, k);
    if (kind != CosetKind::right) keep = keep && is_min_left(w, j);
    if (keep) out.push_back(w);
  }
  return sorted_shortlex(std::move(out));
}

/// Lemma: for w in ^{J'}W^J and u in W_{J'}, with K = J' cap Ad(w)J, writes
/// u*w = v*w*u' with v in W_{J'} cap W^K and u' in W_{Ad(w^{-1})K}.
///
/// Follows the inductive construction on l(u): peel the smallest left
/// descent s_i off u, factor the rest, and when s_i*v1*w leaves W^J trade
/// s_i*v1 = v1*s_k and s_k*w = w*s_l.
inline std::pair<WeylElement, WeylElement> lemma_3_6_factor(const WeylElement& w, const WeylElement& u,
                                                           Subset jprime, Subset j) {
  if (!is_min_double(w, jprime, j)) throw Error("w not a double-coset minimal representative");
  if (!in_parabolic(u, jprime)) throw Error("u not in W_{J'}");
  const Subset k = conjugate_intersection(w, jprime, j);
  const RootSystemPtr& rs = w.root_system();
  const WeylElement winv = w.inverse();

  std::function<std::pair<WeylElement, WeylElement>(const WeylElement&)> rec =
      [&](const WeylElement& x) -> std::pair<WeylElement, WeylElement> {
    if (x.is_identity()) return {x, x};
    int i = 0;
    while (!x.left_descent(i)) ++i;
    auto [v1, u1] = rec(x.left_multiply(i));
    WeylElement candidate = v1.left_multiply(i);
    if (is_min_right(candidate * w, j)) return {candidate, u1};
    // s_i v1 = v1 s_k for the unique k with v1^{-1}(alpha_i) = alpha_k.
    int kk = rs->simple_label(v1.inverse()(i));
    if (kk < 0 || !k.contains(kk)) throw Error("internal: expected s_i v1 = v1 s_k with k in K");
    int l = rs->simple_label(winv(kk));
    if (l < 0) throw Error("internal: expected s_k w = w s_l");
    return {v1, u1.left_multiply(l)};
  };
  return rec(u);
}

/// Lemma: for w in W^J and u with l(uw) = l(u) + l(w), uw = x*v (x in W^J,
/// v in W_J), and v' <= v, returns u' <= u with u'*w = x*v'.
///
/// `bruhat` is the order test used for the v' <= v branch.
template <typename BruhatLeq>
WeylElement lemma_3_10_lift_with(Subset j, const WeylElement& w, const WeylElement& u, const WeylElement& vprime,
                                 BruhatLeq&& bruhat) {
  if (!is_min_right(w, j)) throw Error("w not in W^J");
  if ((u * w).length() != u.length() + w.length()) throw Error("l(uw) != l(u) + l(w)");
  auto [x, v] = coset_decompose(u * w, j, Side::right);
  if (!bruhat(vprime, v)) throw Error("v' not ≤ v");

  std::function<WeylElement(const WeylElement&, const WeylElement&)> rec =
      [&](const WeylElement& uu, const WeylElement& target) -> WeylElement {
    if (uu.is_identity()) return uu;
    int i = 0;
    while (!uu.left_descent(i)) ++i;
    WeylElement u1 = uu.left_multiply(i);
    auto [x1, v1] = coset_decompose(u1 * w, j, Side::right);
    WeylElement six1 = x1.left_multiply(i);
    if (is_min_right(six1, j)) {
      // uw = (s_i x1) v1: lift target through u1 and put s_i back in front.
      return rec(u1, target).left_multiply(i);
    }
    // s_i x1 = x1 s_j, so v = s_j v1 > v1.
    if (bruhat(target, v1)) return rec(u1, target);
    int jj = w.roots().simple_label(x1.inverse()(i));
    return rec(u1, target.left_multiply(jj)).left_multiply(i);
  };
  return rec(u, vprime);
}

}  // namespace wonderful
