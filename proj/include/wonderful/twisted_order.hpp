#pragma once

#include <optional>
#include <vector>

#include "wonderful/bruhat.hpp"
#include "wonderful/cosets.hpp"
#include "wonderful/error.hpp"
#include "wonderful/pieces.hpp"
#include "wonderful/twist.hpp"
#include "wonderful/weyl.hpp"

namespace wonderful {

/// {u^{-1} w delta(u) : u in W_J}.
inline ElementSet twisted_conjugates(const WeylElement& w, Subset j, const Automorphism& delta) {
  ElementSet out;
  for (const WeylElement& u : parabolic_elements(w.root_system(), j)) out.insert(u.inverse() * w * delta.apply(u));
  return out;
}

/// Elements reachable from w by one (J, delta)-cyclic shift, together with w.
///
/// Rule (1) conjugates by a first letter i in J (w -> s_i w s_{delta(i)}),
/// rule (2) by a last letter i in delta(J) (w -> s_{delta^{-1}(i)} w s_i);
/// results that change the length are dropped.  The first letters of the
/// reduced words of w are exactly its left descents and the last letters
/// its right descents, so no word enumeration is needed.
inline ElementSet cyclic_shift_neighbors(const WeylElement& w, Subset j, const Automorphism& delta) {
  ElementSet out{w};
  const Automorphism inv = delta.inverse();
  for (int i : (w.descents(Side::left) & j).members()) {
    WeylElement next = w.left_multiply(i).right_multiply(delta(i));
    if (next.length() == w.length()) out.insert(std::move(next));
  }
  for (int i : (w.descents(Side::right) & delta.apply(j)).members()) {
    WeylElement next = w.left_multiply(inv(i)).right_multiply(i);
    if (next.length() == w.length()) out.insert(std::move(next));
  }
  return out;
}

/// The ~_{J,delta} class of w.
inline ElementSet shift_class(const WeylElement& w, Subset j, const Automorphism& delta) {
  ElementSet seen{w};
  std::vector<WeylElement> queue{w};
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const WeylElement& next : cyclic_shift_neighbors(queue[head], j, delta))
      if (seen.insert(next).second) queue.push_back(next);
  return seen;
}

enum class TwistedMethod { conjugate, shift };

/// The upward-closed set {w' : w' >=_{J,delta} w} for a fixed piece (J, w),
/// stored through its generators: w' belongs iff it dominates one of them.
///
/// With TwistedMethod::conjugate the generators are the twisted conjugates
/// u^{-1} w delta(u) (u in W_J) of length l(w); longer conjugates never
/// matter because every conjugate dominates a length-l(w) one.  With
/// TwistedMethod::shift they are the ~_{J,delta} class of w.
class TwistedDominance {
 public:
  TwistedDominance(const PieceIndex& p, const Automorphism& delta, TwistedMethod method = TwistedMethod::conjugate)
      : piece_(p) {
    require_valid_piece(p, delta);
    ElementSet gens;
    if (method == TwistedMethod::shift) {
      gens = shift_class(p.w, p.J, delta);
    } else {
      for (const WeylElement& x : twisted_conjugates(p.w, p.J, delta))
        if (x.length() == p.w.length()) gens.insert(x);
    }
    generators_.assign(gens.begin(), gens.end());
  }

  bool contains(const WeylElement& wprime) const {
    for (const WeylElement& g : generators_)
      if (bruhat_leq(g, wprime)) return true;
    return false;
  }

  const std::vector<WeylElement>& generators() const { return generators_; }
  const PieceIndex& piece() const { return piece_; }

 private:
  PieceIndex piece_;
  std::vector<WeylElement> generators_;
};

/// w' >=_{J,delta} w for p = (J, w).
inline bool geq_twisted(const WeylElement& wprime, const PieceIndex& p, const Automorphism& delta,
                        TwistedMethod method = TwistedMethod::conjugate) {
  return TwistedDominance(p, delta, method).contains(wprime);
}

/// (J1, w1) <=_delta (J2, w2): J1 subset of J2 and w1 >=_{J2,delta} w2.
inline bool leq_pieces(const PieceIndex& p1, const PieceIndex& p2, const Automorphism& delta) {
  require_valid_piece(p1, delta);
  if (!p1.J.is_subset_of(p2.J)) return false;
  return geq_twisted(p1.w, p2, delta);
}

struct Lemma311Witness {
  WeylElement x;   // in W^{delta(K)}, x >= w delta(u)
  WeylElement u;   // in W_J
  WeylElement u1;  // in W_K, w' = u1^{-1} u^{-1} x delta(u1)
};

/// Witness (x, u, u1) for (K, w') lying below (J, w).
///
/// Takes v in W_J minimal (shortest, then first in reduced-word order) with
/// v w' >= w delta(v), factors v w' = x delta(v') with x in W^{delta(K)} and
/// v' in W_K, and returns (x, v v'^{-1}, v').  Returns nullopt when no such v
/// exists.  The returned triple is not re-checked here; callers that want a
/// proof check verify x >= w delta(u) themselves.
inline std::optional<Lemma311Witness> lemma_3_11_witness(const PieceIndex& p, Subset k, const WeylElement& wprime,
                                                         const Automorphism& delta) {
  require_valid_piece(p, delta);
  if (!k.is_subset_of(p.J)) throw Error("K is not a subset of J");
  if (!is_min_right(wprime, delta.apply(k))) throw Error("w' not in W^{delta(K)}");
  for (const WeylElement& v : sorted_shortlex(parabolic_elements(p.w.root_system(), p.J))) {
    if (!bruhat_leq(p.w * delta.apply(v), v * wprime)) continue;
    auto [x, dvprime] = coset_decompose(v * wprime, delta.apply(k), Side::right);
    WeylElement vprime = delta.inverse().apply(dvprime);
    return Lemma311Witness{x, v * vprime.inverse(), vprime};
  }
  return std::nullopt;
}

}  // namespace wonderful
