#pragma once

#include <algorithm>
#include <vector>

#include "wonderful/cosets.hpp"
#include "wonderful/error.hpp"
#include "wonderful/subset.hpp"
#include "wonderful/twist.hpp"
#include "wonderful/weyl.hpp"

namespace wonderful {

/// Index (J, w) of a G-stable piece: J a subset of I and w in W^{delta(J)}.
struct PieceIndex {
  Subset J;
  WeylElement w;

  friend bool operator==(const PieceIndex&, const PieceIndex&) = default;
  friend auto operator<=>(const PieceIndex& a, const PieceIndex& b) {
    if (auto c = a.J <=> b.J; c != 0) return c;
    return a.w <=> b.w;
  }
};

inline bool is_valid_piece(const PieceIndex& p, const Automorphism& delta) {
  return is_min_right(p.w, delta.apply(p.J));
}

inline void require_valid_piece(const PieceIndex& p, const Automorphism& delta) {
  if (!is_valid_piece(p, delta)) throw Error("w is not minimal in its coset");
}

/// Listing order: J as in subset_listing_less, then w by (length, word).
inline bool piece_listing_less(const PieceIndex& a, const PieceIndex& b) {
  if (a.J != b.J) return subset_listing_less(a.J, b.J);
  return shortlex_less(a.w, b.w);
}

inline std::vector<PieceIndex> sorted_pieces(std::vector<PieceIndex> pieces) {
  std::vector<std::pair<std::pair<std::pair<int, std::vector<int>>, std::pair<int, Word>>, std::size_t>> keys;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const Subset j = pieces[k].J;
    keys.push_back({{{-j.size(), j.members()}, shortlex_key(pieces[k].w)}, k});
  }
  std::sort(keys.begin(), keys.end());
  std::vector<PieceIndex> out;
  for (const auto& key : keys) out.push_back(pieces[key.second]);
  return out;
}

/// The index set I_delta = {(J, w) : J subset of I, w in W^{delta(J)}}.
inline std::vector<PieceIndex> enumerate_pieces(const RootSystemPtr& rs, const Automorphism& delta) {
  std::vector<PieceIndex> out;
  const std::vector<WeylElement> all = parabolic_elements(rs, Subset::full(rs->rank()));
  for (Subset j : subsets_of(Subset::full(rs->rank()))) {
    const Subset dj = delta.apply(j);
    for (const WeylElement& w : all)
      if (is_min_right(w, dj)) out.push_back({j, w});
  }
  return sorted_pieces(std::move(out));
}

/// Ad(w) delta(K) = K: w(alpha_{delta(k)}) is a simple root labelled in K
/// for every k in K (a bijection onto K since the sizes agree).
inline bool is_twisted_stable(const WeylElement& w, Subset k, const Automorphism& delta) {
  auto image = simple_image(w, delta.apply(k));
  return image && *image == k;
}

/// J_0 = J and J_{k+1} = {k in J_k : w(alpha_{delta(k)}) in Phi_{J_k}},
/// stopping at the first repeat; the last entry is the fixed point.
inline std::vector<Subset> j_sequence(Subset j, const WeylElement& w, const Automorphism& delta) {
  if (!is_min_right(w, delta.apply(j))) throw Error("w not minimal for δ(J)");
  std::vector<Subset> seq{j};
  while (true) {
    const Subset cur = seq.back();
    Subset next;
    for (int k : cur.members())
      if (w.roots().in_phi(w(delta(k)), cur)) next = next.with(k);
    if (next == cur) break;
    seq.push_back(next);
  }
  return seq;
}

/// J_infinity = max{K subset J : Ad(w) delta(K) = K}, as the limit of j_sequence.
inline Subset j_infinity(Subset j, const WeylElement& w, const Automorphism& delta) {
  return j_sequence(j, w, delta).back();
}

/// y_K = y w_0^{delta(J)} w_0^{delta(K)} with ambient y = w_0 w_0^{delta(J)}.
inline WeylElement boundary_index(const RootSystemPtr& rs, Subset j, Subset k, const Automorphism& delta) {
  if (!k.is_subset_of(j)) throw Error("not a boundary subset");
  const WeylElement w0 = longest_element(rs, Subset::full(rs->rank()));
  const WeylElement w0_dj = longest_element(rs, delta.apply(j));
  const WeylElement w0_dk = longest_element(rs, delta.apply(k));
  const WeylElement y = w0 * w0_dj;
  return y * w0_dj * w0_dk;
}

/// Ambient y = w_0 w_0^{delta(J)} of the piece's stratum.
inline WeylElement ambient_y(const RootSystemPtr& rs, Subset j, const Automorphism& delta) {
  return longest_element(rs, Subset::full(rs->rank())) * longest_element(rs, delta.apply(j));
}

/// Dimension of the piece Z^w_{J,delta}, read off its fibration over the
/// partial flag variety of J_inf:
///
///   (|Phi+| - |Phi+_{J_inf}|) + l(w_0^{J_inf} w y^{-1} w_0^{J'}) + |Phi_{J_inf}| + |J|
///
/// where y = w_0 w_0^{delta(J)} and J' = Ad(y) delta(J).  This formula is
/// derived, not quoted; it reproduces dim G for (I, e) and the orbit
/// dimensions 3, 2, 1 of the rank-one compactification.
inline int piece_dimension(const PieceIndex& p, const Automorphism& delta) {
  require_valid_piece(p, delta);
  const RootSystemPtr& rs = p.w.root_system();
  const Subset jinf = j_infinity(p.J, p.w, delta);
  const WeylElement y = ambient_y(rs, p.J, delta);
  auto jprime = simple_image(y, delta.apply(p.J));
  if (!jprime) throw Error("internal: Ad(y) delta(J) is not a set of simple roots");
  const WeylElement middle = longest_element(rs, jinf) * p.w * y.inverse() * longest_element(rs, *jprime);
  const int flag = rs->num_positive() - rs->num_positive_in(jinf);
  const int levi = 2 * rs->num_positive_in(jinf) + p.J.size();
  return flag + middle.length() + levi;
}

}  // namespace wonderful
