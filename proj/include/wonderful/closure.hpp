#pragma once

#include <map>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "wonderful/bruhat.hpp"
#include "wonderful/cosets.hpp"
#include "wonderful/error.hpp"
#include "wonderful/pieces.hpp"
#include "wonderful/twist.hpp"
#include "wonderful/twisted_order.hpp"
#include "wonderful/weyl.hpp"

namespace wonderful {

/// Label [J, x, w] of the B x B-orbit (B x B)(x, w) . h_J, with x in W^J.
struct BxBOrbit {
  Subset J;
  WeylElement x;
  WeylElement w;

  friend bool operator==(const BxBOrbit&, const BxBOrbit&) = default;
};

/// Closure of the piece p: {q in I_delta : q <=_delta p}, in listing order.
inline std::vector<PieceIndex> piece_closure(const PieceIndex& p, const Automorphism& delta) {
  require_valid_piece(p, delta);
  const TwistedDominance above(p, delta);
  std::vector<PieceIndex> out;
  for (const PieceIndex& q : enumerate_pieces(p.w.root_system(), delta))
    if (q.J.is_subset_of(p.J) && above.contains(q.w)) out.push_back(q);
  return out;
}

/// [K, x', w'] lies in the closure of [J, x, w]: K subset of J and there are
/// u in W_K, v in W_J cap W^K with x v u^{-1} <= x', w' u <= w v and
/// l(wv) = l(w) + l(v).  Exhaustive search over (u, v).
inline bool springer_closure_leq(const BxBOrbit& a, const BxBOrbit& b) {
  if (!is_min_right(a.x, a.J) || !is_min_right(b.x, b.J)) throw Error("invalid orbit label: x not in W^J");
  if (!b.J.is_subset_of(a.J)) return false;
  const RootSystemPtr& rs = a.x.root_system();
  const std::vector<WeylElement> wk = parabolic_elements(rs, b.J);
  for (const WeylElement& v : parabolic_elements(rs, a.J)) {
    if (!is_min_right(v, b.J)) continue;
    const WeylElement wv = a.w * v;
    if (wv.length() != a.w.length() + v.length()) continue;
    const WeylElement xv = a.x * v;
    for (const WeylElement& u : wk)
      if (bruhat_leq(xv * u.inverse(), b.x) && bruhat_leq(b.w * u, wv)) return true;
  }
  return false;
}

/// Orbit triple (K, x, u) standing for [K, x, u]_delta.
struct OrbitTriple {
  Subset K;
  WeylElement x;
  WeylElement u;

  friend bool operator==(const OrbitTriple&, const OrbitTriple&) = default;
  friend auto operator<=>(const OrbitTriple& a, const OrbitTriple& b) {
    if (auto c = a.K <=> b.K; c != 0) return c;
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.u <=> b.u;
  }
};

/// B x B-orbits in the closure of [J, w, 1]_delta: triples (K, x, u) with
/// K subset of J, x in W^{delta(K)}, u in W_J and x >= w delta(u).
inline std::vector<OrbitTriple> twisted_orbit_closure(const PieceIndex& p, const Automorphism& delta) {
  require_valid_piece(p, delta);
  const RootSystemPtr& rs = p.w.root_system();
  const std::vector<WeylElement> all = sorted_shortlex(parabolic_elements(rs, Subset::full(rs->rank())));
  const std::vector<WeylElement> wj = sorted_shortlex(parabolic_elements(rs, p.J));
  std::vector<OrbitTriple> out;
  for (Subset k : subsets_of(p.J)) {
    const Subset dk = delta.apply(k);
    for (const WeylElement& x : all) {
      if (!is_min_right(x, dk)) continue;
      for (const WeylElement& u : wj)
        if (bruhat_leq(p.w * delta.apply(u), x)) out.push_back({k, x, u});
    }
  }
  return out;
}

/// Closure of the piece (J, w) inside the single stratum Z_{J,1,delta}:
/// {w' in W^{delta(J)} : w >=_{J,delta} w'}.
///
/// Note the direction: here w' sits *below* w in the twisted order, the
/// reverse of piece_closure, where members dominate w.
inline std::vector<WeylElement> fiber_closure(const PieceIndex& p, const Automorphism& delta) {
  require_valid_piece(p, delta);
  const RootSystemPtr& rs = p.w.root_system();
  const Subset dj = delta.apply(p.J);
  std::vector<WeylElement> out;
  for (const WeylElement& wprime : sorted_shortlex(parabolic_elements(rs, Subset::full(rs->rank())))) {
    if (!is_min_right(wprime, dj)) continue;
    if (geq_twisted(p.w, {p.J, wprime}, delta)) out.push_back(wprime);
  }
  return out;
}

struct HasseEdge {
  std::size_t from;  // index into the piece list; from <_delta to
  std::size_t to;
  friend bool operator==(const HasseEdge&, const HasseEdge&) = default;
};

/// Covering relations of <=_delta among `pieces` (transitive reduction of
/// the restricted order).  Edges point upward: from the smaller piece.
inline std::vector<HasseEdge> hasse_diagram(const std::vector<PieceIndex>& pieces, const Automorphism& delta) {
  const std::size_t n = pieces.size();
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  for (std::size_t b = 0; b < n; ++b) {
    const TwistedDominance above(pieces[b], delta);
    for (std::size_t a = 0; a < n; ++a)
      if (a != b && pieces[a].J.is_subset_of(pieces[b].J) && above.contains(pieces[a].w)) less[a][b] = true;
  }
  std::vector<HasseEdge> edges;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!less[a][b]) continue;
      bool covered = true;
      for (std::size_t c = 0; c < n && covered; ++c)
        if (less[a][c] && less[c][b]) covered = false;
      if (covered) edges.push_back({a, b});
    }
  return edges;
}

}  // namespace wonderful
