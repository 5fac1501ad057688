#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "wonderful/bruhat.hpp"
#include "wonderful/closure.hpp"
#include "wonderful/error.hpp"
#include "wonderful/pieces.hpp"
#include "wonderful/twist.hpp"
#include "wonderful/twisted_order.hpp"
#include "wonderful/weyl.hpp"

namespace wonderful {

/// I_1(J, w, delta) = max{K subset J : w in W^{delta(K)}} = {k in J : w(alpha_{delta(k)}) > 0}.
inline Subset i1(Subset j, const WeylElement& w, const Automorphism& delta) {
  Subset out;
  for (int k : j.members())
    if (w.roots().is_positive(w(delta(k)))) out = out.with(k);
  return out;
}

/// I_2(J, w, delta) = max{K subset J : w Phi_{delta(K)} = Phi_K}, by
/// elimination: K_0 = J, K_{n+1} = {k in K_n : w(alpha_{delta(k)}) in Phi_{K_n}}.
inline Subset i2(Subset j, const WeylElement& w, const Automorphism& delta) {
  Subset cur = j;
  while (true) {
    Subset next;
    for (int k : cur.members())
      if (w.roots().in_phi(w(delta(k)), cur)) next = next.with(k);
    if (next == cur) return cur;
    cur = next;
  }
}

/// w Phi_{delta(K)} = Phi_K as root sets.
inline bool maps_subsystem(const WeylElement& w, Subset k, const Automorphism& delta) {
  const RootSystem& rs = w.roots();
  const Subset dk = delta.apply(k);
  std::vector<int> image, target;
  for (int r = 0; r < rs.size(); ++r) {
    if (rs.in_phi(r, dk)) image.push_back(w(r));
    if (rs.in_phi(r, k)) target.push_back(r);
  }
  std::sort(image.begin(), image.end());
  return image == target;
}

/// I_2 as the union of the (union-closed) family of all K subset J with
/// w Phi_{delta(K)} = Phi_K.  Exponential in |J|.
inline Subset i2_brute(Subset j, const WeylElement& w, const Automorphism& delta) {
  Subset out;
  for (Subset k : subsets_of(j))
    if (maps_subsystem(w, k, delta)) out = out | k;
  return out;
}

/// W_delta(J, w) = {u : u >=_{J,delta} w, I_2(J,u,delta) subset I_1(J,u,delta)}, shortlex order.
inline std::vector<WeylElement> w_set(const PieceIndex& p, const Automorphism& delta) {
  const TwistedDominance above(p, delta);
  const RootSystemPtr& rs = p.w.root_system();
  std::vector<WeylElement> out;
  for (const WeylElement& u : sorted_shortlex(parabolic_elements(rs, Subset::full(rs->rank()))))
    if (above.contains(u) && i2(p.J, u, delta).is_subset_of(i1(p.J, u, delta))) out.push_back(u);
  return out;
}

struct CellGroup {
  WeylElement u;
  std::vector<PieceIndex> members;  // listing order
  Subset i1;
  Subset i2;
};

/// The pieces of X_u: (K, u v) for v in W_{delta(I_2(J,u))} and K subset I_1(J, u v).
inline std::vector<PieceIndex> x_members(Subset j, const WeylElement& u, const Automorphism& delta) {
  std::vector<PieceIndex> out;
  for (const WeylElement& v : parabolic_elements(u.root_system(), delta.apply(i2(j, u, delta)))) {
    const WeylElement uv = u * v;
    for (Subset k : subsets_of(i1(j, uv, delta))) out.push_back({k, uv});
  }
  return sorted_pieces(std::move(out));
}

/// One group per u in w_set(p), in the order of w_set.
inline std::vector<CellGroup> x_grouping(const PieceIndex& p, const Automorphism& delta) {
  std::vector<CellGroup> out;
  for (const WeylElement& u : w_set(p, delta))
    out.push_back({u, x_members(p.J, u, delta), i1(p.J, u, delta), i2(p.J, u, delta)});
  return out;
}

/// One-step relations of <=' on w_set(p): step[a] lists the b with an edge
/// x_a -> x_b, meaning some v in W_{delta(I_2(J, x_b))} has
/// x_b v >=_{I_1(J, x_a), delta} x_a.
inline std::vector<std::vector<std::size_t>> prime_steps(const std::vector<WeylElement>& ws, Subset j,
                                                         const Automorphism& delta) {
  const std::size_t n = ws.size();
  std::vector<std::vector<std::size_t>> step(n);
  for (std::size_t a = 0; a < n; ++a) {
    const TwistedDominance above({i1(j, ws[a], delta), ws[a]}, delta);
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      for (const WeylElement& v : parabolic_elements(ws[b].root_system(), delta.apply(i2(j, ws[b], delta)))) {
        if (above.contains(ws[b] * v)) {
          step[a].push_back(b);
          break;
        }
      }
    }
  }
  return step;
}

/// reach[a][b]: x_b <=' x_a (a chain from x_a to x_b; reflexive).
inline std::vector<std::vector<bool>> prime_reachability(const std::vector<std::vector<std::size_t>>& step) {
  const std::size_t n = step.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::size_t> stack{a};
    reach[a][a] = true;
    while (!stack.empty()) {
      const std::size_t c = stack.back();
      stack.pop_back();
      for (std::size_t b : step[c])
        if (!reach[a][b]) {
          reach[a][b] = true;
          stack.push_back(b);
        }
    }
  }
  return reach;
}

/// u2 <=' u1 on w_set(p).
inline bool prime_leq(const WeylElement& u2, const WeylElement& u1, const PieceIndex& p, const Automorphism& delta) {
  const std::vector<WeylElement> ws = w_set(p, delta);
  auto pos = [&](const WeylElement& u) {
    auto it = std::find(ws.begin(), ws.end(), u);
    if (it == ws.end()) throw Error("element not in W_delta(J, w)");
    return static_cast<std::size_t>(it - ws.begin());
  };
  const std::size_t a = pos(u1), b = pos(u2);
  return prime_reachability(prime_steps(ws, p.J, delta))[a][b];
}

struct CellGroupReport {
  CellGroup group;
  int top_dim = 0;                 // dimension of the piece (I_1(J,u), u)
  std::map<int, int> cells_by_dim;
};

struct CellularReport {
  bool finite = false;
  std::optional<std::pair<WeylElement, Subset>> violator;  // (u, I_2(J,u)) when not finite
  std::vector<WeylElement> alpha_order;                    // <='-smaller groups first
  std::map<int, int> cells_by_dim;
  std::vector<CellGroupReport> groups;                     // in alpha_order
};

/// Linear extension of <=' with smaller elements first; ties broken by the
/// position in `ws` (shortlex).  Returns nullopt if the relation has a cycle.
inline std::optional<std::vector<std::size_t>> prime_linear_extension(const std::vector<std::vector<std::size_t>>& step) {
  const std::size_t n = step.size();
  // a -> b means b <=' a, so b must be listed before a.
  std::vector<int> pending(n, 0);
  std::vector<std::vector<std::size_t>> unlocks(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b : step[a]) {
      ++pending[a];
      unlocks[b].push_back(a);
    }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t a = 0; a < n; ++a)
    if (pending[a] == 0) ready.push(a);
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    const std::size_t a = ready.top();
    ready.pop();
    order.push_back(a);
    for (std::size_t c : unlocks[a])
      if (--pending[c] == 0) ready.push(c);
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

/// Finiteness test (I_2(J,u) empty for every u >=_{J,delta} w) and, when it
/// holds, the alpha-partition by X-groups with a cell count per dimension.
///
/// Each X_u is then a vector bundle over the flag variety G/B, so it has one
/// cell of dimension l(x) + r_u for every x in W, where the rank r_u is
/// dim X_u - |Phi+| and dim X_u is the dimension of its top piece (I_1(J,u), u).
inline CellularReport cellular_report(const PieceIndex& p, const Automorphism& delta) {
  require_valid_piece(p, delta);
  const RootSystemPtr& rs = p.w.root_system();
  const TwistedDominance above(p, delta);
  const std::vector<WeylElement> all = sorted_shortlex(parabolic_elements(rs, Subset::full(rs->rank())));

  CellularReport report;
  for (const WeylElement& u : all) {
    if (!above.contains(u)) continue;
    const Subset bad = i2(p.J, u, delta);
    if (!bad.empty()) {
      report.violator = std::make_pair(u, bad);
      return report;
    }
  }
  report.finite = true;

  const std::vector<WeylElement> ws = w_set(p, delta);
  const auto order = prime_linear_extension(prime_steps(ws, p.J, delta));
  if (!order) throw Error("internal: <=' has a cycle under the finiteness condition");

  std::map<int, int> base;  // Schubert cells of G/B by dimension
  for (const WeylElement& x : all) ++base[x.length()];

  for (std::size_t idx : *order) {
    const WeylElement& u = ws[idx];
    CellGroupReport g{{u, x_members(p.J, u, delta), i1(p.J, u, delta), i2(p.J, u, delta)}, 0, {}};
    g.top_dim = piece_dimension({g.group.i1, u}, delta);
    const int rank = g.top_dim - rs->num_positive();
    for (const auto& [d, count] : base) {
      g.cells_by_dim[d + rank] += count;
      report.cells_by_dim[d + rank] += count;
    }
    report.alpha_order.push_back(u);
    report.groups.push_back(std::move(g));
  }
  return report;
}

}  // namespace wonderful
