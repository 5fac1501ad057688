#pragma once

// Slow reference implementations.  Group elements are integer matrices over
// the simple-root basis (column j is the image of alpha_j), built by
// breadth-first search from the generators; nothing here calls the
// permutation-based fast paths beyond converting elements in and out.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "wonderful/error.hpp"
#include "wonderful/pieces.hpp"
#include "wonderful/root_system.hpp"
#include "wonderful/subset.hpp"
#include "wonderful/twist.hpp"
#include "wonderful/weyl.hpp"

namespace wonderful::oracle {

using Matrix = std::vector<int>;  // row-major n x n

class BruteGroup {
 public:
  explicit BruteGroup(RootSystemPtr rs) : rs_(std::move(rs)), n_(rs_->rank()) {
    const CartanMatrix& a = rs_->cartan();
    for (int i = 0; i < n_; ++i) {
      Matrix s(n_ * n_, 0);
      for (int j = 0; j < n_; ++j) {
        s[j * n_ + j] = 1;
        s[i * n_ + j] -= a[i][j];
      }
      gens_.push_back(std::move(s));
    }
    Matrix id(n_ * n_, 0);
    for (int j = 0; j < n_; ++j) id[j * n_ + j] = 1;
    add(id, {});
    for (std::size_t head = 0; head < elems_.size(); ++head)
      for (int i = 0; i < n_; ++i) {
        Word word = words_[head];
        word.push_back(i);
        add(mul(elems_[head], gens_[i]), std::move(word));
      }
  }

  int size() const { return static_cast<int>(elems_.size()); }
  int rank() const { return n_; }
  int length(int x) const { return static_cast<int>(words_[x].size()); }
  const Word& word(int x) const { return words_[x]; }
  int identity() const { return 0; }

  int product(int x, int y) const { return index_.at(mul(elems_[x], elems_[y])); }
  int generator(int i) const { return index_.at(gens_[i]); }
  int inverse(int x) const {
    int out = identity();
    for (auto it = words_[x].rbegin(); it != words_[x].rend(); ++it) out = product(out, generator(*it));
    return out;
  }
  int from_letters(const Word& word) const {
    int out = identity();
    for (int i : word) out = product(out, generator(i));
    return out;
  }

  /// x(alpha_j) has nonnegative coordinates.
  bool maps_positive(int x, int j) const {
    for (int r = 0; r < n_; ++r)
      if (elems_[x][r * n_ + j] < 0) return false;
    return true;
  }
  /// x(alpha_j) = alpha_k for some k; returns k or -1.
  int simple_image(int x, int j) const {
    int hit = -1;
    for (int r = 0; r < n_; ++r) {
      const int c = elems_[x][r * n_ + j];
      if (c == 0) continue;
      if (c != 1 || hit >= 0) return -1;
      hit = r;
    }
    return hit;
  }

  int of(const WeylElement& w) const {
    Matrix m(n_ * n_, 0);
    for (int j = 0; j < n_; ++j) {
      const Root image = w.act(rs_->simple_root(j));
      for (int r = 0; r < n_; ++r) m[r * n_ + j] = image.coords[r];
    }
    return index_.at(m);
  }
  WeylElement element(int x) const { return from_word(rs_, words_[x]); }

  /// {x : x <= v} as all products of subwords of one reduced word of v.
  const std::set<int>& lower(int v) const {
    auto it = lower_.find(v);
    if (it != lower_.end()) return it->second;
    std::set<int> out;
    const Word& word = words_[v];
    const std::size_t len = word.size();
    for (unsigned long mask = 0; mask < (1UL << len); ++mask) {
      int x = identity();
      for (std::size_t k = 0; k < len; ++k)
        if (mask & (1UL << k)) x = product(x, generator(word[k]));
      out.insert(x);
    }
    return lower_.emplace(v, std::move(out)).first->second;
  }

  bool leq(int u, int v) const { return lower(v).count(u) > 0; }

  /// Support of x, read off its reduced word.
  Subset support(int x) const { return Subset::from_indices(words_[x]); }

  std::vector<int> parabolic(Subset j) const {
    std::vector<int> out;
    for (int x = 0; x < size(); ++x)
      if (support(x).is_subset_of(j)) out.push_back(x);
    return out;
  }

  /// delta applied letter by letter.
  int twist(int x, const std::vector<int>& mapping) const {
    Word word = words_[x];
    for (int& i : word) i = mapping[i];
    return from_letters(word);
  }

  /// Every reduced word of x.
  std::set<Word> reduced_words(int x) const {
    std::set<Word> out;
    if (length(x) == 0) {
      out.insert(Word{});
      return out;
    }
    for (int i = 0; i < n_; ++i) {
      const int shorter = product(x, generator(i));
      if (length(shorter) >= length(x)) continue;
      for (Word word : reduced_words(shorter)) {
        word.push_back(i);
        out.insert(std::move(word));
      }
    }
    return out;
  }

 private:
  Matrix mul(const Matrix& x, const Matrix& y) const {
    Matrix out(n_ * n_, 0);
    for (int r = 0; r < n_; ++r)
      for (int k = 0; k < n_; ++k)
        if (x[r * n_ + k] != 0)
          for (int c = 0; c < n_; ++c) out[r * n_ + c] += x[r * n_ + k] * y[k * n_ + c];
    return out;
  }

  void add(Matrix m, Word word) {
    if (index_.count(m)) return;
    if (elems_.size() >= 100000) throw Error("not finite type");
    index_.emplace(m, static_cast<int>(elems_.size()));
    elems_.push_back(std::move(m));
    words_.push_back(std::move(word));
  }

  RootSystemPtr rs_;
  int n_;
  std::vector<Matrix> gens_;
  std::vector<Matrix> elems_;
  std::vector<Word> words_;
  std::map<Matrix, int> index_;
  mutable std::map<int, std::set<int>> lower_;
};

inline bool brute_bruhat_leq(const BruteGroup& g, const WeylElement& u, const WeylElement& v) {
  return g.leq(g.of(u), g.of(v));
}

inline bool brute_bruhat_leq(const WeylElement& u, const WeylElement& v) {
  return brute_bruhat_leq(BruteGroup(u.root_system()), u, v);
}

/// Every K subset J with Ad(w) delta(K) = K: w(alpha_{delta(k)}) is a simple
/// root labelled in K for each k in K, and these labels cover K.
inline std::vector<Subset> brute_j_family(const BruteGroup& g, Subset j, const WeylElement& w,
                                          const Automorphism& delta) {
  const int x = g.of(w);
  std::vector<Subset> out;
  for (Subset k : subsets_of(j)) {
    Subset hit;
    bool ok = true;
    for (int m : k.members()) {
      const int image = g.simple_image(x, delta(m));
      if (image < 0 || !k.contains(image)) {
        ok = false;
        break;
      }
      hit = hit.with(image);
    }
    if (ok && hit == k) out.push_back(k);
  }
  return out;
}

/// The member of brute_j_family containing all others.
inline Subset brute_j_infinity(const BruteGroup& g, Subset j, const WeylElement& w, const Automorphism& delta) {
  const std::vector<Subset> family = brute_j_family(g, j, w, delta);
  for (Subset k : family) {
    bool top = true;
    for (Subset other : family) top = top && other.is_subset_of(k);
    if (top) return k;
  }
  throw Error("no maximum in the J-family");
}

inline Subset brute_j_infinity(Subset j, const WeylElement& w, const Automorphism& delta) {
  return brute_j_infinity(BruteGroup(w.root_system()), j, w, delta);
}

/// Bruhat-minimum and maximum of {x w : x <= u}; throws if either is not unique.
inline std::pair<WeylElement, WeylElement> brute_min_max_products(const BruteGroup& g, const WeylElement& u,
                                                                  const WeylElement& w) {
  const int wi = g.of(w);
  std::set<int> prods;
  for (int x : g.lower(g.of(u))) prods.insert(g.product(x, wi));
  std::optional<int> lo, hi;
  for (int a : prods) {
    bool below_all = true, above_all = true;
    for (int b : prods) {
      below_all = below_all && g.leq(a, b);
      above_all = above_all && g.leq(b, a);
    }
    if (below_all) lo = a;
    if (above_all) hi = a;
  }
  if (!lo || !hi) throw Error("no extremal product");
  return {g.element(*lo), g.element(*hi)};
}

inline std::pair<WeylElement, WeylElement> brute_min_max_products(const WeylElement& u, const WeylElement& w) {
  return brute_min_max_products(BruteGroup(u.root_system()), u, w);
}

enum class TwistedCondition { conjugate, pair };

/// Minimal targets: {u^{-1} w delta(u) : u in W_J} for the conjugate
/// condition, {u^{-1} w delta(v) : u <= v in W_J} for the pair condition.
inline std::set<int> brute_twisted_targets(const BruteGroup& g, const PieceIndex& p, const Automorphism& delta,
                                           TwistedCondition cond) {
  const int w = g.of(p.w);
  const std::vector<int> wj = g.parabolic(p.J);
  std::set<int> out;
  for (int v : wj) {
    const int wdv = g.product(w, g.twist(v, delta.mapping()));
    if (cond == TwistedCondition::conjugate) {
      out.insert(g.product(g.inverse(v), wdv));
      continue;
    }
    for (int u : wj)
      if (g.leq(u, v)) out.insert(g.product(g.inverse(u), wdv));
  }
  return out;
}

/// {w' : w' dominates some target}, as group indices.
inline std::set<int> brute_twisted_upper_set(const BruteGroup& g, const PieceIndex& p, const Automorphism& delta,
                                             TwistedCondition cond) {
  const std::set<int> targets = brute_twisted_targets(g, p, delta, cond);
  std::set<int> out;
  for (int x = 0; x < g.size(); ++x)
    for (int t : targets)
      if (g.leq(t, x)) {
        out.insert(x);
        break;
      }
  return out;
}

inline bool brute_geq_twisted(const BruteGroup& g, const WeylElement& wprime, const PieceIndex& p,
                              const Automorphism& delta, TwistedCondition cond = TwistedCondition::conjugate) {
  return brute_twisted_upper_set(g, p, delta, cond).count(g.of(wprime)) > 0;
}

inline bool brute_geq_twisted(const WeylElement& wprime, const PieceIndex& p, const Automorphism& delta,
                              TwistedCondition cond = TwistedCondition::conjugate) {
  return brute_geq_twisted(BruteGroup(wprime.root_system()), wprime, p, delta, cond);
}

/// Closure of {w} under (J, delta)-cyclic shifts, reading first and last
/// letters off every reduced word.
inline ElementSet brute_shift_class(const BruteGroup& g, const WeylElement& w, Subset j, const Automorphism& delta) {
  const std::vector<int>& map = delta.mapping();
  std::vector<int> inv(map.size());
  for (std::size_t i = 0; i < map.size(); ++i) inv[map[i]] = static_cast<int>(i);
  const Subset dj = delta.apply(j);

  const int start = g.of(w);
  std::set<int> seen{start};
  std::vector<int> queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    for (const Word& word : g.reduced_words(x)) {
      if (word.empty()) continue;
      std::vector<int> next;
      if (j.contains(word.front()))
        next.push_back(g.product(g.product(g.generator(word.front()), x), g.generator(map[word.front()])));
      if (dj.contains(word.back()))
        next.push_back(g.product(g.product(g.generator(inv[word.back()]), x), g.generator(word.back())));
      for (int y : next)
        if (g.length(y) == g.length(x) && seen.insert(y).second) queue.push_back(y);
    }
  }
  ElementSet out;
  for (int x : seen) out.insert(g.element(x));
  return out;
}

inline ElementSet brute_shift_class(const WeylElement& w, Subset j, const Automorphism& delta) {
  return brute_shift_class(BruteGroup(w.root_system()), w, j, delta);
}

}  // namespace wonderful::oracle
