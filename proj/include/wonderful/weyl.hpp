#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <utility>
#include <vector>

#include "wonderful/error.hpp"
#include "wonderful/root_system.hpp"
#include "wonderful/subset.hpp"

namespace wonderful {

/// A word in the simple reflections, as 0-based generator indices.
using Word = std::vector<int>;

enum class Side { left, right };

/// An element of the Weyl group, represented by the permutation it induces on
/// the root indices of its parent RootSystem.  Equality is equality of the
/// permutations.
class WeylElement {
 public:
  static WeylElement identity(RootSystemPtr rs) {
    std::vector<int> perm(static_cast<std::size_t>(rs->size()));
    for (int k = 0; k < rs->size(); ++k) perm[k] = k;
    return WeylElement(std::move(rs), std::move(perm), 0);
  }

  static WeylElement simple(RootSystemPtr rs, int i) {
    if (i < 0 || i >= rs->rank()) throw Error("invalid generator");
    std::vector<int> perm = rs->reflection(i);
    return WeylElement(std::move(rs), std::move(perm), 1);
  }

  /// Wraps a root permutation known to come from a group element.
  static WeylElement from_action(RootSystemPtr rs, std::vector<int> perm) {
    return WeylElement(std::move(rs), std::move(perm));
  }

  const RootSystem& roots() const { return *rs_; }
  const RootSystemPtr& root_system() const { return rs_; }
  const std::vector<int>& action() const { return perm_; }

  int length() const { return length_; }
  bool is_identity() const { return length_ == 0; }

  /// Index of w(root k).
  int operator()(int k) const { return perm_[k]; }
  Root act(const Root& r) const {
    int k = rs_->index_of(r);
    if (k < 0) throw Error("not a root");
    return rs_->root(perm_[k]);
  }

  bool right_descent(int i) const { return !rs_->is_positive(perm_[i]); }
  bool left_descent(int i) const { return !rs_->is_positive(inverse_image(i)); }

  Subset descents(Side side) const {
    Subset s;
    for (int i = 0; i < rs_->rank(); ++i)
      if (side == Side::right ? right_descent(i) : left_descent(i)) s = s.with(i);
    return s;
  }

  /// s_i * this.
  WeylElement left_multiply(int i) const {
    std::vector<int> perm(perm_.size());
    const auto& s = rs_->reflection(i);
    for (std::size_t k = 0; k < perm_.size(); ++k) perm[k] = s[perm_[k]];
    return WeylElement(rs_, std::move(perm), left_descent(i) ? length_ - 1 : length_ + 1);
  }

  /// this * s_i.
  WeylElement right_multiply(int i) const {
    std::vector<int> perm(perm_.size());
    const auto& s = rs_->reflection(i);
    for (std::size_t k = 0; k < perm_.size(); ++k) perm[k] = perm_[s[k]];
    return WeylElement(rs_, std::move(perm), right_descent(i) ? length_ - 1 : length_ + 1);
  }

  WeylElement inverse() const {
    std::vector<int> perm(perm_.size());
    for (std::size_t k = 0; k < perm_.size(); ++k) perm[perm_[k]] = static_cast<int>(k);
    return WeylElement(rs_, std::move(perm), length_);
  }

  friend WeylElement operator*(const WeylElement& u, const WeylElement& v) {
    u.check_compatible(v);
    std::vector<int> perm(u.perm_.size());
    for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = u.perm_[v.perm_[k]];
    return WeylElement(u.rs_, std::move(perm));
  }

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.perm_ == b.perm_; }
  friend std::strong_ordering operator<=>(const WeylElement& a, const WeylElement& b) {
    return a.perm_ <=> b.perm_;
  }

  void check_compatible(const WeylElement& other) const {
    if (rs_ != other.rs_ && rs_->cartan() != other.rs_->cartan())
      throw Error("incompatible root systems");
  }

 private:
  WeylElement(RootSystemPtr rs, std::vector<int> perm, int length)
      : rs_(std::move(rs)), perm_(std::move(perm)), length_(length) {}

  WeylElement(RootSystemPtr rs, std::vector<int> perm) : rs_(std::move(rs)), perm_(std::move(perm)) {
    for (int k = 0; k < rs_->num_positive(); ++k)
      if (!rs_->is_positive(perm_[k])) ++length_;
  }

  int inverse_image(int k) const {
    for (std::size_t j = 0; j < perm_.size(); ++j)
      if (perm_[j] == k) return static_cast<int>(j);
    return -1;
  }

  RootSystemPtr rs_;
  std::vector<int> perm_;
  int length_ = 0;
};

using ElementSet = std::set<WeylElement>;

inline WeylElement compose(const WeylElement& u, const WeylElement& v) { return u * v; }
inline WeylElement invert(const WeylElement& u) { return u.inverse(); }
inline int length(const WeylElement& u) { return u.length(); }
inline Root act_on_root(const WeylElement& u, const Root& beta) { return u.act(beta); }
inline Subset descents(const WeylElement& u, Side side) { return u.descents(side); }

/// s_{i1} s_{i2} ... s_{ik}; the empty word gives the identity.
inline WeylElement from_word(const RootSystemPtr& rs, const Word& word) {
  WeylElement w = WeylElement::identity(rs);
  for (int i : word) {
    if (i < 0 || i >= rs->rank()) throw Error("invalid generator");
    w = w.right_multiply(i);
  }
  return w;
}

/// Reduced word built by always peeling off the smallest left descent.
inline Word reduced_word(const WeylElement& u) {
  Word word;
  WeylElement w = u;
  while (!w.is_identity()) {
    int i = 0;
    while (!w.left_descent(i)) ++i;
    word.push_back(i);
    w = w.left_multiply(i);
  }
  return word;
}

/// Every reduced word of u.  Memoized recursion on right descents; the
/// number of words grows quickly, so this is meant for small ranks.
inline std::set<Word> all_reduced_words(const WeylElement& u) {
  std::map<WeylElement, std::set<Word>> memo;
  std::function<const std::set<Word>&(const WeylElement&)> rec = [&](const WeylElement& w) -> const std::set<Word>& {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    std::set<Word> out;
    if (w.is_identity()) {
      out.insert(Word{});
    } else {
      for (int i = 0; i < w.roots().rank(); ++i) {
        if (!w.right_descent(i)) continue;
        for (Word word : rec(w.right_multiply(i))) {
          word.push_back(i);
          out.insert(std::move(word));
        }
      }
    }
    return memo.emplace(w, std::move(out)).first->second;
  };
  return rec(u);
}

/// w_0^J, the longest element of W_J.
inline WeylElement longest_element(const RootSystemPtr& rs, Subset j) {
  WeylElement w = WeylElement::identity(rs);
  for (bool grew = true; grew;) {
    grew = false;
    for (int i : j.members()) {
      if (!w.right_descent(i)) {
        w = w.right_multiply(i);
        grew = true;
      }
    }
  }
  return w;
}

/// Sort key: length first, then the deterministic reduced word.
inline std::pair<int, Word> shortlex_key(const WeylElement& w) { return {w.length(), reduced_word(w)}; }

inline bool shortlex_less(const WeylElement& a, const WeylElement& b) {
  return shortlex_key(a) < shortlex_key(b);
}

/// Sorts elements by (length, reduced word), computing each key once.
inline std::vector<WeylElement> sorted_shortlex(std::vector<WeylElement> elems) {
  std::vector<std::pair<std::pair<int, Word>, std::size_t>> keys;
  keys.reserve(elems.size());
  for (std::size_t k = 0; k < elems.size(); ++k) keys.emplace_back(shortlex_key(elems[k]), k);
  std::sort(keys.begin(), keys.end());
  std::vector<WeylElement> out;
  out.reserve(elems.size());
  for (const auto& [key, k] : keys) out.push_back(elems[k]);
  return out;
}

inline std::vector<WeylElement> sorted_shortlex(const ElementSet& elems) {
  return sorted_shortlex(std::vector<WeylElement>(elems.begin(), elems.end()));
}

/// Elements of the parabolic subgroup W_J, breadth-first from e by right
/// multiplication (so in weakly increasing length).
inline std::vector<WeylElement> parabolic_elements(const RootSystemPtr& rs, Subset j) {
  std::vector<WeylElement> out{WeylElement::identity(rs)};
  ElementSet seen{out.front()};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int i : j.members()) {
      WeylElement next = out[head].right_multiply(i);
      if (seen.insert(next).second) out.push_back(std::move(next));
    }
  }
  return out;
}

/// The whole group, enumerated breadth-first from e by right multiplication;
/// element indices follow discovery order.  Read-only after construction.
class WeylGroup {
 public:
  explicit WeylGroup(RootSystemPtr rs) : rs_(std::move(rs)) {
    elements_ = parabolic_elements(rs_, Subset::full(rs_->rank()));
    for (std::size_t k = 0; k < elements_.size(); ++k) index_.emplace(elements_[k], static_cast<int>(k));
  }

  const RootSystemPtr& root_system() const { return rs_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<WeylElement>& elements() const { return elements_; }
  const WeylElement& operator[](int k) const { return elements_[k]; }
  int index_of(const WeylElement& w) const { return index_.at(w); }

 private:
  RootSystemPtr rs_;
  std::vector<WeylElement> elements_;
  std::map<WeylElement, int> index_;
};

}  // namespace wonderful
