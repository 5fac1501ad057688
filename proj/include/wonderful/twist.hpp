#pragma once

#include <vector>

#include "wonderful/error.hpp"
#include "wonderful/root_system.hpp"
#include "wonderful/subset.hpp"
#include "wonderful/weyl.hpp"

namespace wonderful {

/// A diagram automorphism delta: a permutation of I preserving the Cartan
/// matrix.  Acts on W by s_i -> s_{delta(i)}, realized by conjugating root
/// permutations with the induced permutation of the roots.
class Automorphism {
 public:
  static Automorphism identity(const RootSystemPtr& rs) {
    std::vector<int> mapping(rs->rank());
    for (int i = 0; i < rs->rank(); ++i) mapping[i] = i;
    return Automorphism(rs, std::move(mapping));
  }

  /// Throws unless `mapping` (0-based) is a Cartan-preserving bijection of I.
  static Automorphism validate(std::vector<int> mapping, const RootSystemPtr& rs) {
    const int n = rs->rank();
    if (static_cast<int>(mapping.size()) != n) throw Error("automorphism is not a bijection of I");
    std::vector<bool> hit(n, false);
    for (int image : mapping) {
      if (image < 0 || image >= n || hit[image]) throw Error("automorphism is not a bijection of I");
      hit[image] = true;
    }
    const auto& a = rs->cartan();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (a[mapping[i]][mapping[j]] != a[i][j]) throw Error("not a diagram automorphism");
    return Automorphism(rs, std::move(mapping));
  }

  const std::vector<int>& mapping() const { return mapping_; }
  int operator()(int i) const { return mapping_[i]; }
  bool is_identity() const {
    for (int i = 0; i < static_cast<int>(mapping_.size()); ++i)
      if (mapping_[i] != i) return false;
    return true;
  }

  Automorphism inverse() const {
    std::vector<int> inv(mapping_.size());
    for (int i = 0; i < static_cast<int>(mapping_.size()); ++i) inv[mapping_[i]] = i;
    return Automorphism(rs_, std::move(inv));
  }

  Subset apply(Subset j) const {
    Subset out;
    for (int i : j.members()) out = out.with(mapping_[i]);
    return out;
  }

  WeylElement apply(const WeylElement& w) const {
    std::vector<int> perm(w.action().size());
    for (int k = 0; k < rs_->size(); ++k) perm[root_perm_[k]] = root_perm_[w(k)];
    return WeylElement::from_action(w.root_system(), std::move(perm));
  }

  /// Root index of delta(root k).
  int apply_root(int k) const { return root_perm_[k]; }

  friend bool operator==(const Automorphism& a, const Automorphism& b) { return a.mapping_ == b.mapping_; }

 private:
  Automorphism(RootSystemPtr rs, std::vector<int> mapping) : rs_(std::move(rs)), mapping_(std::move(mapping)) {
    root_perm_.resize(rs_->size());
    for (int k = 0; k < rs_->size(); ++k) {
      Root image{std::vector<int>(rs_->rank(), 0)};
      const Root& r = rs_->root(k);
      for (int i = 0; i < rs_->rank(); ++i) image.coords[mapping_[i]] = r.coords[i];
      int idx = rs_->index_of(image);
      if (idx < 0) throw Error("not a diagram automorphism");
      root_perm_[k] = idx;
    }
  }

  RootSystemPtr rs_;
  std::vector<int> mapping_;
  std::vector<int> root_perm_;
};

inline Automorphism validate(std::vector<int> mapping, const RootSystemPtr& rs) {
  return Automorphism::validate(std::move(mapping), rs);
}
inline WeylElement apply_element(const Automorphism& delta, const WeylElement& w) { return delta.apply(w); }
inline Subset apply_subset(const Automorphism& delta, Subset j) { return delta.apply(j); }

}  // namespace wonderful
