#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "wonderful/error.hpp"
#include "wonderful/subset.hpp"

namespace wonderful {

using CartanMatrix = std::vector<std::vector<int>>;

/// A root, as integer coordinates over the simple-root basis.
struct Root {
  std::vector<int> coords;

  int height() const { return std::accumulate(coords.begin(), coords.end(), 0); }
  bool is_positive() const {
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; }) &&
           std::any_of(coords.begin(), coords.end(), [](int c) { return c != 0; });
  }
  Root operator-() const {
    Root r = *this;
    for (int& c : r.coords) c = -c;
    return r;
  }
  Subset support() const {
    Subset s;
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (coords[i] != 0) s = s.with(static_cast<int>(i));
    return s;
  }
  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

/// Throws "invalid Cartan matrix" unless `a` is square with 2 on the diagonal,
/// non-positive off-diagonal entries and a_ij = 0 <=> a_ji = 0.
inline void validate_cartan(const CartanMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0 || n > kMaxRank) throw Error("invalid Cartan matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw Error("invalid Cartan matrix");
    if (a[i][i] != 2) throw Error("invalid Cartan matrix");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) throw Error("invalid Cartan matrix");
      if ((a[i][j] == 0) != (a[j][i] == 0)) throw Error("invalid Cartan matrix");
    }
}

/// The finite root system of a Cartan matrix.
///
/// Convention: s_i(alpha_j) = alpha_j - A[i][j] alpha_i.  Roots are indexed
/// 0..2N-1: the N positive roots first, ordered by height and then by
/// coordinates in decreasing lexicographic order (so alpha_i sits at index
/// i), followed by their negatives in the same order.  Immutable once built.
class RootSystem {
 public:
  static constexpr std::size_t kDefaultMaxRoots = 10000;

  static std::shared_ptr<const RootSystem> build(CartanMatrix cartan,
                                                 std::size_t max_roots = kDefaultMaxRoots) {
    validate_cartan(cartan);
    return std::shared_ptr<const RootSystem>(new RootSystem(std::move(cartan), max_roots));
  }

  int rank() const { return static_cast<int>(cartan_.size()); }
  const CartanMatrix& cartan() const { return cartan_; }
  int num_positive() const { return num_positive_; }
  int size() const { return static_cast<int>(roots_.size()); }
  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(int k) const { return roots_[k]; }

  bool is_positive(int k) const { return k < num_positive_; }
  int negate(int k) const { return k < num_positive_ ? k + num_positive_ : k - num_positive_; }

  /// Index of `r`, or -1 when `r` is not a root.
  int index_of(const Root& r) const {
    auto it = index_.find(r.coords);
    return it == index_.end() ? -1 : it->second;
  }

  /// Index of root s_i(root k).
  int reflect(int i, int k) const { return reflections_[i][k]; }
  const std::vector<int>& reflection(int i) const { return reflections_[i]; }

  /// i if root k is the simple root alpha_i, otherwise -1.
  int simple_label(int k) const { return k < rank() ? k : -1; }

  Subset support(int k) const { return supports_[k]; }
  bool in_phi(int k, Subset j) const { return support(k).is_subset_of(j); }

  /// Phi_J: roots supported on J, in index order.
  std::vector<Root> phi_subset(Subset j) const {
    std::vector<Root> out;
    for (int k = 0; k < size(); ++k)
      if (in_phi(k, j)) out.push_back(root(k));
    return out;
  }

  /// |Phi_J^+|.
  int num_positive_in(Subset j) const {
    int n = 0;
    for (int k = 0; k < num_positive_; ++k)
      if (in_phi(k, j)) ++n;
    return n;
  }

  Root simple_root(int i) const {
    Root r{std::vector<int>(rank(), 0)};
    r.coords[i] = 1;
    return r;
  }

  Root apply_reflection(int i, const Root& r) const {
    int pairing = 0;
    for (int j = 0; j < rank(); ++j) pairing += cartan_[i][j] * r.coords[j];
    Root out = r;
    out.coords[i] -= pairing;
    return out;
  }

 private:
  RootSystem(CartanMatrix cartan, std::size_t max_roots) : cartan_(std::move(cartan)) {
    const int n = rank();
    std::vector<Root> positive;
    std::map<std::vector<int>, int> seen;
    for (int i = 0; i < n; ++i) {
      positive.push_back(simple_root(i));
      seen.emplace(positive.back().coords, i);
    }
    // Breadth-first closure of the simple roots under simple reflections.
    for (std::size_t head = 0; head < positive.size(); ++head) {
      for (int i = 0; i < n; ++i) {
        Root next = apply_reflection(i, positive[head]);
        if (!next.is_positive()) continue;
        if (seen.count(next.coords)) continue;
        if (2 * (positive.size() + 1) > max_roots) throw Error("not finite type");
        seen.emplace(next.coords, 0);
        positive.push_back(std::move(next));
      }
    }
    std::sort(positive.begin(), positive.end(), [](const Root& a, const Root& b) {
      if (a.height() != b.height()) return a.height() < b.height();
      return a.coords > b.coords;
    });
    num_positive_ = static_cast<int>(positive.size());
    roots_ = positive;
    for (const Root& r : positive) roots_.push_back(-r);
    for (int k = 0; k < size(); ++k) {
      index_.emplace(roots_[k].coords, k);
      supports_.push_back(roots_[k].support());
    }
    reflections_.assign(n, std::vector<int>(roots_.size()));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < size(); ++k) {
        int image = index_of(apply_reflection(i, roots_[k]));
        if (image < 0) throw Error("not finite type");
        reflections_[i][k] = image;
      }
  }

  CartanMatrix cartan_;
  int num_positive_ = 0;
  std::vector<Root> roots_;
  std::vector<Subset> supports_;
  std::map<std::vector<int>, int> index_;
  std::vector<std::vector<int>> reflections_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Returns the full root set of the datum; thin wrapper over RootSystem::build.
inline std::vector<Root> build_root_system(const CartanMatrix& cartan,
                                           std::size_t max_roots = RootSystem::kDefaultMaxRoots) {
  return RootSystem::build(cartan, max_roots)->roots();
}

// ---------------------------------------------------------------------------
// Standard Cartan matrices (Bourbaki labelling; A[i][j] = <alpha_i^vee, alpha_j>).

namespace detail {
inline void link(CartanMatrix& a, int i, int j, int aij, int aji) {
  a[i][j] = aij;
  a[j][i] = aji;
}
}  // namespace detail

/// Cartan matrix of the irreducible type `letter` (A..G) and rank `rank`.
inline CartanMatrix cartan_of_type(char letter, int rank) {
  auto fail = [&] { return Error(std::string("unknown Cartan type ") + letter + std::to_string(rank)); };
  if (rank < 1 || rank > kMaxRank) throw fail();
  CartanMatrix a(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) a[i][i] = 2;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) detail::link(a, i, i + 1, -1, -1);
  };
  switch (letter) {
    case 'A':
      chain(rank);
      break;
    case 'B':
      if (rank < 2) throw fail();
      chain(rank - 1);
      detail::link(a, rank - 2, rank - 1, -1, -2);
      break;
    case 'C':
      if (rank < 2) throw fail();
      chain(rank - 1);
      detail::link(a, rank - 2, rank - 1, -2, -1);
      break;
    case 'D':
      if (rank < 4) throw fail();
      chain(rank - 1);
      detail::link(a, rank - 3, rank - 1, -1, -1);
      break;
    case 'E':
      if (rank < 6 || rank > 8) throw fail();
      detail::link(a, 0, 2, -1, -1);
      detail::link(a, 1, 3, -1, -1);
      for (int i = 2; i + 1 < rank; ++i) detail::link(a, i, i + 1, -1, -1);
      break;
    case 'F':
      if (rank != 4) throw fail();
      detail::link(a, 0, 1, -1, -1);
      detail::link(a, 1, 2, -2, -1);
      detail::link(a, 2, 3, -1, -1);
      break;
    case 'G':
      if (rank != 2) throw fail();
      detail::link(a, 0, 1, -3, -1);
      break;
    default:
      throw fail();
  }
  return a;
}

/// Block-diagonal sum of Cartan matrices (a reducible datum).
inline CartanMatrix cartan_product(const std::vector<CartanMatrix>& factors) {
  std::size_t n = 0;
  for (const auto& f : factors) n += f.size();
  CartanMatrix a(n, std::vector<int>(n, 0));
  std::size_t offset = 0;
  for (const auto& f : factors) {
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = 0; j < f.size(); ++j) a[offset + i][offset + j] = f[i][j];
    offset += f.size();
  }
  return a;
}

/// Parses "A2", "B3", "A1xA1" (factors joined by 'x').
inline CartanMatrix cartan_from_type_string(const std::string& spec) {
  std::vector<CartanMatrix> factors;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t end = spec.find_first_of("xX", pos);
    if (end == std::string::npos) end = spec.size();
    std::string token = spec.substr(pos, end - pos);
    if (token.size() < 2) throw Error("unknown Cartan type " + spec);
    char letter = token[0];
    if (letter >= 'a' && letter <= 'g') letter = static_cast<char>(letter - 'a' + 'A');
    int rank = 0;
    for (std::size_t k = 1; k < token.size(); ++k) {
      if (token[k] < '0' || token[k] > '9') throw Error("unknown Cartan type " + spec);
      rank = rank * 10 + (token[k] - '0');
      if (rank > kMaxRank) throw Error("unknown Cartan type " + spec);
    }
    factors.push_back(cartan_of_type(letter, rank));
    pos = end + 1;
  }
  return cartan_product(factors);
}

}  // namespace wonderful
