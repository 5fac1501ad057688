#pragma once

#include <initializer_list>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "wonderful/wonderful.hpp"

namespace wonderful {
inline void PrintTo(const WeylElement& w, std::ostream* os) { *os << format_word(w); }
inline void PrintTo(Subset s, std::ostream* os) { *os << s.to_string(); }
inline void PrintTo(const PieceIndex& p, std::ostream* os) { *os << format_piece(p); }
}  // namespace wonderful

namespace wt {

using namespace wonderful;

inline RootSystemPtr datum(const std::string& type) { return RootSystem::build(cartan_from_type_string(type)); }

// Word in 1-based digits, "" for e.
inline WeylElement el(const RootSystemPtr& rs, const std::string& word) {
  Word w;
  for (char c : word) w.push_back(c - '1');
  return from_word(rs, w);
}

inline Subset labels(std::initializer_list<int> ls) { return Subset::from_labels(std::vector<int>(ls)); }

inline Automorphism id(const RootSystemPtr& rs) { return Automorphism::identity(rs); }

// Diagram flip i <-> n+1-i.
inline Automorphism flip(const RootSystemPtr& rs) {
  std::vector<int> m(rs->rank());
  for (int i = 0; i < rs->rank(); ++i) m[i] = rs->rank() - 1 - i;
  return Automorphism::validate(m, rs);
}

inline PieceIndex piece(const RootSystemPtr& rs, std::initializer_list<int> j, const std::string& word) {
  return {labels(j), el(rs, word)};
}

inline std::set<WeylElement> elems(const RootSystemPtr& rs, std::initializer_list<const char*> words) {
  std::set<WeylElement> out;
  for (const char* w : words) out.insert(el(rs, w));
  return out;
}

template <class Range>
std::set<WeylElement> as_set(const Range& r) {
  return std::set<WeylElement>(r.begin(), r.end());
}

}  // namespace wt
