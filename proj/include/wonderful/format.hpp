#pragma once

#include <string>

#include "wonderful/pieces.hpp"
#include "wonderful/weyl.hpp"

namespace wonderful {

/// 1-based labels of the reduced word.  Digits run together below rank 10
/// ("121"); from rank 10 on they are comma separated ("1,10,2").  The
/// identity prints as "e".
inline std::string format_word(const WeylElement& w) {
  const Word word = reduced_word(w);
  if (word.empty()) return "e";
  const bool commas = w.roots().rank() >= 10;
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (commas && k > 0) out += ',';
    out += std::to_string(word[k] + 1);
  }
  return out;
}

/// Same syntax the CLI accepts: "J=1,2;w=121" (empty J and w for (∅, e)).
inline std::string format_piece(const PieceIndex& p) {
  std::string out = "J=";
  const auto labels = p.J.labels();
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(labels[k]);
  }
  out += ";w=";
  if (!p.w.is_identity()) out += format_word(p.w);
  return out;
}

/// "J:{1,2}|w:121", used for DOT node labels.
inline std::string piece_label(const PieceIndex& p) { return "J:" + p.J.to_string() + "|w:" + format_word(p.w); }

}  // namespace wonderful
