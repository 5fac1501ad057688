#pragma once

// Text and JSON formats shared by the CLI and the cache.  Requires
// nlohmann/json ("json.hpp") on the include path.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "wonderful/cells.hpp"
#include "wonderful/closure.hpp"
#include "wonderful/error.hpp"
#include "wonderful/format.hpp"
#include "wonderful/pieces.hpp"
#include "wonderful/root_system.hpp"
#include "wonderful/twist.hpp"
#include "wonderful/weyl.hpp"

namespace wonderful::io {

using nlohmann::json;

namespace detail {

inline CartanMatrix factor_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("type")) throw Error("invalid datum: expected a \"type\" entry");
  const json& type = doc.at("type");
  if (!type.is_string()) throw Error("invalid datum: \"type\" must be a string");
  std::string spec = type.get<std::string>();
  if (doc.contains("rank")) {
    const json& rank = doc.at("rank");
    if (!rank.is_number_integer()) throw Error("invalid datum: \"rank\" must be an integer");
    spec += std::to_string(rank.get<long long>());
  }
  return cartan_from_type_string(spec);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

inline int parse_label(const std::string& token, int rank) {
  if (token.empty() || token.size() > 3 || token.find_first_not_of("0123456789") != std::string::npos)
    throw Error("invalid generator");
  const int label = std::stoi(token);
  if (label < 1 || label > rank) throw Error("invalid generator");
  return label;
}

}  // namespace detail

/// A root datum document:
///   {"type": "A", "rank": 2}          one irreducible factor
///   {"type": "A1xA1"}                 type string, factors joined by 'x'
///   {"factors": [{...}, {...}]}       or a bare list of factors
///   {"cartan": [[2,-1],[-1,2]]}       explicit Cartan matrix
inline CartanMatrix datum_from_json(const json& doc) {
  if (doc.is_array()) return datum_from_json(json{{"factors", doc}});
  if (!doc.is_object()) throw Error("invalid datum: expected an object");
  if (doc.contains("cartan")) {
    const json& rows = doc.at("cartan");
    if (!rows.is_array() || rows.empty()) throw Error("invalid Cartan matrix");
    CartanMatrix a;
    for (const json& row : rows) {
      if (!row.is_array()) throw Error("invalid Cartan matrix");
      std::vector<int> r;
      for (const json& v : row) {
        if (!v.is_number_integer()) throw Error("invalid Cartan matrix");
        r.push_back(v.get<int>());
      }
      a.push_back(std::move(r));
    }
    validate_cartan(a);
    return a;
  }
  if (doc.contains("factors")) {
    const json& factors = doc.at("factors");
    if (!factors.is_array() || factors.empty()) throw Error("invalid datum: \"factors\" must be a non-empty list");
    std::vector<CartanMatrix> parts;
    for (const json& f : factors) parts.push_back(detail::factor_from_json(f));
    return cartan_product(parts);
  }
  return detail::factor_from_json(doc);
}

/// Reads a datum document from disk.  Unreadable or malformed files report
/// "invalid Cartan matrix" with the underlying reason appended.
inline CartanMatrix load_datum_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("invalid Cartan matrix: cannot read " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(std::string("invalid Cartan matrix: ") + e.what());
  }
  return datum_from_json(doc);
}

/// "id" (or empty) for the identity, otherwise "1:2,2:1" with 1-based
/// labels.  Labels not mentioned are fixed.
inline Automorphism parse_automorphism(const std::string& text, const RootSystemPtr& rs) {
  const std::string spec = detail::trim(text);
  if (spec.empty() || spec == "id") return Automorphism::identity(rs);
  std::vector<int> mapping(rs->rank());
  for (int i = 0; i < rs->rank(); ++i) mapping[i] = i;
  std::vector<bool> given(rs->rank(), false);
  for (const std::string& pair : detail::split(spec, ',')) {
    const auto parts = detail::split(detail::trim(pair), ':');
    if (parts.size() != 2) throw Error("automorphism is not a bijection of I");
    int from = 0, to = 0;
    try {
      from = detail::parse_label(detail::trim(parts[0]), rs->rank()) - 1;
      to = detail::parse_label(detail::trim(parts[1]), rs->rank()) - 1;
    } catch (const Error&) {
      throw Error("automorphism is not a bijection of I");
    }
    if (given[from]) throw Error("automorphism is not a bijection of I");
    given[from] = true;
    mapping[from] = to;
  }
  return Automorphism::validate(std::move(mapping), rs);
}

/// A word in 1-based labels: "121", "1,10,2", or "" / "e" for the identity.
/// Digits run together only below rank 10; larger ranks need commas.
inline Word parse_word(const std::string& text, int rank) {
  const std::string s = detail::trim(text);
  Word word;
  if (s.empty() || s == "e") return word;
  if (s.find(',') != std::string::npos || rank >= 10) {
    for (const std::string& tok : detail::split(s, ',')) word.push_back(detail::parse_label(detail::trim(tok), rank) - 1);
  } else {
    for (char c : s) word.push_back(detail::parse_label(std::string(1, c), rank) - 1);
  }
  return word;
}

/// "J=1,2;w=121" (either part may be empty).  Throws "w is not minimal in
/// its coset" when the pair is not in the index set.
inline PieceIndex parse_piece(const std::string& text, const RootSystemPtr& rs, const Automorphism& delta) {
  std::string jpart, wpart;
  bool have_j = false, have_w = false;
  for (const std::string& field : detail::split(text, ';')) {
    const std::string f = detail::trim(field);
    if (f.rfind("J=", 0) == 0 && !have_j) {
      jpart = f.substr(2);
      have_j = true;
    } else if (f.rfind("w=", 0) == 0 && !have_w) {
      wpart = f.substr(2);
      have_w = true;
    } else {
      throw Error("invalid piece syntax: expected \"J=<labels>;w=<word>\"");
    }
  }
  if (!have_j || !have_w) throw Error("invalid piece syntax: expected \"J=<labels>;w=<word>\"");
  std::vector<int> labels;
  if (!detail::trim(jpart).empty())
    for (const std::string& tok : detail::split(jpart, ',')) labels.push_back(detail::parse_label(detail::trim(tok), rs->rank()));
  PieceIndex p{Subset::from_labels(labels), from_word(rs, parse_word(wpart, rs->rank()))};
  require_valid_piece(p, delta);
  return p;
}

// --- serialization ------------------------------------------------------------

inline json labels_json(Subset s) { return json(s.labels()); }

inline json word_json(const WeylElement& w) {
  json out = json::array();
  for (int i : reduced_word(w)) out.push_back(i + 1);
  return out;
}

inline json cartan_json(const CartanMatrix& a) { return json(a); }

/// {"J": [...], "w": [...]}
inline json piece_ref_json(const PieceIndex& p) { return json{{"J", labels_json(p.J)}, {"w", word_json(p.w)}}; }

/// {"J": [...], "w": [...], "dim": n, "j_inf": [...]}
inline json piece_json(const PieceIndex& p, const Automorphism& delta) {
  json out = piece_ref_json(p);
  out["dim"] = piece_dimension(p, delta);
  out["j_inf"] = labels_json(j_infinity(p.J, p.w, delta));
  return out;
}

inline json dims_json(const std::map<int, int>& counts) {
  json out = json::object();
  for (const auto& [dim, count] : counts) out[std::to_string(dim)] = count;
  return out;
}

inline json report_json(const CellularReport& r) {
  json out;
  out["finite"] = r.finite;
  out["violator"] = r.violator ? json{{"u", word_json(r.violator->first)}, {"i2", labels_json(r.violator->second)}}
                               : json(nullptr);
  json order = json::array();
  for (const WeylElement& u : r.alpha_order) order.push_back(word_json(u));
  out["alpha_order"] = order;
  out["cells_by_dim"] = dims_json(r.cells_by_dim);
  json groups = json::array();
  for (const CellGroupReport& g : r.groups) {
    json members = json::array();
    for (const PieceIndex& q : g.group.members) members.push_back(piece_ref_json(q));
    groups.push_back({{"u", word_json(g.group.u)},
                      {"i1", labels_json(g.group.i1)},
                      {"i2", labels_json(g.group.i2)},
                      {"members", members},
                      {"top_dim", g.top_dim},
                      {"cells_by_dim", dims_json(g.cells_by_dim)}});
  }
  out["groups"] = groups;
  return out;
}

/// {"nodes": [piece...], "edges": [{"from": piece, "to": piece}...]}
inline json hasse_json(const std::vector<PieceIndex>& pieces, const std::vector<HasseEdge>& edges) {
  json nodes = json::array();
  for (const PieceIndex& p : pieces) nodes.push_back(piece_ref_json(p));
  json list = json::array();
  for (const HasseEdge& e : edges) list.push_back({{"from", piece_ref_json(pieces[e.from])}, {"to", piece_ref_json(pieces[e.to])}});
  return json{{"nodes", nodes}, {"edges", list}};
}

/// Directed graph, one node per piece, edges pointing up in the order.
inline std::string hasse_dot(const std::vector<PieceIndex>& pieces, const std::vector<HasseEdge>& edges) {
  std::ostringstream out;
  out << "digraph pieces {\n  rankdir=BT;\n";
  for (std::size_t k = 0; k < pieces.size(); ++k) out << "  n" << k << " [label=\"" << piece_label(pieces[k]) << "\"];\n";
  for (const HasseEdge& e : edges) out << "  n" << e.from << " -> n" << e.to << ";\n";
  out << "}\n";
  return out.str();
}

/// Quotes a CSV field when it contains a separator or a quote.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace wonderful::io
