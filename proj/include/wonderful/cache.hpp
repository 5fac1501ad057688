#pragma once

// On-disk cache of the tables that are expensive to rebuild for a datum:
// the Bruhat matrix of the whole group and the list of pieces.  One JSON
// file per (Cartan matrix, automorphism), named by a 64-bit FNV-1a digest.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "wonderful/bruhat.hpp"
#include "wonderful/io.hpp"
#include "wonderful/pieces.hpp"
#include "wonderful/twist.hpp"
#include "wonderful/weyl.hpp"

namespace wonderful {

inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Hex digest of "cartan:<rows>|delta:<mapping>".
inline std::string datum_digest(const CartanMatrix& cartan, const Automorphism& delta) {
  std::string key = "cartan:";
  for (const auto& row : cartan) {
    for (int v : row) key += std::to_string(v) + ",";
    key += ";";
  }
  key += "|delta:";
  for (int i : delta.mapping()) key += std::to_string(i) + ",";
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  std::uint64_t h = fnv1a64(key);
  for (int k = 15; k >= 0; --k, h >>= 4) out[k] = hex[h & 0xf];
  return out;
}

struct DatumTables {
  std::vector<std::vector<bool>> bruhat;  // indexed like WeylGroup::elements()
  std::vector<PieceIndex> pieces;         // listing order
};

/// Loads tables from `dir` or builds and stores them.  An empty directory
/// disables caching.  Files whose contents do not match the datum (digest,
/// Cartan matrix, automorphism, element order or table shape) are rebuilt.
class TableCache {
 public:
  explicit TableCache(std::string dir = {}) : dir_(std::move(dir)) {}

  bool enabled() const { return !dir_.empty(); }
  bool last_was_hit() const { return hit_; }

  std::filesystem::path path_for(const CartanMatrix& cartan, const Automorphism& delta) const {
    return std::filesystem::path(dir_) / (datum_digest(cartan, delta) + ".json");
  }

  DatumTables load_or_build(const WeylGroup& group, const Automorphism& delta) {
    hit_ = false;
    const CartanMatrix& cartan = group.root_system()->cartan();
    if (enabled()) {
      if (auto cached = try_load(group, delta)) {
        hit_ = true;
        return std::move(*cached);
      }
    }
    DatumTables tables{bruhat_matrix(group), enumerate_pieces(group.root_system(), delta)};
    if (enabled()) store(path_for(cartan, delta), encode(group, delta, tables));
    return tables;
  }

 private:
  static nlohmann::json encode(const WeylGroup& group, const Automorphism& delta, const DatumTables& t) {
    using nlohmann::json;
    json elements = json::array();
    for (const WeylElement& w : group.elements()) elements.push_back(io::word_json(w));
    json rows = json::array();
    for (const auto& row : t.bruhat) {
      std::string bits;
      for (bool b : row) bits += b ? '1' : '0';
      rows.push_back(bits);
    }
    json pieces = json::array();
    for (const PieceIndex& p : t.pieces) pieces.push_back(io::piece_ref_json(p));
    const CartanMatrix& cartan = group.root_system()->cartan();
    return json{{"format", 1},
                {"digest", datum_digest(cartan, delta)},
                {"cartan", cartan},
                {"automorphism", delta.mapping()},
                {"elements", elements},
                {"bruhat", rows},
                {"pieces", pieces}};
  }

  std::optional<DatumTables> try_load(const WeylGroup& group, const Automorphism& delta) const {
    using nlohmann::json;
    const RootSystemPtr& rs = group.root_system();
    const auto path = path_for(rs->cartan(), delta);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
      const json doc = json::parse(in);
      if (doc.at("format") != 1 || doc.at("digest") != datum_digest(rs->cartan(), delta)) return std::nullopt;
      if (doc.at("cartan").get<CartanMatrix>() != rs->cartan()) return std::nullopt;
      if (doc.at("automorphism").get<std::vector<int>>() != delta.mapping()) return std::nullopt;
      const json& elements = doc.at("elements");
      const int n = group.size();
      if (!elements.is_array() || static_cast<int>(elements.size()) != n) return std::nullopt;
      for (int k = 0; k < n; ++k)
        if (elements[k] != io::word_json(group[k])) return std::nullopt;
      DatumTables t;
      const json& rows = doc.at("bruhat");
      if (!rows.is_array() || static_cast<int>(rows.size()) != n) return std::nullopt;
      for (const json& row : rows) {
        const std::string bits = row.get<std::string>();
        if (static_cast<int>(bits.size()) != n || bits.find_first_not_of("01") != std::string::npos) return std::nullopt;
        std::vector<bool> r(n);
        for (int k = 0; k < n; ++k) r[k] = bits[k] == '1';
        t.bruhat.push_back(std::move(r));
      }
      for (const json& p : doc.at("pieces")) {
        Word word;
        for (int label : p.at("w").get<std::vector<int>>()) word.push_back(label - 1);
        PieceIndex piece{Subset::from_labels(p.at("J").get<std::vector<int>>()), from_word(rs, word)};
        if (!is_valid_piece(piece, delta)) return std::nullopt;
        t.pieces.push_back(std::move(piece));
      }
      return t;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

  static void store(const std::filesystem::path& path, const nlohmann::json& doc) {
    std::filesystem::create_directories(path.parent_path());
    const auto tmp = path.string() + ".tmp";
    {
      std::ofstream out(tmp);
      if (!out) throw Error("cannot write cache file " + tmp);
      out << doc.dump() << "\n";
    }
    std::filesystem::rename(tmp, path);
  }

  std::string dir_;
  bool hit_ = false;
};

}  // namespace wonderful
