// Command-line front end: pieces | closure | hasse | cells | order | verify.
//
// Exit status: 0 ok, 1 a verified property failed, 2 usage or configuration error.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wonderful/cache.hpp"
#include "wonderful/io.hpp"
#include "wonderful/wonderful.hpp"

namespace {

using namespace wonderful;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kUsage = 2;

struct Options {
  std::string type;
  std::string cartan_file;
  std::string automorphism = "id";
  std::string format = "text";
  std::string cache_dir;
  int verbosity = 0;
  std::string piece;
  std::string relation = "twisted";
  int max_rank = 3;
  std::vector<std::string> properties;
  int jobs = 0;
};

struct Session {
  std::string name;
  RootSystemPtr rs;
  Automorphism delta;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

Session open_session(const Options& opt) {
  if (opt.type.empty() && opt.cartan_file.empty()) throw UsageError("one of --type or --cartan is required");
  CartanMatrix cartan = opt.cartan_file.empty() ? cartan_from_type_string(opt.type) : io::load_datum_file(opt.cartan_file);
  RootSystemPtr rs = RootSystem::build(std::move(cartan));
  Automorphism delta = io::parse_automorphism(opt.automorphism, rs);
  return {opt.cartan_file.empty() ? opt.type : opt.cartan_file, rs, std::move(delta)};
}

void require_format(const Options& opt, std::initializer_list<const char*> allowed, const char* command) {
  for (const char* f : allowed)
    if (opt.format == f) return;
  throw UsageError(std::string("format ") + opt.format + " is not available for " + command);
}

void log(const Options& opt, const std::string& line) {
  if (opt.verbosity > 0) std::cerr << line << "\n";
}

DatumTables load_tables(const Options& opt, const Session& s) {
  TableCache cache(opt.cache_dir);
  const WeylGroup group(s.rs);
  DatumTables t = cache.load_or_build(group, s.delta);
  if (cache.enabled())
    log(opt, std::string("cache ") + (cache.last_was_hit() ? "hit " : "miss ") +
                 cache.path_for(s.rs->cartan(), s.delta).string());
  return t;
}

std::string pad(const std::string& s, std::size_t width) { return s + std::string(width - std::min(width, s.size()), ' '); }

/// Rows of cells, left-aligned columns separated by two spaces.
std::string text_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) line += c + 1 == row.size() ? row[c] : pad(row[c], width[c] + 2);
    out += line + "\n";
  }
  return out;
}

std::string csv_table(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out += (c ? "," : "") + io::csv_field(row[c]);
    out += "\n";
  }
  return out;
}

std::string piece_listing(const Options& opt, const std::vector<PieceIndex>& pieces, const Automorphism& delta) {
  if (opt.format == "json") {
    json list = json::array();
    for (const PieceIndex& p : pieces) list.push_back(io::piece_json(p, delta));
    return json{{"count", pieces.size()}, {"pieces", list}}.dump(2) + "\n";
  }
  std::vector<std::vector<std::string>> rows{{"J", "w", "j_inf", "dim"}};
  for (const PieceIndex& p : pieces)
    rows.push_back({p.J.to_string(), format_word(p.w), j_infinity(p.J, p.w, delta).to_string(),
                    std::to_string(piece_dimension(p, delta))});
  return opt.format == "csv" ? csv_table(rows) : text_table(rows);
}

std::string hasse_output(const Options& opt, const std::vector<PieceIndex>& pieces, const Automorphism& delta) {
  const auto edges = hasse_diagram(pieces, delta);
  if (opt.format == "dot") return io::hasse_dot(pieces, edges);
  if (opt.format == "json") return io::hasse_json(pieces, edges).dump(2) + "\n";
  std::vector<std::vector<std::string>> rows{{"from", "to"}};
  for (const HasseEdge& e : edges) rows.push_back({format_piece(pieces[e.from]), format_piece(pieces[e.to])});
  return opt.format == "csv" ? csv_table(rows) : text_table(rows);
}

std::string dims_text(const std::map<int, int>& counts) {
  std::string out;
  for (const auto& [dim, count] : counts) out += (out.empty() ? "" : " ") + std::to_string(dim) + ":" + std::to_string(count);
  return out.empty() ? "-" : out;
}

std::string cells_output(const Options& opt, const PieceIndex& p, const CellularReport& r) {
  if (opt.format == "json") {
    json doc = io::report_json(r);
    doc["piece"] = io::piece_ref_json(p);
    return doc.dump(2) + "\n";
  }
  if (opt.format == "csv") {
    std::vector<std::vector<std::string>> rows{{"dim", "count"}};
    for (const auto& [dim, count] : r.cells_by_dim) rows.push_back({std::to_string(dim), std::to_string(count)});
    return csv_table(rows);
  }
  std::ostringstream out;
  out << "piece: " << format_piece(p) << "\n";
  out << "finite: " << (r.finite ? "true" : "false") << "\n";
  if (r.violator) {
    out << "violator: u=" << format_word(r.violator->first) << " i2=" << r.violator->second.to_string() << "\n";
    return out.str();
  }
  out << "alpha_order:";
  for (const WeylElement& u : r.alpha_order) out << " " << format_word(u);
  out << "\ncells_by_dim: " << dims_text(r.cells_by_dim) << "\n";
  for (const CellGroupReport& g : r.groups) {
    out << "group u=" << format_word(g.group.u) << " i1=" << g.group.i1.to_string() << " i2=" << g.group.i2.to_string()
        << " top_dim=" << g.top_dim << " cells=" << dims_text(g.cells_by_dim) << "\n";
    for (const PieceIndex& q : g.group.members) out << "  " << format_piece(q) << "\n";
  }
  return out.str();
}

std::string matrix_output(const Options& opt, const std::string& relation, const std::vector<std::string>& labels,
                          const std::vector<std::vector<bool>>& m) {
  if (opt.format == "json") {
    json rows = json::array();
    for (const auto& row : m) {
      std::string bits;
      for (bool b : row) bits += b ? '1' : '0';
      rows.push_back(bits);
    }
    return json{{"relation", relation}, {"labels", labels}, {"matrix", rows}}.dump(2) + "\n";
  }
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{""};
  header.insert(header.end(), labels.begin(), labels.end());
  rows.push_back(header);
  for (std::size_t a = 0; a < m.size(); ++a) {
    std::vector<std::string> row{labels[a]};
    for (bool b : m[a]) row.push_back(b ? "1" : "0");
    rows.push_back(row);
  }
  return opt.format == "csv" ? csv_table(rows) : text_table(rows);
}

struct VerifyJob {
  const verify::Datum* datum;
  std::string property;
  verify::Property run;
};

int run_verify(const Options& opt, std::string& out) {
  std::vector<verify::Datum> data;
  if (!opt.type.empty() || !opt.cartan_file.empty()) {
    Session s = open_session(opt);
    data.push_back({s.name, verify::mapping_name(s.delta), s.rs, s.delta});
  } else {
    data = verify::standard_data(opt.max_rank);
  }
  std::vector<VerifyJob> jobs;
  for (const verify::Datum& d : data)
    for (const auto& [name, fn] : verify::property_suite()) {
      if (!opt.properties.empty() && std::find(opt.properties.begin(), opt.properties.end(), name) == opt.properties.end())
        continue;
      jobs.push_back({&d, name, fn});
    }
  for (const std::string& name : opt.properties) verify::find_property(name);

  std::vector<verify::PropertyResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      try {
        results[k] = jobs[k].run(*jobs[k].datum);
      } catch (const std::exception& e) {
        results[k].property = jobs[k].property;
        results[k].passed = false;
        results[k].detail = std::string("exception: ") + e.what();
      }
    }
  };
  const unsigned threads = opt.jobs > 0 ? static_cast<unsigned>(opt.jobs) : std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(threads, jobs.size()); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  bool ok = true;
  std::vector<std::vector<std::string>> rows{{"datum", "delta", "property", "result", "checks", "detail"}};
  json list = json::array();
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    const auto& r = results[k];
    const std::string verdict = r.passed ? "pass" : (r.informational ? "note" : "FAIL");
    if (!r.passed && !r.informational) ok = false;
    rows.push_back({jobs[k].datum->name, jobs[k].datum->delta_name, jobs[k].property, verdict, std::to_string(r.checks), r.detail});
    list.push_back({{"datum", jobs[k].datum->name},
                    {"delta", jobs[k].datum->delta_name},
                    {"property", jobs[k].property},
                    {"passed", r.passed},
                    {"informational", r.informational},
                    {"checks", r.checks},
                    {"detail", r.detail}});
  }
  if (opt.format == "json") {
    out = json{{"passed", ok}, {"results", list}}.dump(2) + "\n";
  } else if (opt.format == "csv") {
    out = csv_table(rows);
  } else {
    out = text_table(rows) + (ok ? "all properties hold\n" : "some properties FAILED\n");
  }
  return ok ? kOk : kPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Combinatorics of the G-stable pieces of a wonderful compactification"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--type", opt.type, "Cartan type such as A2, G2 or A1xA1");
  app.add_option("--cartan", opt.cartan_file, "JSON datum file ({\"cartan\": [[...]]}, {\"type\", \"rank\"} or factors)");
  app.add_option("--automorphism", opt.automorphism, "Diagram automorphism: id or 1:2,2:1 (1-based labels)");
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv", "dot", "text"}));
  app.add_option("--cache-dir", opt.cache_dir, "Directory for cached Bruhat matrices and piece lists");
  app.add_flag("-v,--verbose", opt.verbosity, "Progress and cache messages on stderr");

  auto* pieces = app.add_subcommand("pieces", "List every piece (J, w) with J_inf and dimension");
  auto* closure = app.add_subcommand("closure", "Pieces in the closure of one piece");
  closure->add_option("--piece", opt.piece, "Piece as \"J=1,2;w=121\"")->required();
  auto* hasse = app.add_subcommand("hasse", "Covering relations of the piece order");
  auto* cells = app.add_subcommand("cells", "Finiteness test and cell counts for a piece closure");
  cells->add_option("--piece", opt.piece, "Piece as \"J=1,2;w=121\"")->required();
  auto* order = app.add_subcommand("order", "Full relation matrix");
  order->add_option("--relation", opt.relation, "twisted (piece order) or bruhat (Weyl group)")
      ->check(CLI::IsMember({"twisted", "bruhat"}));
  auto* verify_cmd = app.add_subcommand("verify", "Run the property suite against the brute-force oracles");
  verify_cmd->add_option("--max-rank", opt.max_rank, "Largest rank in the built-in data set");
  verify_cmd->add_option("--property", opt.properties, "Only these properties (repeatable)");
  verify_cmd->add_option("--jobs", opt.jobs, "Worker threads (default: hardware concurrency)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    std::string out;
    int status = kOk;
    if (*verify_cmd) {
      require_format(opt, {"text", "json", "csv"}, "verify");
      status = run_verify(opt, out);
    } else {
      const Session s = open_session(opt);
      if (*pieces) {
        require_format(opt, {"text", "json", "csv"}, "pieces");
        out = piece_listing(opt, load_tables(opt, s).pieces, s.delta);
      } else if (*closure) {
        require_format(opt, {"text", "json", "csv", "dot"}, "closure");
        const PieceIndex p = io::parse_piece(opt.piece, s.rs, s.delta);
        const auto members = piece_closure(p, s.delta);
        out = opt.format == "dot" ? hasse_output(opt, members, s.delta) : piece_listing(opt, members, s.delta);
      } else if (*hasse) {
        out = hasse_output(opt, load_tables(opt, s).pieces, s.delta);
      } else if (*cells) {
        require_format(opt, {"text", "json", "csv"}, "cells");
        const PieceIndex p = io::parse_piece(opt.piece, s.rs, s.delta);
        out = cells_output(opt, p, cellular_report(p, s.delta));
      } else if (*order) {
        require_format(opt, {"text", "json", "csv"}, "order");
        const DatumTables t = load_tables(opt, s);
        std::vector<std::string> labels;
        if (opt.relation == "bruhat") {
          const WeylGroup group(s.rs);
          for (const WeylElement& w : group.elements()) labels.push_back(format_word(w));
          out = matrix_output(opt, "bruhat", labels, t.bruhat);
        } else {
          const std::size_t n = t.pieces.size();
          std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
          for (std::size_t b = 0; b < n; ++b) {
            const TwistedDominance above(t.pieces[b], s.delta);
            for (std::size_t a = 0; a < n; ++a)
              m[a][b] = t.pieces[a].J.is_subset_of(t.pieces[b].J) && above.contains(t.pieces[a].w);
          }
          for (const PieceIndex& p : t.pieces) labels.push_back(format_piece(p));
          out = matrix_output(opt, "twisted", labels, m);
        }
      }
    }
    std::cout << out << std::flush;
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    log(opt, "done in " + std::to_string(secs) + "s");
    return status;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
