// Command-line front end: JSON in, JSON/NDJSON out.
//
// Exit codes: 0 success, 1 property false, 2 usage or precondition error,
// 3 synthesis retries exhausted.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dope/dope.hpp"
#include "dope/json_io.hpp"

namespace {

using dope::json_io::json;

enum class LogLevel { quiet, info, debug };

LogLevel log_level() {
  const char* env = std::getenv("DOPE_LOG");
  if (!env) return LogLevel::info;
  const std::string v(env);
  if (v == "quiet") return LogLevel::quiet;
  if (v == "debug") return LogLevel::debug;
  return LogLevel::info;
}

void diag(LogLevel at, const std::string& msg) {
  const LogLevel level = log_level();
  if (level == LogLevel::quiet) return;
  if (at == LogLevel::debug && level != LogLevel::debug) return;
  std::cerr << "dope: " << msg << '\n';
}

// Reads a file, or standard input for "-". Standard input is consumed once
// and shared by every option that names it.
class InputSource {
 public:
  json load(const std::string& where) {
    if (where.empty()) throw dope::Error(dope::ErrorCode::InvalidInput, "missing input path");
    if (where == "-") {
      if (!stdin_text_) {
        stdin_text_ = std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
      }
      return dope::json_io::parse(*stdin_text_);
    }
    std::ifstream in(where);
    if (!in) throw dope::Error(dope::ErrorCode::InvalidInput, "cannot open '" + where + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return dope::json_io::parse(ss.str());
  }

 private:
  std::optional<std::string> stdin_text_;
};

// Accepts a bare polynomial document or anything carrying a "poly" member
// (a synthesis certificate, for instance).
dope::RationalPolynomial poly_from_document(const json& doc) {
  if (doc.is_object() && doc.contains("poly")) return dope::json_io::polynomial_from_json(doc["poly"]);
  return dope::json_io::polynomial_from_json(doc);
}

dope::PointTuple points_from_document(const json& doc) {
  if (doc.is_object() && doc.contains("points") && doc["points"].is_object())
    return dope::json_io::points_from_json(doc["points"]);
  return dope::json_io::points_from_json(doc);
}

dope::DopePattern pattern_from_document(const json& doc) {
  if (doc.is_object() && doc.contains("target")) return dope::json_io::pattern_from_json(doc["target"]);
  return dope::json_io::pattern_from_json(doc);
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    for (char ch : item)
      if (ch < '0' || ch > '9')
        throw dope::Error(dope::ErrorCode::InvalidInput, "index lists are comma-separated nonnegative integers");
    out.push_back(static_cast<std::size_t>(std::stoull(item)));
  }
  return out;
}

json rowset_json(const dope::RowSet& s) {
  std::string row;
  for (auto b : s.indicator()) row.push_back(b ? '1' : '0');
  return json{{"n", s.bound()}, {"members", s.members()}, {"row", row}};
}

void emit(const json& j) { std::cout << dope::json_io::canonical(j) << '\n'; }

struct Options {
  std::size_t m = 0;
  std::size_t n = 0;
  std::optional<std::size_t> k;
  std::uint64_t t = 0;
  std::size_t d = 0;
  std::size_t a = 0;
  std::uint64_t seed = 0;
  std::size_t retries = 20;
  std::optional<std::size_t> limit;
  bool saturate = false;
  bool carry = false;
  std::string kind = "generic";
  std::string matrix;
  std::string poly;
  std::string points;
  std::string seq;
  std::string s1;
  std::string s2;
  std::string g;
  std::string h;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dope: exact dope-matrix computation, enumeration and synthesis"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check-safe", "decide whether a pattern is safe (generic)");
  auto* generic = app.add_subcommand("is-generic", "alias of check-safe");
  for (auto* sc : {check, generic}) sc->add_option("--matrix", o.matrix, "pattern JSON file or -")->required();

  auto* enumerate = app.add_subcommand("enumerate", "stream every safe m x (n+1) pattern as NDJSON");
  enumerate->add_option("--m", o.m)->required();
  enumerate->add_option("--n", o.n)->required();
  enumerate->add_option("--k", o.k, "only patterns with exactly k ones");

  auto* count = app.add_subcommand("count", "number of safe patterns (optionally with k ones)");
  count->add_option("--m", o.m)->required();
  count->add_option("--n", o.n)->required();
  count->add_option("--k", o.k);

  auto* bounds = app.add_subcommand("bounds", "closed-form bound calculators");
  bounds->add_option("--kind", o.kind, "generic | log | upper | gross")
      ->check(CLI::IsMember({"generic", "log", "upper", "gross"}));
  bounds->add_option("--m", o.m)->required();
  bounds->add_option("--n", o.n)->required();
  bounds->add_option("--a", o.a, "rows of the limited seed matrix (gross)");
  bounds->add_option("--t", o.t, "row limit T (gross)");

  auto* compute = app.add_subcommand("compute", "dope matrix of a polynomial at points");
  compute->add_option("--poly", o.poly)->required();
  compute->add_option("--points", o.points)->required();

  auto* weight = app.add_subcommand("row-weight", "max vanishing derivatives at any complex point");
  weight->add_option("--poly", o.poly)->required();

  auto* synth = app.add_subcommand("synth", "certified polynomial witness for a safe pattern");
  synth->add_option("--matrix", o.matrix)->required();
  synth->add_option("--seed", o.seed);
  synth->add_option("--retries", o.retries)->check(CLI::PositiveNumber);
  synth->add_option("--limit", o.limit, "require at most T vanishing derivatives per point");
  synth->add_flag("--saturate", o.saturate, "with --limit: complete a non-saturated pattern first");
  synth->add_option("--points", o.points, "solve once at these points instead of sampling")->excludes("--limit");

  auto* combine = app.add_subcommand("combine", "merge two rows (window formula or carry process)");
  combine->add_option("--s1", o.s1)->required();
  combine->add_option("--s2", o.s2)->required();
  combine->add_option("--n", o.n)->required();
  combine->add_flag("--carry", o.carry, "run the carry process instead of the window formula");

  auto* cycle = app.add_subcommand("cycle", "count t-dominating cyclic shifts");
  cycle->add_option("--seq", o.seq, "string of 0/1")->required();
  cycle->add_option("--t", o.t)->required();

  auto* gv = app.add_subcommand("gv-rank", "full-rank check of a binomial matrix under prefix dominance");
  gv->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  gv->add_option("--g", o.g, "comma-separated G")->required();
  gv->add_option("--h", o.h, "comma-separated H")->required();

  auto* limit = app.add_subcommand("limit-coeffs", "coefficients of the derivative-as-limit identity");
  limit->add_option("--d", o.d)->required();
  limit->add_option("--s1", o.s1)->required();
  limit->add_option("--s2", o.s2)->required();

  auto* census = app.add_subcommand("census", "|D_n^m| (exact for n <= 2, leading terms otherwise)");
  census->add_option("--n", o.n)->required();
  census->add_option("--m", o.m)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    diag(LogLevel::info, e.what());
    return 2;
  }

  InputSource input;
  try {
    if (check->parsed() || generic->parsed()) {
      const auto pat = pattern_from_document(input.load(o.matrix));
      const bool safe = dope::is_safe(pat);
      emit(json{{"safe", safe}});
      return safe ? 0 : 1;
    }
    if (enumerate->parsed()) {
      dope::SafeEnumerator e(o.m, o.n, o.k);
      std::size_t emitted = 0;
      while (auto p = e.next()) {
        emit(dope::json_io::to_json(*p));
        ++emitted;
      }
      diag(LogLevel::debug, "enumerated " + std::to_string(emitted) + " patterns");
      return 0;
    }
    if (count->parsed()) {
      const auto v = o.k ? dope::count_generic_k(o.m, o.n, *o.k) : dope::count_generic_total(o.m, o.n);
      emit(json(v.get_str()));
      return 0;
    }
    if (bounds->parsed()) {
      dope::BoundReport r;
      if (o.kind == "generic") r = dope::generic_bounds(o.m, o.n);
      else if (o.kind == "log") r = dope::small_m_log_bounds(o.m, o.n);
      else if (o.kind == "upper") r = dope::upper_bound_report(o.m, o.n);
      else r = dope::grossbound_report(o.m, o.n, o.a, static_cast<std::size_t>(o.t));
      emit(dope::json_io::to_json(r));
      return 0;
    }
    if (compute->parsed()) {
      const auto poly = poly_from_document(input.load(o.poly));
      const auto pts = points_from_document(input.load(o.points));
      emit(dope::json_io::to_json(dope::dope_matrix(poly, pts)));
      return 0;
    }
    if (weight->parsed()) {
      std::cout << dope::max_row_weight(poly_from_document(input.load(o.poly))) << '\n';
      return 0;
    }
    if (synth->parsed()) {
      const auto pat = pattern_from_document(input.load(o.matrix));
      if (!o.points.empty()) {
        const auto cert = dope::synthesize_at(pat, points_from_document(input.load(o.points)));
        if (!cert) throw dope::Error(dope::ErrorCode::RetriesExhausted, "the given points admit no witness");
        emit(dope::json_io::to_json(*cert));
        return 0;
      }
      const auto cert = o.limit ? dope::synthesize_limited(pat, *o.limit, o.seed, o.retries, o.saturate)
                                : dope::synthesize(pat, o.seed, o.retries);
      diag(LogLevel::debug, "verified after " + std::to_string(cert.attempts_used) + " attempt(s)");
      emit(dope::json_io::to_json(cert));
      return 0;
    }
    if (combine->parsed()) {
      const dope::RowSet s1(o.n, parse_index_list(o.s1));
      const dope::RowSet s2(o.n, parse_index_list(o.s2));
      emit(rowset_json(o.carry ? dope::combine_rows_carry(s1, s2, o.n) : dope::combine_rows(s1, s2, o.n)));
      return 0;
    }
    if (cycle->parsed()) {
      const auto s = dope::BinarySequence::from_string(o.seq);
      const std::size_t shifts = dope::count_dominating_shifts(s, o.t);
      const std::uint64_t a = s.zeros();
      const std::uint64_t b = s.ones();
      json j{{"count", shifts}, {"dominating", dope::is_t_dominating(s, o.t)}, {"zeros", a}, {"ones", b}};
      j["expected"] = a >= o.t * b ? json(a - o.t * b) : json(nullptr);
      emit(j);
      return 0;
    }
    if (gv->parsed()) {
      const bool full = dope::gv_rank_check(parse_index_list(o.g), parse_index_list(o.h));
      emit(json{{"full_rank", full}});
      return full ? 0 : 1;
    }
    if (limit->parsed()) {
      const dope::RowSet s1(o.d, parse_index_list(o.s1));
      const dope::RowSet s2(o.d, parse_index_list(o.s2));
      emit(dope::json_io::to_json(dope::derivative_limit_coeffs(o.d, s1, s2)));
      return 0;
    }
    if (census->parsed()) {
      if (o.n <= 2) {
        const auto v = dope::census_count(o.n, o.m, dope::v_table_small(o.n));
        emit(json{{"n", o.n}, {"m", o.m}, {"exact", true}, {"count", v.get_str()}});
      } else {
        emit(dope::json_io::to_json(dope::census_leading_terms(o.n, o.m)));
      }
      return 0;
    }
  } catch (const dope::Error& e) {
    diag(LogLevel::info, e.what());
    return e.code() == dope::ErrorCode::RetriesExhausted ? 3 : 2;
  } catch (const std::exception& e) {
    diag(LogLevel::info, std::string("internal error: ") + e.what());
    return 2;
  }
  return 2;
}
