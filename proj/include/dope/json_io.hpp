#ifndef DOPE_JSON_IO_HPP
#define DOPE_JSON_IO_HPP

// Canonical JSON forms shared by the CLI. nlohmann::json objects keep keys
// sorted, and dump() without indentation is the canonical byte form.

#include <string>
#include <vector>

#include "json.hpp"

#include "dope/census.hpp"
#include "dope/counting.hpp"
#include "dope/error.hpp"
#include "dope/exact_linalg.hpp"
#include "dope/polynomial.hpp"
#include "dope/synthesis.hpp"
#include "dope/types.hpp"

namespace dope::json_io {

using nlohmann::json;

inline json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

inline std::string canonical(const json& j) { return j.dump(); }

inline json to_json(const Rational& r) { return format_rational(r); }

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(BigInt(std::to_string(j.get<long long>())));
  throw Error(ErrorCode::InvalidInput, "rational must be a string \"p/q\" or an integer");
}

inline json to_json(const RationalPolynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  return json{{"coeffs", coeffs}};
}

inline RationalPolynomial polynomial_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw Error(ErrorCode::InvalidInput, "polynomial must be {\"coeffs\": [...]}");
  std::vector<Rational> c;
  for (const auto& e : j["coeffs"]) c.push_back(rational_from_json(e));
  return RationalPolynomial(std::move(c));
}

inline json to_json(const PointTuple& p) {
  json pts = json::array();
  for (const auto& x : p.points()) pts.push_back(to_json(x));
  return json{{"points", pts}};
}

inline PointTuple points_from_json(const json& j) {
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
    throw Error(ErrorCode::InvalidInput, "points must be {\"points\": [...]}");
  std::vector<Rational> v;
  for (const auto& e : j["points"]) v.push_back(rational_from_json(e));
  return PointTuple(std::move(v));
}

inline json to_json(const DopePattern& m) { return json{{"bits", m.row_strings()}}; }

inline DopePattern pattern_from_json(const json& j) {
  if (!j.is_object() || !j.contains("bits") || !j["bits"].is_array())
    throw Error(ErrorCode::InvalidInput, "pattern must be {\"bits\": [\"01..\", ...]}");
  std::vector<std::string> rows;
  for (const auto& r : j["bits"]) {
    if (!r.is_string()) throw Error(ErrorCode::InvalidInput, "pattern rows must be strings");
    rows.push_back(r.get<std::string>());
  }
  return DopePattern::from_rows(rows);
}

inline json to_json(const LimitCoefficients& c) {
  json c1 = json::object();
  json c2 = json::object();
  for (const auto& [k, v] : c.c1) c1[std::to_string(k)] = to_json(v);
  for (const auto& [k, v] : c.c2) c2[std::to_string(k)] = to_json(v);
  return json{{"c1", c1}, {"c2", c2}};
}

inline json to_json(const BoundValue& v, BoundKind kind) {
  if (const auto* q = std::get_if<Rational>(&v)) return to_json(*q);
  const auto& f = std::get<BigFloat>(v);
  return kind == BoundKind::small_m_log_bounds ? f.to_fixed(15) : f.to_general(20);
}

inline json to_json(const BoundReport& r) {
  json j;
  j["m"] = r.m;
  j["n"] = r.n;
  j["kind"] = std::string(to_string(r.kind));
  j["lower"] = r.lower ? to_json(*r.lower, r.kind) : json(nullptr);
  j["upper"] = r.upper ? to_json(*r.upper, r.kind) : json(nullptr);
  return j;
}

inline json to_json(const SynthesisCertificate& c) {
  return json{{"target", to_json(c.target)},
              {"points", to_json(c.points)},
              {"poly", to_json(c.poly)},
              {"prepended_columns", c.prepended_columns},
              {"padded_row", c.padded_row},
              {"attempts_used", c.attempts_used},
              {"verified", c.verified}};
}

inline SynthesisCertificate certificate_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "certificate must be an object");
  try {
    SynthesisCertificate c;
    c.target = pattern_from_json(j.at("target"));
    c.points = points_from_json(j.at("points"));
    c.poly = polynomial_from_json(j.at("poly"));
    c.prepended_columns = j.at("prepended_columns").get<std::size_t>();
    c.padded_row = j.at("padded_row").get<bool>();
    c.attempts_used = j.at("attempts_used").get<std::size_t>();
    c.verified = j.at("verified").get<bool>();
    return c;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("bad certificate: ") + e.what());
  }
}

inline json to_json(const LeadingTerms& t) {
  return json{{"n", t.n},
              {"m", t.m},
              {"exact", false},
              {"top_coefficient", t.top_coefficient.get_str()},
              {"second_coefficient", t.second_coefficient.get_str()},
              {"leading_value", t.value.get_str()},
              {"expansion", t.top_coefficient.get_str() + "*C(m," + std::to_string(max_nonzero_rows(t.n)) + ") + " +
                                t.second_coefficient.get_str() + "*C(m," +
                                std::to_string(static_cast<long>(max_nonzero_rows(t.n)) - 1) + ") + " + t.error_term},
              {"error_term", t.error_term}};
}

}  // namespace dope::json_io

#endif  // DOPE_JSON_IO_HPP
