#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "expsg/constructions.hpp"
#include "expsg/dimension_bounds.hpp"
#include "expsg/errors.hpp"
#include "expsg/exponent_semigroup.hpp"
#include "expsg/matrix.hpp"
#include "expsg/power_integrality.hpp"
#include "expsg/semigroup.hpp"

namespace expsg::io {

using json = nlohmann::json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

// ---- matrices ---------------------------------------------------------------

inline std::string entry_string(const Rational& r) { return r.str(); }

/// {"dim": d, "entries": [["p/q", ...], ...]}
inline json matrix_to_json(const RationalMatrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(entry_string(a(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"dim", a.rows()}, {"entries", std::move(rows)}};
}

inline json matrix_to_json(const IntegerMatrix& a) { return matrix_to_json(to_rational(a)); }

/// Accepts the interchange object, or any object with a "matrix" member
/// holding one. Entries may be strings "p/q" / "p" or JSON integers.
inline RationalMatrix matrix_from_json(const json& j) {
  if (j.is_object() && !j.contains("entries") && j.contains("matrix")) return matrix_from_json(j.at("matrix"));
  if (!j.is_object() || !j.contains("entries")) throw ParseError("matrix: expected an object with \"entries\"");
  const json& rows = j.at("entries");
  if (!rows.is_array() || rows.empty()) throw ParseError("matrix: \"entries\" must be a nonempty array of rows");
  const std::size_t d = rows.size();
  if (j.contains("dim")) {
    if (!j.at("dim").is_number_unsigned() || j.at("dim").get<std::size_t>() != d) {
      throw ParseError("matrix: \"dim\" does not match the number of rows (" + std::to_string(d) + ")");
    }
  }
  RationalMatrix a(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    const json& row = rows[r];
    if (!row.is_array() || row.size() != d) {
      throw ParseError("matrix: row " + std::to_string(r) + " must have " + std::to_string(d) + " entries");
    }
    for (std::size_t c = 0; c < d; ++c) {
      const json& e = row[c];
      const std::string where = "matrix entry (" + std::to_string(r) + ", " + std::to_string(c) + ")";
      try {
        if (e.is_string()) {
          a(r, c) = Rational::parse(e.get<std::string>());
        } else if (e.is_number_integer()) {
          a(r, c) = Rational(BigInt(e.dump()));
        } else {
          throw ParseError("expected a string \"p/q\" or an integer");
        }
      } catch (const Error& err) {
        throw ParseError(where + ": " + err.what());
      }
    }
  }
  return a;
}

inline RationalMatrix load_matrix(const std::string& path) { return matrix_from_json(parse_json(read_file(path))); }

// ---- semigroups -------------------------------------------------------------

inline std::vector<Natural> generators_from_json(const json& j) {
  const json& g = j.is_object() ? j.at("generators") : j;
  if (!g.is_array() || g.empty()) throw ParseError("\"generators\" must be a nonempty array");
  std::vector<Natural> out;
  for (const auto& x : g) {
    if (!x.is_number_integer()) throw ParseError("generators must be integers");
    out.push_back(x.get<Natural>());
  }
  return out;
}

/// Comma-separated list such as "6,9,20".
inline std::vector<Natural> parse_generator_list(const std::string& text) {
  std::vector<Natural> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto t = detail::trim(item);
    if (t.empty()) throw ParseError("empty item in generator list \"" + text + "\"");
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(std::string(t), &pos);
    } catch (const std::exception&) {
      throw ParseError("not an integer: \"" + std::string(t) + "\"");
    }
    if (pos != t.size()) throw ParseError("not an integer: \"" + std::string(t) + "\"");
    out.push_back(static_cast<Natural>(v));
  }
  if (out.empty()) throw ParseError("empty generator list");
  return out;
}

/// Canonical description plus the invariants of the numerical part
/// (S / content). Undefined values are null.
inline json semigroup_to_json(const SubsemigroupDesc& s) {
  json j;
  j["kind"] = to_string(s.kind());
  j["content"] = s.content();
  j["generators"] = s.minimal_generators();
  j["minimal_generators"] = s.minimal_generators();
  if (s.is_trivial()) {
    for (const char* k : {"frobenius", "gaps", "multiplicity", "embedding_dimension", "symmetric", "pseudosymmetric"})
      j[k] = nullptr;
    return j;
  }
  const NumericalData& p = s.part();
  j["frobenius"] = p.frobenius();
  j["gaps"] = p.gaps();
  j["multiplicity"] = p.multiplicity();
  j["embedding_dimension"] = p.embedding_dimension();
  if (p.is_full()) {
    j["symmetric"] = nullptr;
    j["pseudosymmetric"] = nullptr;
  } else {
    const auto part = SubsemigroupDesc::from_numerical(1, p);
    j["symmetric"] = is_symmetric(part);
    j["pseudosymmetric"] = is_pseudosymmetric(part);
  }
  return j;
}

/// "⟨3, 5, 7⟩, g = 4, gaps = {1, 2, 4}"
inline std::string semigroup_human(const SubsemigroupDesc& s) {
  std::ostringstream os;
  os << s.str();
  if (s.is_trivial()) return os.str();
  if (s.content() >= 2) os << " = " << s.content() << " * S'";
  const NumericalData& p = s.part();
  os << ", g = " << p.frobenius() << ", gaps = {";
  for (std::size_t i = 0; i < p.gaps().size(); ++i) os << (i ? ", " : "") << p.gaps()[i];
  os << "}";
  return os.str();
}

// ---- reports ----------------------------------------------------------------

inline json witness_to_json(const Witness& w) {
  return {{"kind", to_string(w.kind)}, {"index", w.index}, {"value", w.value.str()}, {"text", w.describe()}};
}

inline json tfae_to_json(const TfaeReport& r) {
  json j;
  j["char_poly"] = r.char_poly.str();
  j["char_poly_integral"] = r.char_poly_integral;
  j["min_poly"] = r.min_poly.str();
  j["min_poly_integral"] = r.min_poly_integral;
  j["uniform_denominator"] = r.uniform_denominator ? json(r.uniform_denominator->get_str()) : json(nullptr);
  if (r.similarity) {
    j["similarity"] = {{"S", matrix_to_json(r.similarity->s)}, {"B", matrix_to_json(r.similarity->b)}};
  } else {
    j["similarity"] = nullptr;
  }
  j["trace_bound"] = r.trace_bound;
  j["trace_integral_upto"] = r.trace_integral_upto;
  // bounded denominators, not "some power is integral"
  j["verdict"] = r.verdict;
  j["witnesses"] = json::array();
  for (const auto& w : r.witnesses) j["witnesses"].push_back(witness_to_json(w));
  return j;
}

inline json analysis_to_json(const ExponentAnalysis& a) {
  json j;
  j["final"] = a.final;
  j["termination"] = to_string(a.termination);
  j["classification"] = a.classification ? semigroup_to_json(*a.classification) : json(nullptr);
  j["power_integral"] = a.classification ? json(!a.classification->is_trivial()) : json(nullptr);
  j["char_poly"] = a.char_poly.str();
  j["uniform_denominator"] = a.uniform_denominator ? json(a.uniform_denominator->get_str()) : json(nullptr);
  j["preperiod"] = a.preperiod;
  j["period"] = a.period;
  j["state_preperiod"] = a.state_preperiod ? json(*a.state_preperiod) : json(nullptr);
  j["state_period"] = a.state_period ? json(*a.state_period) : json(nullptr);
  j["run_exit_at"] = a.run_exit_at ? json(*a.run_exit_at) : json(nullptr);
  j["states_explored"] = a.states_explored;
  std::string prefix;
  for (bool b : a.membership_prefix) prefix.push_back(b ? '1' : '0');
  j["membership_prefix"] = prefix;
  j["certificates"] = json::array();
  for (const auto& c : a.certificates) {
    j["certificates"].push_back({{"n", c.n}, {"claimed", c.claimed}, {"verified", c.verified}});
  }
  return j;
}

inline json construction_to_json(const ConstructionResult& r) {
  json j;
  j["family"] = r.family;
  j["claimed"] = semigroup_to_json(r.claimed);
  j["verified"] = r.verified;
  j["matrix"] = matrix_to_json(r.matrix);
  if (r.vector) {
    j["vector"] = {{"entries", r.vector->entries}, {"base", r.vector->base}};
  } else {
    j["vector"] = nullptr;
  }
  return j;
}

inline json bounds_to_json(const DimensionBounds& b) {
  json j;
  j["lower"] = b.lower;
  j["upper"] = b.upper;
  j["justifications"] = json::array();
  for (const auto& x : b.justifications) {
    j["justifications"].push_back(
        {{"side", to_string(x.side)}, {"value", x.value}, {"rule", to_string(x.rule)}, {"cite", x.cite}});
  }
  return j;
}

}  // namespace expsg::io
