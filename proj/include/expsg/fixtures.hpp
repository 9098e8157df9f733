#pragma once

#include <algorithm>
#include <filesystem>
#include <future>
#include <string>
#include <vector>

#include "expsg/exponent_semigroup.hpp"
#include "expsg/io.hpp"
#include "expsg/semigroup.hpp"

namespace expsg {

/// A matrix with its declared exponent semigroup. An empty generator list
/// declares {0}.
struct Fixture {
  std::string name;
  std::string path;
  RationalMatrix matrix;
  SubsemigroupDesc expected = SubsemigroupDesc::trivial();
  Natural matricial_dimension = 0;
};

struct FixtureOutcome {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
  std::string error;
};

inline Fixture fixture_from_json(const io::json& j, std::string path = {}) {
  Fixture f;
  f.path = std::move(path);
  f.name = j.value("name", std::filesystem::path(f.path).stem().string());
  f.matrix = io::matrix_from_json(j.at("matrix"));
  const auto& g = j.at("expected_generators");
  f.expected = g.empty() ? SubsemigroupDesc::trivial() : SubsemigroupDesc::from_generators(io::generators_from_json(g));
  f.matricial_dimension = j.value("matricial_dimension", Natural{0});
  return f;
}

/// Every *.json file in `dir`, sorted by file name.
inline std::vector<Fixture> load_fixtures(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw ParseError("fixture directory not found: " + dir);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw ParseError("no fixtures in " + dir);
  std::vector<Fixture> out;
  for (const auto& p : files) {
    try {
      out.push_back(fixture_from_json(io::parse_json(io::read_file(p.string())), p.string()));
    } catch (const std::exception& e) {
      throw ParseError(p.filename().string() + ": " + e.what());
    }
  }
  return out;
}

inline FixtureOutcome check_fixture(const Fixture& f, const StateBudget& budget = {}) {
  FixtureOutcome o;
  o.name = f.name;
  o.expected = f.expected.str();
  try {
    const ExponentAnalysis a = exponent_semigroup(f.matrix, budget);
    if (!a.final) {
      o.error = "state budget exhausted";
      return o;
    }
    o.computed = a.classification->str();
    o.pass = *a.classification == f.expected && a.certificates_agree();
    if (!a.certificates_agree()) o.error = "certificate mismatch";
  } catch (const std::exception& e) {
    o.error = e.what();
  }
  return o;
}

/// One task per fixture; outcomes in input order.
inline std::vector<FixtureOutcome> verify_fixtures(const std::vector<Fixture>& fixtures, const StateBudget& budget = {}) {
  std::vector<std::future<FixtureOutcome>> jobs;
  jobs.reserve(fixtures.size());
  for (const Fixture& f : fixtures) {
    jobs.push_back(std::async(std::launch::async, [&f, budget] { return check_fixture(f, budget); }));
  }
  std::vector<FixtureOutcome> out;
  out.reserve(jobs.size());
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace expsg
