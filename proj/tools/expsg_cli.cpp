#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "expsg/expsg.hpp"
#include "expsg/fixtures.hpp"
#include "expsg/io.hpp"

#ifndef EXPSG_FIXTURE_DIR
#define EXPSG_FIXTURE_DIR "fixtures/golden"
#endif

namespace {

using expsg::io::json;

enum Exit { kOk = 0, kUsage = 1, kBudget = 2, kNegative = 3 };

struct Config {
  std::string format = "json";
  std::size_t trace_bound = 0;  // 0: twice the dimension
  std::size_t state_budget = 1'000'000;
  long base = 2;
  std::string path;
  std::string inline_text;
  std::string generators;
  std::string family = "auto";
  std::string output;
  std::string fixtures_dir = EXPSG_FIXTURE_DIR;
};

expsg::StateBudget budget_of(const Config& c) {
  expsg::StateBudget b;
  b.max_states = c.state_budget;
  return b;
}

bool human(const Config& c) { return c.format == "human"; }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string read_input(const Config& c) {
  if (!c.inline_text.empty()) return c.inline_text;
  if (c.path.empty() || c.path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  return expsg::io::read_file(c.path);
}

expsg::RationalMatrix read_matrix(const Config& c) {
  return expsg::io::matrix_from_json(expsg::io::parse_json(read_input(c)));
}

// --generators wins; otherwise a {"generators": [...]} document. All zeros mean {0}.
expsg::SubsemigroupDesc read_semigroup(const Config& c) {
  std::vector<expsg::Natural> g = c.generators.empty()
                                      ? expsg::io::generators_from_json(expsg::io::parse_json(read_input(c)))
                                      : expsg::io::parse_generator_list(c.generators);
  std::erase(g, 0);
  if (g.empty()) return expsg::SubsemigroupDesc::trivial();
  return expsg::SubsemigroupDesc::from_generators(g);
}

std::size_t trace_bound_of(const Config& c, const expsg::RationalMatrix& a) {
  return c.trace_bound == 0 ? 2 * a.dim() : c.trace_bound;
}

void print_analysis_human(const expsg::ExponentAnalysis& a) {
  std::cout << "characteristic polynomial: " << a.char_poly << "\n";
  if (a.uniform_denominator) std::cout << "uniform denominator m = " << *a.uniform_denominator << "\n";
  std::cout << "termination: " << to_string(a.termination) << " after " << a.states_explored << " states\n";
  if (!a.final) {
    std::cout << "S(A): undetermined (state budget exhausted)\n";
    return;
  }
  std::cout << "S(A) = " << expsg::io::semigroup_human(*a.classification) << "\n";
  std::cout << "power integral: " << (a.classification->is_trivial() ? "no" : "yes") << "\n";
  std::cout << "membership repeats with period " << a.period << " from " << a.preperiod << "\n";
  std::cout << "certificates:";
  for (const auto& c : a.certificates) std::cout << " " << c.n << (c.verified ? "+" : "-");
  std::cout << "\n";
}

void print_tfae_human(const expsg::TfaeReport& r) {
  std::cout << "uniform denominator conditions: " << (r.verdict ? "hold" : "fail") << "\n";
  std::cout << "  char poly " << r.char_poly << (r.char_poly_integral ? " in Z[x]" : " not in Z[x]") << "\n";
  std::cout << "  min poly  " << r.min_poly << (r.min_poly_integral ? " in Z[x]" : " not in Z[x]") << "\n";
  std::cout << "  traces integral up to k = " << r.trace_integral_upto << " (bound " << r.trace_bound << ")\n";
  if (r.uniform_denominator) std::cout << "  uniform denominator " << *r.uniform_denominator << "\n";
  for (const auto& w : r.witnesses) std::cout << "  witness: " << w.describe() << "\n";
}

int matrix_analyze(const Config& c) {
  const auto a = read_matrix(c);
  const auto tfae = expsg::tfae_report(a, trace_bound_of(c, a));
  const auto quick = expsg::quick_reject(a);
  const auto analysis = expsg::exponent_semigroup(a, budget_of(c));
  if (human(c)) {
    print_tfae_human(tfae);
    if (quick) std::cout << "quick reject: " << quick->describe() << "\n";
    print_analysis_human(analysis);
  } else {
    json j;
    j["dim"] = a.dim();
    j["tfae"] = expsg::io::tfae_to_json(tfae);
    j["quick_reject"] = quick ? expsg::io::witness_to_json(*quick) : json(nullptr);
    j["analysis"] = expsg::io::analysis_to_json(analysis);
    emit(j);
  }
  return analysis.final ? kOk : kBudget;
}

int matrix_power_integral(const Config& c) {
  const auto a = read_matrix(c);
  const auto tfae = expsg::tfae_report(a, trace_bound_of(c, a));
  if (human(c)) {
    print_tfae_human(tfae);
  } else {
    emit(expsg::io::tfae_to_json(tfae));
  }
  return kOk;
}

int matrix_similar_integral(const Config& c) {
  const auto a = read_matrix(c);
  try {
    const auto sim = expsg::integral_similarity(a);
    if (human(c)) {
      std::cout << "A = S B S^-1 with\nS =\n" << sim.s << "B =\n" << sim.b;
    } else {
      emit({{"S", expsg::io::matrix_to_json(sim.s)}, {"B", expsg::io::matrix_to_json(sim.b)}});
    }
    return kOk;
  } catch (const expsg::NoIntegralSpectrum& e) {
    if (human(c)) {
      std::cout << "no integral similarity: " << e.what() << "\n";
    } else {
      emit({{"S", nullptr}, {"B", nullptr}, {"reason", e.what()}});
    }
    return kNegative;
  }
}

int semigroup_info(const Config& c) {
  const auto s = read_semigroup(c);
  if (human(c)) {
    std::cout << expsg::io::semigroup_human(s) << "\n";
  } else {
    emit(expsg::io::semigroup_to_json(s));
  }
  return kOk;
}

int semigroup_bounds(const Config& c) {
  const auto s = read_semigroup(c);
  const auto b = expsg::bounds(s);
  if (human(c)) {
    std::cout << s.str() << ": " << b.lower << " <= dim <= " << b.upper << "\n";
    for (const auto& j : b.justifications) {
      std::cout << "  " << to_string(j.side) << " " << j.value << "  " << to_string(j.rule) << ": " << j.cite << "\n";
    }
  } else {
    emit(expsg::io::bounds_to_json(b));
  }
  return kOk;
}

int construct(const Config& c) {
  const auto s = read_semigroup(c);
  if (s.is_trivial()) {
    throw expsg::TrivialSemigroupUnrepresentable("{0} has no construction here; the 1x1 matrix [1/2] realizes it");
  }
  std::optional<expsg::ConstructionResult> r;
  const auto fam = expsg::matching_2x2_family(s);
  if (c.family == "2x2") {
    if (!fam) throw expsg::PreconditionViolation(s.str() + " is not in a closed-form 2x2 family");
    r = expsg::family_2x2(fam->first, fam->second, budget_of(c));
  } else if (c.family == "auto" && fam) {
    r = expsg::family_2x2(fam->first, fam->second, budget_of(c));
  } else {
    r = expsg::represent(s, c.base, budget_of(c));
  }
  const json j = expsg::io::construction_to_json(*r);
  if (!c.output.empty()) {
    std::ofstream out(c.output);
    if (!out) throw expsg::ParseError("cannot write " + c.output);
    out << j.dump(2) << "\n";
  }
  if (human(c)) {
    std::cout << r->claimed.str() << " realized by a " << r->matrix.rows() << "x" << r->matrix.cols() << " "
              << r->family << " matrix, verified: " << (r->verified ? "yes" : "no") << "\n";
    if (r->vector && !r->vector->entries.empty()) {
      std::cout << "superdiagonal exponents:";
      for (int x : r->vector->entries) std::cout << " " << x;
      std::cout << "\n";
    }
  } else if (c.output.empty()) {
    emit(j);
  }
  if (r->analysis && !r->analysis->final) return kBudget;
  return r->verified ? kOk : kNegative;
}

int verify_fixtures(const Config& c) {
  const auto fixtures = expsg::load_fixtures(c.fixtures_dir);
  const auto outcomes = expsg::verify_fixtures(fixtures, budget_of(c));
  std::size_t passed = 0;
  json rows = json::array();
  for (const auto& o : outcomes) {
    passed += o.pass ? 1 : 0;
    if (human(c)) {
      std::cout << (o.pass ? "PASS " : "FAIL ") << o.name << ": expected " << o.expected << ", computed "
                << (o.computed.empty() ? "-" : o.computed) << (o.error.empty() ? "" : " (" + o.error + ")") << "\n";
    }
    rows.push_back({{"name", o.name}, {"expected", o.expected}, {"computed", o.computed}, {"pass", o.pass},
                    {"error", o.error}});
  }
  if (human(c)) {
    std::cout << passed << "/" << outcomes.size() << " pass\n";
  } else {
    emit({{"passed", passed}, {"total", outcomes.size()}, {"fixtures", rows}});
  }
  return passed == outcomes.size() ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exponent semigroups of rational matrices"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;

  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "human"}));
  app.add_option("--trace-bound", cfg.trace_bound, "Largest k for the tr(A^k) test (default 2*dim)");
  app.add_option("--state-budget", cfg.state_budget, "Maximum residue states to explore")
      ->check(CLI::PositiveNumber);

  auto add_matrix_input = [&](CLI::App* sub) {
    sub->add_option("path", cfg.path, "Matrix JSON file (- for stdin)");
    sub->add_option("--inline", cfg.inline_text, "Matrix JSON given on the command line");
  };
  auto add_semigroup_input = [&](CLI::App* sub) {
    sub->add_option("--generators", cfg.generators, "Comma-separated generators, e.g. 6,9,20");
    sub->add_option("path", cfg.path, "Semigroup JSON file {\"generators\": [...]}");
    sub->add_option("--inline", cfg.inline_text, "Semigroup JSON given on the command line");
  };

  int (*handler)(const Config&) = nullptr;

  auto* matrix = app.add_subcommand("matrix", "Matrix commands");
  matrix->require_subcommand(1);
  auto* analyze = matrix->add_subcommand("analyze", "Exponent semigroup and power-integrality report");
  add_matrix_input(analyze);
  analyze->callback([&] { handler = matrix_analyze; });
  auto* power = matrix->add_subcommand("power-integral", "Equivalent uniform-denominator conditions");
  add_matrix_input(power);
  power->callback([&] { handler = matrix_power_integral; });
  auto* similar = matrix->add_subcommand("similar-integral", "Integral matrix B with A = S B S^-1");
  add_matrix_input(similar);
  similar->callback([&] { handler = matrix_similar_integral; });

  auto* semigroup = app.add_subcommand("semigroup", "Semigroup commands");
  semigroup->require_subcommand(1);
  auto* info = semigroup->add_subcommand("info", "Invariants of a semigroup");
  add_semigroup_input(info);
  info->callback([&] { handler = semigroup_info; });
  auto* bnds = semigroup->add_subcommand("bounds", "Bounds on the matricial dimension");
  add_semigroup_input(bnds);
  bnds->callback([&] { handler = semigroup_bounds; });

  auto* cons = app.add_subcommand("construct", "Build a matrix realizing a semigroup");
  add_semigroup_input(cons);
  cons->add_option("--base", cfg.base, "Superdiagonal base b, |b| >= 2");
  cons->add_option("--family", cfg.family, "Construction family")->check(CLI::IsMember({"auto", "nilpotent", "2x2"}));
  cons->add_option("--output,-o", cfg.output, "Write the result JSON to this file");
  cons->callback([&] { handler = construct; });

  auto* fixtures = app.add_subcommand("verify-fixtures", "Check the bundled matrices against their semigroups");
  fixtures->add_option("--fixtures-dir", cfg.fixtures_dir, "Directory of fixture JSON files");
  fixtures->callback([&] { handler = verify_fixtures; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return handler(cfg);
  } catch (const expsg::StateBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
