#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "expsg/expsg.hpp"
#include "expsg/fixtures.hpp"
#include "expsg/io.hpp"
#include "oracles.hpp"

using namespace expsg;

TEST_CASE("matrix JSON round trip", "[io]") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 40; ++t) {
    const auto a = oracle::random_matrix(rng, 1 + rng() % 4, 9, 7);
    const auto j = io::matrix_to_json(a);
    CHECK(j.at("dim") == a.rows());
    CHECK(io::matrix_from_json(j) == a);
    CHECK(io::matrix_from_json(io::parse_json(j.dump())) == a);
  }
  const auto wrapped = io::parse_json(R"({"matrix": {"entries": [[1, "-2/4"], [0, 3]]}})");
  CHECK(io::matrix_from_json(wrapped) == make_matrix({{"1", "-1/2"}, {"0", "3"}}));
}

TEST_CASE("matrix JSON errors name the entry", "[io]") {
  auto message = [](const std::string& text) {
    try {
      io::matrix_from_json(io::parse_json(text));
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK_THAT(message(R"({"entries": [["1", "2"], ["3", "1/0"]]})"), Catch::Matchers::ContainsSubstring("(1, 1)"));
  CHECK_THAT(message(R"({"entries": [["1", "x"], ["3", "4"]]})"), Catch::Matchers::ContainsSubstring("(0, 1)"));
  CHECK_THAT(message(R"({"entries": [["1", 2.5], ["3", "4"]]})"), Catch::Matchers::ContainsSubstring("(0, 1)"));
  CHECK_THAT(message(R"({"entries": [["1", "2"], ["3"]]})"), Catch::Matchers::ContainsSubstring("row 1"));
  CHECK_THAT(message(R"({"dim": 3, "entries": [["1"]]})"), Catch::Matchers::ContainsSubstring("dim"));
  CHECK_THAT(message(R"({"rows": []})"), Catch::Matchers::ContainsSubstring("entries"));
  CHECK_THROWS_AS(io::parse_json("{not json"), ParseError);
  CHECK_THROWS_AS(io::read_file("/nonexistent/matrix.json"), ParseError);
}

TEST_CASE("generator lists", "[io]") {
  CHECK(io::parse_generator_list("6,9,20") == std::vector<Natural>{6, 9, 20});
  CHECK(io::parse_generator_list(" 3 , 5 ") == std::vector<Natural>{3, 5});
  CHECK_THROWS_AS(io::parse_generator_list("3,,5"), ParseError);
  CHECK_THROWS_AS(io::parse_generator_list("3,x"), ParseError);
  CHECK_THROWS_AS(io::parse_generator_list("3.5"), ParseError);
  CHECK(io::generators_from_json(io::parse_json(R"({"generators": [4, 6]})")) == std::vector<Natural>{4, 6});
  CHECK_THROWS_AS(io::generators_from_json(io::parse_json(R"({"generators": []})")), ParseError);
}

TEST_CASE("semigroup JSON", "[io]") {
  const auto j = io::semigroup_to_json(SubsemigroupDesc::from_generators({3, 5, 7}));
  CHECK(j.at("kind") == "numerical");
  CHECK(j.at("frobenius") == 4);
  CHECK(j.at("gaps") == std::vector<Natural>{1, 2, 4});
  CHECK(j.at("symmetric") == false);
  CHECK(j.at("pseudosymmetric") == true);
  const auto t = io::semigroup_to_json(SubsemigroupDesc::trivial());
  CHECK(t.at("frobenius").is_null());
  const auto c = io::semigroup_to_json(SubsemigroupDesc::from_generators({15, 21, 33}));
  CHECK(c.at("content") == 3);
  CHECK(c.at("frobenius") == 13);
  CHECK(io::semigroup_human(SubsemigroupDesc::from_generators({3, 5, 7})) == "⟨3, 5, 7⟩, g = 4, gaps = {1, 2, 4}");
}

TEST_CASE("construction output reloads to the same matrix", "[io]") {
  const auto r = represent(SubsemigroupDesc::from_generators({3, 4}));
  const auto j = io::parse_json(io::construction_to_json(r).dump());
  CHECK(io::matrix_from_json(j) == r.matrix);
  CHECK(j.at("vector").at("entries") == r.vector->entries);
}

TEST_CASE("bundled fixtures", "[io][fixtures]") {
  const auto fixtures = load_fixtures(EXPSG_FIXTURE_DIR);
  REQUIRE(fixtures.size() == 11);
  for (const auto& f : fixtures) {
    INFO(f.name);
    CHECK(f.matrix.rows() == f.matrix.cols());
    // the char poly is integral exactly for the nontrivial fixtures
    CHECK(char_poly(f.matrix).is_integral() == !f.expected.is_trivial());
    const auto lv = oracle::leverrier(oracle::to_q(f.matrix));
    const auto cp = char_poly(f.matrix);
    for (std::size_t i = 0; i < lv.size(); ++i) CHECK(lv[i] == mpq_class(cp.coefficient(i).str()));
  }
  for (const auto& o : verify_fixtures(fixtures)) {
    INFO(o.name << ": " << o.error);
    CHECK(o.pass);
  }
}
