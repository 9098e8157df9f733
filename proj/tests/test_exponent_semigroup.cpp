#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "expsg/expsg.hpp"
#include "oracles.hpp"

using namespace expsg;

namespace {
const RationalMatrix k357 = make_matrix({{"-1/4", "19/16"}, {"-3", "-7/4"}});
const RationalMatrix kNugget = make_matrix({
    {"31837/256", "31899/256", "-9751/128", "-3857/32", "7703/64", "-10313/256"},
    {"-140489/256", "-233823/256", "33843/128", "24487/32", "-35891/64", "119973/256"},
    {"101403/128", "176689/128", "-21255/64", "-34955/32", "25351/32", "-95767/128"},
    {"-109715/256", "-180477/256", "25637/128", "4647/8", "-27685/64", "93303/256"},
    {"30963/64", "61421/64", "-5885/32", "-2991/4", "7933/16", "-35063/64"},
    {"-12355/128", "-15989/128", "4369/64", "2125/16", "-3345/32", "5687/128"},
});

SubsemigroupDesc gens(std::vector<Natural> g) { return SubsemigroupDesc::from_generators(g); }

// Random matrix that is power integral about half the time.
RationalMatrix random_candidate(std::mt19937_64& rng, std::size_t d) {
  if (rng() % 2) return oracle::random_matrix(rng, d, 3, 4);
  IntegerMatrix s;
  do {
    s = oracle::random_integer_matrix(rng, d, 2);
  } while (det(s) == 0);
  const auto b = to_rational(oracle::random_integer_matrix(rng, d, 2));
  return mat_mul(mat_mul(to_rational(s), b), inverse(to_rational(s)));
}
}  // namespace

TEST_CASE("exponent_semigroup examples", "[exponent]") {
  const auto c3 = exponent_semigroup(make_matrix({{"1", "1/3"}, {"0", "1"}}));
  REQUIRE(c3.final);
  CHECK(c3.classification->kind() == SemigroupKind::NonNumericalPositive);
  CHECK(c3.classification->content() == 3);
  CHECK(*c3.classification == gens({3}));

  const auto s357 = exponent_semigroup(k357);
  CHECK(*s357.classification == gens({3, 5, 7}));
  CHECK(s357.classification->kind() == SemigroupKind::Numerical);

  const auto half = exponent_semigroup(make_matrix({{"1/2"}}));
  CHECK(half.classification->is_trivial());
  CHECK(half.termination == Termination::CharPolyNotIntegral);
  CHECK(half.contains(0));
  CHECK_FALSE(half.contains(7));

  const auto nug = exponent_semigroup(kNugget);
  CHECK(*nug.classification == gens({6, 9, 20}));
  CHECK(nug.certificates_agree());
  CHECK_FALSE(nug.certificates.empty());

  CHECK(*exponent_semigroup(make_matrix({{"0"}})).classification == gens({1}));
  CHECK(*exponent_semigroup(make_matrix({{"3", "7"}, {"-1", "2"}})).classification == gens({1}));
  CHECK(*exponent_semigroup(make_matrix({{"0", "1/2"}, {"4", "0"}})).classification == gens({2, 3}));
  const auto never = exponent_semigroup(make_matrix({{"2", "1/2"}, {"0", "1"}}));
  CHECK(char_poly(make_matrix({{"2", "1/2"}, {"0", "1"}})).is_integral());
  CHECK(never.classification->is_trivial());
  CHECK(never.termination == Termination::CycleDetected);
}

TEST_CASE("verify_membership", "[exponent]") {
  CHECK_FALSE(verify_membership(k357, 4));
  CHECK(verify_membership(k357, 0));
  CHECK(verify_membership(make_matrix({{"1/7"}}), 0));
  CHECK(verify_membership(kNugget, 29));
  CHECK_FALSE(verify_membership(kNugget, 43));
  CHECK_THROWS_AS(verify_membership(k357, -1), PreconditionViolation);
}

TEST_CASE("membership agrees with direct powering on random matrices", "[exponent]") {
  std::mt19937_64 rng(101);
  int nontrivial = 0;
  for (int t = 0; t < 120; ++t) {
    const std::size_t d = 1 + rng() % 3;
    const auto a = random_candidate(rng, d);
    const auto r = exponent_semigroup(a);
    REQUIRE(r.final);
    const std::size_t limit = r.preperiod + 2 * r.period;
    const auto brute = oracle::brute_exponents(a, limit);
    for (std::size_t n = 0; n <= limit; ++n) CHECK(r.contains(static_cast<Natural>(n)) == brute[n]);
    for (std::size_t n = 0; n <= limit; ++n) CHECK(r.classification->contains(static_cast<Natural>(n)) == brute[n]);
    CHECK(r.certificates_agree());
    for (std::size_t i = 1; i <= limit; ++i)
      for (std::size_t j = i; i + j <= limit; ++j)
        if (brute[i] && brute[j]) CHECK(r.contains(static_cast<Natural>(i + j)));
    if (!r.classification->is_trivial()) ++nontrivial;
    // a nontrivial semigroup forces an integral char poly; the converse fails, e.g. [[2, 1/2], [0, 1]]
    if (!r.classification->is_trivial()) CHECK(char_poly(a).is_integral());
  }
  CHECK(nontrivial >= 30);
}

TEST_CASE("invariance under unimodular similarity", "[exponent]") {
  std::mt19937_64 rng(103);
  const std::vector<RationalMatrix> bases{k357, make_matrix({{"1", "1/3"}, {"0", "1"}}),
                                          make_matrix({{"0", "1/8"}, {"16", "0"}}),
                                          make_matrix({{"-9/4", "-5/4", "1/8"}, {"-3", "0", "-5/2"}, {"-1/2", "3/2", "-7/4"}})};
  for (int t = 0; t < 24; ++t) {
    const auto& a = bases[static_cast<std::size_t>(t) % bases.size()];
    const auto u = to_rational(oracle::random_unimodular(rng, a.rows()));
    const auto conj = mat_mul(mat_mul(u, a), inverse(u));
    CHECK(*exponent_semigroup(conj).classification == *exponent_semigroup(a).classification);
  }
}

TEST_CASE("early exit after d consecutive members", "[exponent]") {
  // superdiagonal matrices are nilpotent, so every run exit is followed by zero powers
  const auto a = superdiag({Rational(BigInt(1), BigInt(2)), Rational(2), Rational(2)});
  const auto r = exponent_semigroup(a);
  REQUIRE(r.run_exit_at);
  CHECK(r.termination == Termination::ConsecutiveRun);
  for (Natural j = 0; j < 20; ++j) CHECK(verify_membership(a, static_cast<Natural>(*r.run_exit_at) + j));
  CHECK(*r.classification == gens({2, 3}));

  const auto tail = exponent_semigroup(make_matrix({{"2", "1/2"}, {"0", "0"}}));
  CHECK(tail.termination == Termination::ConsecutiveRun);
  CHECK(*tail.classification == gens({2, 3}));
}

TEST_CASE("classify_cyclic", "[exponent]") {
  CHECK(classify_cyclic(make_matrix({{"1", "1/3"}, {"0", "1"}})) == 3);
  // companion matrix of x^2 + x + 1
  CHECK(classify_cyclic(make_matrix({{"0", "-1"}, {"1", "-1"}})) == 1);
  std::mt19937_64 rng(107);
  for (int t = 0; t < 10; ++t) {
    const auto u = to_rational(oracle::random_unimodular(rng, 2));
    const auto conj = mat_mul(mat_mul(u, make_matrix({{"1", "1/3"}, {"0", "1"}})), inverse(u));
    CHECK(classify_cyclic(conj) == 3);
  }
  CHECK_FALSE(classify_cyclic(make_matrix({{"1/2", "0"}, {"0", "2"}})));
  CHECK_THROWS_AS(classify_cyclic(make_matrix({{"2", "0"}, {"0", "1"}})), PreconditionViolation);

  // det ±1 always yields a cyclic semigroup
  for (int t = 0; t < 40; ++t) {
    IntegerMatrix s;
    do {
      s = oracle::random_integer_matrix(rng, 2, 3);
    } while (det(s) == 0);
    const auto b = to_rational(oracle::random_unimodular(rng, 2));
    const auto a = mat_mul(mat_mul(to_rational(s), b), inverse(to_rational(s)));
    const auto r = exponent_semigroup(a);
    const auto gen = classify_cyclic(a);
    REQUIRE(gen);
    for (Natural n = 1; n < 3 * *gen + 5; ++n) CHECK(r.contains(n) == (n % *gen == 0));
  }
}

TEST_CASE("state budget", "[exponent]") {
  StateBudget tiny;
  tiny.max_states = 3;
  const auto r = exponent_semigroup(kNugget, tiny);
  CHECK_FALSE(r.final);
  CHECK(r.termination == Termination::BudgetExceeded);
  CHECK_FALSE(r.classification);
  CHECK_THROWS_AS(r.contains(100000), StateBudgetExceeded);
  CHECK_THROWS_AS(classify_cyclic(make_matrix({{"1", "1/1000"}, {"0", "1"}}), tiny), StateBudgetExceeded);
}

TEST_CASE("large uniform denominators use the big-integer residues", "[exponent]") {
  const auto a = make_matrix({{"1", "1/4611686018427387905"}, {"0", "1"}});  // 2^62 + 1
  const auto r = exponent_semigroup(make_matrix({{"0", "1/4611686018427387904"}, {"0", "0"}}));
  CHECK(*r.classification == gens({2, 3}));
  CHECK(*r.uniform_denominator == BigInt("4611686018427387904"));
  StateBudget small;
  small.max_states = 50;
  CHECK_FALSE(exponent_semigroup(a, small).final);
}
