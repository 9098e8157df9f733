#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "expsg/expsg.hpp"
#include "oracles.hpp"

using namespace expsg;

namespace {
const RationalMatrix kNugget = make_matrix({
    {"31837/256", "31899/256", "-9751/128", "-3857/32", "7703/64", "-10313/256"},
    {"-140489/256", "-233823/256", "33843/128", "24487/32", "-35891/64", "119973/256"},
    {"101403/128", "176689/128", "-21255/64", "-34955/32", "25351/32", "-95767/128"},
    {"-109715/256", "-180477/256", "25637/128", "4647/8", "-27685/64", "93303/256"},
    {"30963/64", "61421/64", "-5885/32", "-2991/4", "7933/16", "-35063/64"},
    {"-12355/128", "-15989/128", "4369/64", "2125/16", "-3345/32", "5687/128"},
});

void check_similarity(const RationalMatrix& a, const IntegralSimilarity& sim) {
  const RationalMatrix s = to_rational(sim.s);
  const RationalMatrix b = to_rational(sim.b);
  CHECK(mat_mul(a, s) == mat_mul(s, b));
  CHECK(!det(s).is_zero());
  CHECK(char_poly(b) == char_poly(a));
}
}  // namespace

TEST_CASE("tfae_report examples", "[power_integrality]") {
  const auto a = make_matrix({{"2", "1/2"}, {"0", "1"}});
  const auto r = tfae_report(a, 4);
  CHECK(r.verdict);
  CHECK(r.char_poly_integral);
  CHECK(r.min_poly_integral);
  REQUIRE(r.uniform_denominator);
  CHECK(*r.uniform_denominator == 2);
  REQUIRE(r.similarity);
  CHECK(r.trace_integral_upto == 4);
  CHECK(r.witnesses.empty());

  const auto half = tfae_report(make_matrix({{"1/2"}}), 1);
  CHECK_FALSE(half.verdict);
  REQUIRE_FALSE(half.witnesses.empty());
  CHECK(half.witnesses.front().kind == Witness::Kind::CharPolyCoefficient);
  CHECK(half.witnesses.front().value == Rational(BigInt(-1), BigInt(2)));
  CHECK(half.char_poly.str() == "x - 1/2");
  CHECK_FALSE(half.similarity);
  CHECK_FALSE(half.uniform_denominator);

  // The 6x6 matrix realizing <6,9,20> is not nilpotent: its char poly is x^6 - 2.
  const auto n = tfae_report(kNugget, 12);
  CHECK(n.verdict);
  CHECK(n.char_poly.str() == "x^6 - 2");
  REQUIRE(n.similarity);
  check_similarity(kNugget, *n.similarity);

  CHECK_THROWS_AS(tfae_report(a, 1), PreconditionViolation);
}

TEST_CASE("integral_similarity", "[power_integrality]") {
  const auto a = make_matrix({{"2", "1/2"}, {"0", "1"}});
  const auto sim = integral_similarity(a);
  IntegerMatrix s(2, 2), b(2, 2);
  s(0, 0) = 1;
  s(1, 1) = 2;
  b(0, 0) = 2;
  b(0, 1) = 1;
  b(1, 1) = 1;
  CHECK(sim.s == s);
  CHECK(sim.b == b);

  std::mt19937_64 rng(1);
  const auto ia = oracle::random_integer_matrix(rng, 3, 5);
  const auto isim = integral_similarity(to_rational(ia));
  CHECK(isim.s == IntegerMatrix::identity(3));
  CHECK(isim.b == ia);

  CHECK_THROWS_AS(integral_similarity(make_matrix({{"1/2"}})), NoIntegralSpectrum);
}

TEST_CASE("quick_reject", "[power_integrality]") {
  const auto w1 = quick_reject(make_matrix({{"1/2"}}));
  REQUIRE(w1);
  CHECK(w1->kind == Witness::Kind::Determinant);
  CHECK(w1->value == Rational(BigInt(1), BigInt(2)));

  CHECK_FALSE(quick_reject(make_matrix({{"2", "1/2"}, {"0", "1"}})));

  const auto w3 = quick_reject(make_matrix({{"1/3", "0"}, {"0", "3"}}));
  REQUIRE(w3);
  CHECK(w3->kind == Witness::Kind::RationalEigenvalue);
  CHECK(w3->value == Rational(BigInt(1), BigInt(3)));

  // det and eigenvalues pass, tr(A) does not
  const auto w4 = quick_reject(make_matrix({{"1/2", "1"}, {"-3/4", "1/2"}}));
  if (w4) CHECK(w4->kind != Witness::Kind::Determinant);
}

TEST_CASE("tfae conditions agree on random matrices", "[power_integrality]") {
  std::mt19937_64 rng(2024);
  int power_integral = 0;
  for (int t = 0; t < 150; ++t) {
    const std::size_t d = 1 + rng() % 3;
    RationalMatrix a;
    if (t % 2 == 0) {
      a = oracle::random_matrix(rng, d, 4, 4);
    } else {
      // S B S^-1 with B integral: power integral by construction
      IntegerMatrix s;
      do {
        s = oracle::random_integer_matrix(rng, d, 2);
      } while (det(s) == 0);
      const auto b = to_rational(oracle::random_integer_matrix(rng, d, 3));
      a = mat_mul(mat_mul(to_rational(s), b), inverse(to_rational(s)));
    }
    const auto r = tfae_report(a, 2 * d);
    CHECK(r.char_poly_integral == r.min_poly_integral);
    CHECK(r.char_poly_integral == r.uniform_denominator.has_value());
    CHECK(r.char_poly_integral == r.similarity.has_value());
    CHECK(r.verdict == r.char_poly_integral);
    if (r.verdict) {
      ++power_integral;
      CHECK(r.trace_integral_upto == r.trace_bound);
      check_similarity(a, *r.similarity);
      for (unsigned n = 0; n < 2 * d; ++n) CHECK(is_integral(scale(mat_pow(a, n), Rational(*r.uniform_denominator))));
      // the lattice spanned by S is A-invariant
      const auto lattice = hnf(r.similarity->s);
      const auto image = mat_mul(a, to_rational(r.similarity->s));
      CHECK(is_integral(image));
      for (std::size_t j = 0; j < d; ++j) {
        std::vector<BigInt> col(d);
        for (std::size_t i = 0; i < d; ++i) col[i] = image(i, j).numerator();
        CHECK(lattice.contains(col));
      }
    } else {
      CHECK_FALSE(r.witnesses.empty());
    }
    if (quick_reject(a)) CHECK_FALSE(r.verdict);
  }
  CHECK(power_integral >= 50);
}
