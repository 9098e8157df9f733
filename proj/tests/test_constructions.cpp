#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "expsg/expsg.hpp"
#include "oracles.hpp"

using namespace expsg;

namespace {
SubsemigroupDesc gens(std::vector<Natural> g) { return SubsemigroupDesc::from_generators(g); }

const std::vector<int> kNuggetVector{-1, 0, 0, 0, 0, 1, -1, 0, 1, -1, 0, 1, -1, 0, 1, -1, 0, 1, -1, 1, 0, -1,
                                     0, 1, -1, 1, 0, -1, 1, 0, -1, 1, 0, -1, 1, 0, -1, 1, 0, 0, 0, 0, -1};
const std::vector<int> k152133Vector{-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1,  -1, 0, 0, 0, 0,
                                     1,  -1, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 1, -1, 0, 1, -1, 0, 0};

long window_sum(const std::vector<int>& x, std::size_t start, std::size_t len) {
  long s = 0;
  for (std::size_t k = start; k < start + len; ++k) s += x[k];
  return s;
}

void check_vector_laws(const SubsemigroupDesc& s, const std::vector<int>& x) {
  const Natural g = s.part().frobenius();
  REQUIRE(static_cast<Natural>(x.size()) == g);
  CHECK(x.front() == -1);
  long prefix = 0;
  int last_nonzero = 0;
  for (Natural k = 1; k <= g; ++k) {
    const int xi = x[static_cast<std::size_t>(k - 1)];
    prefix += xi;
    CHECK((prefix == 0 || prefix == -1));
    CHECK((prefix == -1) == !s.contains(k));
    if (xi == 1) CHECK(s.contains(k));
    if (xi == -1) CHECK_FALSE(s.contains(k));
    if (xi != 0) {
      CHECK(xi != last_nonzero);
      last_nonzero = xi;
    }
  }
  for (Natural n : s.part().minimal_generators()) {
    for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= x.size(); ++i) {
      CHECK(window_sum(x, i, static_cast<std::size_t>(n)) >= 0);
    }
  }
}
}  // namespace

TEST_CASE("find_superdiagonal golden vectors", "[constructions]") {
  const auto v = find_superdiagonal(gens({6, 9, 20}));
  CHECK(v.entries == kNuggetVector);
  CHECK(v.base == 2);

  const auto w = find_superdiagonal_general(gens({15, 21, 33}));
  CHECK(w.entries.size() == 39);
  CHECK(w.entries == k152133Vector);

  CHECK(find_superdiagonal(gens({2, 3})).entries == std::vector<int>{-1});
  CHECK(find_superdiagonal(gens({3, 4, 5})).entries == std::vector<int>{-1, 0});

  CHECK_THROWS_AS(find_superdiagonal(gens({1})), PreconditionViolation);
  CHECK_THROWS_AS(find_superdiagonal(SubsemigroupDesc::trivial()), PreconditionViolation);
  CHECK_THROWS_AS(find_superdiagonal(gens({4, 6})), PreconditionViolation);
  CHECK_THROWS_AS(find_superdiagonal(gens({2, 3}), 1), PreconditionViolation);
}

TEST_CASE("superdiagonal vectors obey the tally laws", "[constructions]") {
  std::mt19937_64 rng(31);
  int done = 0;
  while (done < 150) {
    std::vector<Natural> g;
    const int k = 2 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) g.push_back(2 + static_cast<Natural>(rng() % 25));
    Natural gg = 0;
    for (auto x : g) gg = std::gcd(gg, x);
    if (gg != 1) continue;
    const auto s = gens(g);
    if (s.kind() != SemigroupKind::Numerical) continue;
    ++done;
    const auto v = find_superdiagonal(s);
    check_vector_laws(s, v.entries);
    CHECK(v.entries == oracle::prefix_sum_vector([&](std::int64_t i) { return s.contains(i); }, s.part().frobenius()));
  }
}

TEST_CASE("nilpotent_matrix", "[constructions]") {
  SuperdiagonalVector v{{-1}, 2, gens({2, 3})};
  CHECK(nilpotent_matrix(v) == make_matrix({{"0", "1/2"}, {"0", "0"}}));

  const auto s = gens({3, 5, 7});
  const auto x = find_superdiagonal(s);
  const auto a = nilpotent_matrix(x);
  const auto g = static_cast<unsigned>(s.part().frobenius());
  CHECK(a.rows() == g + 1);
  CHECK(mat_pow(a, g + 1) == RationalMatrix(g + 1, g + 1));
  CHECK_FALSE(mat_pow(a, g) == RationalMatrix(g + 1, g + 1));

  // second superdiagonal of superdiag(a,b,c,d)^2 holds ab, bc, cd
  const auto sd = superdiag({Rational(2), Rational(3), Rational(5), Rational(7)});
  const auto sq = mat_mul(sd, sd);
  CHECK(sq(0, 2) == Rational(6));
  CHECK(sq(1, 3) == Rational(15));
  CHECK(sq(2, 4) == Rational(35));

  // integrality of A^j is the nonnegativity of every j-window sum
  const auto nug = find_superdiagonal(gens({6, 9, 20}));
  const auto na = nilpotent_matrix(nug);
  for (std::size_t j = 1; j <= nug.entries.size(); j += 3) {
    bool windows_ok = true;
    for (std::size_t i = 0; i + j <= nug.entries.size(); ++i) windows_ok = windows_ok && window_sum(nug.entries, i, j) >= 0;
    CHECK(is_integral(mat_pow(na, j)) == windows_ok);
  }
}

TEST_CASE("represent", "[constructions]") {
  const auto nug = represent(gens({6, 9, 20}));
  CHECK(nug.verified);
  CHECK(nug.matrix.rows() == 44);
  CHECK(nug.family == "nilpotent");

  const auto c = represent(gens({15, 21, 33}));
  CHECK(c.verified);
  CHECK(c.matrix.rows() == 42);
  REQUIRE(c.vector);
  CHECK(c.vector->entries == k152133Vector);
  CHECK(*c.analysis->classification == gens({15, 21, 33}));

  const auto n = represent(gens({1}));
  CHECK(n.verified);
  CHECK(n.matrix == RationalMatrix(1, 1));

  const auto s34 = represent(gens({3, 4}));
  CHECK(s34.verified);
  CHECK(s34.matrix.rows() == 6);

  const auto c4 = represent(gens({4}));
  CHECK(c4.verified);
  CHECK(c4.matrix == make_matrix({{"1", "1/4"}, {"0", "1"}}));

  CHECK_THROWS_AS(represent(SubsemigroupDesc::trivial()), TrivialSemigroupUnrepresentable);
  CHECK_THROWS_AS(represent(gens({3, 4}), 0), PreconditionViolation);
}

TEST_CASE("represent round trip with several bases", "[constructions]") {
  std::mt19937_64 rng(37);
  int done = 0;
  while (done < 60) {
    std::vector<Natural> g;
    const int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) g.push_back(2 + static_cast<Natural>(rng() % 20));
    const auto s = gens(g);
    const Natural frob = s.part().frobenius();
    if (s.content() * std::max<Natural>(frob, 0) > 60) continue;
    ++done;
    for (long base : {2L, 3L, -2L}) {
      const auto r = represent(s, base);
      CHECK(r.verified);
      CHECK(*r.analysis->classification == s);
    }
  }
}

TEST_CASE("family_2x2", "[constructions]") {
  const auto c = family_2x2(Family2x2::Cyclic, 3);
  CHECK(c.matrix == make_matrix({{"1", "1/3"}, {"0", "1"}}));
  CHECK(c.claimed == gens({3}));
  CHECK(c.verified);

  const auto t = family_2x2(Family2x2::TailFrom, 2);
  CHECK(t.matrix == make_matrix({{"2", "1/2"}, {"0", "0"}}));
  CHECK(t.claimed == gens({2, 3}));
  CHECK(t.verified);

  const auto two = family_2x2(Family2x2::TwoGen, 3);
  CHECK(two.matrix == make_matrix({{"0", "1/2"}, {"4", "0"}}));
  CHECK(two.claimed == gens({2, 3}));
  CHECK(two.verified);

  for (Natural m = 2; m <= 12; ++m) {
    CHECK(family_2x2(Family2x2::Cyclic, m).verified);
    CHECK(family_2x2(Family2x2::TailFrom, m).verified);
    if (m % 2 == 1) CHECK(family_2x2(Family2x2::TwoGen, m).verified);
  }

  // The published tail matrix [[2, 2^-m], [0, 0]] starts one step later.
  const auto published = exponent_semigroup(make_matrix({{"2", "1/4"}, {"0", "0"}}));
  CHECK(*published.classification == gens({3, 4, 5}));

  CHECK_THROWS_AS(family_2x2(Family2x2::TwoGen, 4), PreconditionViolation);
  CHECK_THROWS_AS(family_2x2(Family2x2::Cyclic, 1), PreconditionViolation);
  CHECK_THROWS_AS(family_2x2(Family2x2::TailFrom, 1), PreconditionViolation);

  CHECK(matching_2x2_family(gens({2, 9}))->first == Family2x2::TwoGen);
  CHECK(matching_2x2_family(gens({5, 6, 7, 8, 9}))->first == Family2x2::TailFrom);
  CHECK(matching_2x2_family(gens({7}))->first == Family2x2::Cyclic);
  CHECK_FALSE(matching_2x2_family(gens({3, 5, 7})));
}
