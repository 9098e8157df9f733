#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "expsg/errors.hpp"
#include "expsg/matrix.hpp"
#include "expsg/polynomial.hpp"
#include "expsg/power_integrality.hpp"
#include "expsg/semigroup.hpp"

namespace expsg {

/// Resource caps for the residue-state stream. Whichever cap is hit first
/// ends the analysis with a non-final result.
struct StateBudget {
  std::size_t max_states = 1'000'000;
  std::size_t max_bytes = std::size_t{1} << 30;
  /// Exponents re-checked by direct powering after the analysis.
  std::size_t certificate_samples = 8;
};

enum class Termination {
  CharPolyNotIntegral,  ///< S(A) = {0} without streaming
  ConsecutiveRun,       ///< d consecutive members seen; every later exponent is a member
  CycleDetected,        ///< residue window repeated
  BudgetExceeded,       ///< partial, non-final
};

inline const char* to_string(Termination t) {
  switch (t) {
    case Termination::CharPolyNotIntegral: return "char_poly_not_integral";
    case Termination::ConsecutiveRun: return "consecutive_run";
    case Termination::CycleDetected: return "cycle_detected";
    case Termination::BudgetExceeded: return "budget_exceeded";
  }
  return "?";
}

struct MembershipCertificate {
  Natural n = 0;
  bool claimed = false;   ///< membership according to the analysis
  bool verified = false;  ///< integrality of A^n by direct powering
};

/// S(A) as an eventually periodic subset of N plus its classification.
///
/// Membership: for n < preperiod + period, membership_prefix[n]; beyond that
/// the prefix repeats with the given period from `preperiod` on. When the
/// stream stopped on a repeated residue window, `state_preperiod` and
/// `state_period` hold the window cycle (tau, rho); after a consecutive-run
/// exit the pattern is "all members from preperiod on" (period 1).
struct ExponentAnalysis {
  std::optional<SubsemigroupDesc> classification;  ///< absent iff !final
  Polynomial char_poly;
  std::optional<BigInt> uniform_denominator;
  Termination termination = Termination::CharPolyNotIntegral;
  bool final = true;
  std::size_t preperiod = 0;
  std::size_t period = 1;
  std::vector<bool> membership_prefix;
  std::optional<std::size_t> state_preperiod;
  std::optional<std::size_t> state_period;
  std::optional<std::size_t> run_exit_at;  ///< last exponent of the d-consecutive run
  std::size_t states_explored = 0;
  std::vector<MembershipCertificate> certificates;

  bool contains(Natural n) const {
    if (n < 0) return false;
    const auto k = static_cast<std::size_t>(n);
    if (k < membership_prefix.size()) return membership_prefix[k];
    if (!final) throw StateBudgetExceeded("membership of " + std::to_string(n) + " lies beyond the explored range");
    return membership_prefix[preperiod + (k - preperiod) % period];
  }

  bool certificates_agree() const {
    return std::all_of(certificates.begin(), certificates.end(),
                       [](const MembershipCertificate& c) { return c.claimed == c.verified; });
  }
};

/// Direct check: is A^n an integer matrix?
inline bool verify_membership(const RationalMatrix& a, Natural n) {
  if (n < 0) throw PreconditionViolation("verify_membership: negative exponent");
  return is_integral(mat_pow(a, static_cast<unsigned long long>(n)));
}

namespace detail {

// Residues mod m held in machine words; valid while m < 2^63.
struct WordResidues {
  using value_type = std::uint64_t;
  std::uint64_t m;

  explicit WordResidues(const BigInt& modulus) : m(modulus.get_ui()) {}
  value_type reduce(const BigInt& x) const { return mod_floor(x, BigInt(static_cast<unsigned long>(m))).get_ui(); }
  static bool is_zero(value_type v) { return v == 0; }
  value_type mul_add(value_type acc, value_type a, value_type b) const {
    const unsigned __int128 t = static_cast<unsigned __int128>(a) * b + acc;
    return static_cast<value_type>(t % m);
  }
  static std::uint64_t hash(value_type v) { return v * 0x9E3779B97F4A7C15ull; }
  static std::size_t bytes(value_type) { return sizeof(value_type); }
};

struct BigResidues {
  using value_type = BigInt;
  BigInt m;

  explicit BigResidues(const BigInt& modulus) : m(modulus) {}
  value_type reduce(const BigInt& x) const { return mod_floor(x, m); }
  static bool is_zero(const value_type& v) { return sgn(v) == 0; }
  value_type mul_add(const value_type& acc, const value_type& a, const value_type& b) const {
    return mod_floor(acc + a * b, m);
  }
  static std::uint64_t hash(const value_type& v) { return hash_value(v) * 0x9E3779B97F4A7C15ull; }
  static std::size_t bytes(const value_type& v) { return sizeof(BigInt) + 8 * mpz_size(v.get_mpz_t()); }
};

struct StreamOutcome {
  std::vector<bool> members;  // membership of every exponent streamed so far
  Termination termination = Termination::BudgetExceeded;
  std::size_t preperiod = 0;
  std::size_t period = 1;
  std::optional<std::size_t> state_preperiod;
  std::optional<std::size_t> state_period;
  std::optional<std::size_t> run_exit_at;
  std::size_t states = 0;
};

// Streams R_n = m A^n mod m using R_{n+d} = -(c_{d-1} R_{n+d-1} + ... + c_0 R_n),
// hashing each window (R_n, ..., R_{n+d-1}) until a window repeats, d
// consecutive positive exponents are members, or the budget runs out.
template <class Ring>
StreamOutcome stream_residues(const Ring& ring, const std::vector<RationalMatrix>& first_powers,
                              const BigInt& m, const Polynomial& cp, const StateBudget& budget) {
  using V = typename Ring::value_type;
  const std::size_t d = first_powers.size();
  const std::size_t cells = d * d;

  std::vector<std::vector<V>> residues;
  std::vector<std::uint64_t> hashes;
  StreamOutcome out;
  std::size_t run = 0;
  std::size_t bytes = 0;

  // Returns true when the consecutive-run exit fires at exponent k.
  auto push = [&](std::vector<V> r) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    bool zero = true;
    for (const V& v : r) {
      h = (h ^ Ring::hash(v)) * 0x100000001b3ull;
      zero = zero && Ring::is_zero(v);
      bytes += Ring::bytes(v);
    }
    const std::size_t k = residues.size();
    residues.push_back(std::move(r));
    hashes.push_back(h);
    out.members.push_back(zero);
    run = (k >= 1 && zero) ? run + 1 : 0;
    if (run >= d) {
      out.termination = Termination::ConsecutiveRun;
      out.run_exit_at = k;
      out.preperiod = k + 1 - d;
      out.period = 1;
      out.members.resize(out.preperiod + 1);
      return true;
    }
    return false;
  };

  for (const RationalMatrix& p : first_powers) {
    std::vector<V> r;
    r.reserve(cells);
    for (const Rational& x : p.data()) {
      if (x.is_zero()) {
        r.push_back(ring.reduce(BigInt(0)));
      } else {
        r.push_back(ring.reduce(x.numerator() * (m / x.denominator())));
      }
    }
    if (push(std::move(r))) return out;
  }

  // Negated recurrence coefficients reduced mod m; zeros are skipped.
  std::vector<std::pair<std::size_t, V>> coeffs;
  for (std::size_t i = 0; i < d; ++i) {
    V c = ring.reduce(-cp.coefficient(i).numerator());
    if (!Ring::is_zero(c)) coeffs.emplace_back(i, std::move(c));
  }

  constexpr std::uint64_t kBase = 0x100000001b3ull;
  std::uint64_t top = 1;  // kBase^(d-1)
  for (std::size_t i = 1; i < d; ++i) top *= kBase;
  std::uint64_t window = 0;
  for (std::size_t i = 0; i < d; ++i) window = window * kBase + hashes[i];

  std::unordered_map<std::uint64_t, std::vector<std::size_t>> seen;
  auto same_window = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < d; ++j) {
      if (hashes[a + j] != hashes[b + j] || residues[a + j] != residues[b + j]) return false;
    }
    return true;
  };

  for (std::size_t n = 0;; ++n) {
    auto& bucket = seen[window];
    for (std::size_t j : bucket) {
      if (same_window(j, n)) {
        out.termination = Termination::CycleDetected;
        out.state_preperiod = j;
        out.state_period = n - j;
        out.preperiod = j;
        out.period = n - j;
        out.members.resize(n);
        out.states = n + 1;
        return out;
      }
    }
    bucket.push_back(n);
    out.states = n + 1;
    if (out.states >= budget.max_states || bytes >= budget.max_bytes) {
      out.termination = Termination::BudgetExceeded;
      return out;
    }

    std::vector<V> next(cells, ring.reduce(BigInt(0)));
    for (const auto& [i, c] : coeffs) {
      const std::vector<V>& src = residues[n + i];
      for (std::size_t e = 0; e < cells; ++e) {
        if (!Ring::is_zero(src[e])) next[e] = ring.mul_add(next[e], c, src[e]);
      }
    }
    const std::uint64_t leaving = hashes[n];
    if (push(std::move(next))) {
      out.states = n + 2;
      return out;
    }
    window = (window - leaving * top) * kBase + hashes[n + d];
  }
}

inline SubsemigroupDesc classify_pattern(const ExponentAnalysis& a) {
  // Each cycle position has a positive representative in [preperiod, preperiod + period] or one period later.
  const auto span = static_cast<Natural>(a.preperiod + 2 * a.period);
  Natural content = 0;
  bool cycle_member = false;
  for (Natural k = 1; k < span; ++k) {
    if (!a.contains(k)) continue;
    content = std::gcd(content, k);
    if (k >= static_cast<Natural>(a.preperiod)) cycle_member = true;
  }
  if (content == 0) return SubsemigroupDesc::trivial();
  if (cycle_member) content = std::gcd(content, static_cast<Natural>(a.period));

  // Every multiple of content from preperiod on is a member, so the gaps of
  // S / content lie below preperiod / content + 1.
  const Natural limit = 2 * (static_cast<Natural>(a.preperiod) / content + 2) + 2;
  std::vector<bool> bits(static_cast<std::size_t>(limit));
  Natural frobenius = -1;
  for (Natural k = 0; k < limit; ++k) {
    bits[static_cast<std::size_t>(k)] = a.contains(k * content);
    if (!bits[static_cast<std::size_t>(k)]) frobenius = k;
  }
  Natural mult = 1;
  while (!bits[static_cast<std::size_t>(mult)]) ++mult;
  bits.resize(static_cast<std::size_t>(frobenius + mult + 2));
  NumericalData part(std::move(bits), frobenius);
  return SubsemigroupDesc::from_generators([&] {
    std::vector<Natural> g = part.minimal_generators();
    for (auto& x : g) x *= content;
    return g;
  }());
}

inline void attach_certificates(const RationalMatrix& a, ExponentAnalysis& r, std::size_t samples) {
  if (samples == 0 || !r.final) return;
  const std::size_t hi = std::max<std::size_t>(2, r.preperiod + 2 * r.period);
  std::vector<Natural> ns;
  for (std::size_t i = 0; i < samples; ++i) {
    ns.push_back(static_cast<Natural>(samples == 1 ? hi : 1 + (i * (hi - 1)) / (samples - 1)));
  }
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  for (Natural n : ns) r.certificates.push_back({n, r.contains(n), verify_membership(a, n)});
}

}  // namespace detail

/// Computes S(A) = {n : A^n integral} exactly.
///
/// A non-integral characteristic polynomial means S(A) = {0}. Otherwise, with
/// m a uniform denominator, n is in S(A) exactly when m A^n == 0 (mod m), and
/// the residues obey the integer Cayley-Hamilton recurrence, so the window of
/// d consecutive residues is a finite-state machine. The stream ends at the
/// first repeated window, or as soon as d consecutive positive exponents are
/// members (then every later exponent is).
inline ExponentAnalysis exponent_semigroup(const RationalMatrix& a, const StateBudget& budget = {}) {
  const std::size_t d = a.dim();
  if (d == 0) throw PreconditionViolation("exponent_semigroup: empty matrix");
  ExponentAnalysis r;
  r.char_poly = char_poly(a);
  if (!r.char_poly.is_integral()) {
    r.termination = Termination::CharPolyNotIntegral;
    r.preperiod = 1;
    r.period = 1;
    r.membership_prefix = {true, false};
    r.classification = SubsemigroupDesc::trivial();
    detail::attach_certificates(a, r, std::min<std::size_t>(budget.certificate_samples, 2));
    return r;
  }

  std::vector<RationalMatrix> powers;
  powers.reserve(d);
  powers.push_back(RationalMatrix::identity(d));
  BigInt m = 1;
  for (std::size_t k = 1; k < d; ++k) {
    powers.push_back(mat_mul(powers.back(), a));
    m = lcm(m, denominator_lcm(powers.back()));
  }
  r.uniform_denominator = m;

  const detail::StreamOutcome s =
      m < BigInt(1ul << 62) ? detail::stream_residues(detail::WordResidues(m), powers, m, r.char_poly, budget)
                            : detail::stream_residues(detail::BigResidues(m), powers, m, r.char_poly, budget);

  r.termination = s.termination;
  r.states_explored = s.states;
  r.membership_prefix = s.members;
  r.state_preperiod = s.state_preperiod;
  r.state_period = s.state_period;
  r.run_exit_at = s.run_exit_at;
  if (s.termination == Termination::BudgetExceeded) {
    r.final = false;
    r.preperiod = s.members.size();
    r.period = 0;
    return r;
  }
  r.preperiod = s.preperiod;
  r.period = s.period;
  r.classification = detail::classify_pattern(r);
  detail::attach_certificates(a, r, budget.certificate_samples);
  return r;
}

/// Generator of the cyclic semigroup S(A) for det A = ±1, or nullopt when
/// S(A) = {0} (characteristic polynomial not integral).
inline std::optional<Natural> classify_cyclic(const RationalMatrix& a, const StateBudget& budget = {}) {
  const Rational dt = det(a);
  if (dt != Rational(1) && dt != Rational(-1)) {
    throw PreconditionViolation("classify_cyclic requires det = ±1, got " + dt.str());
  }
  const ExponentAnalysis r = exponent_semigroup(a, budget);
  if (!r.final) throw StateBudgetExceeded("classify_cyclic: state budget exhausted");
  const SubsemigroupDesc& s = *r.classification;
  if (s.is_trivial()) {
    if (r.termination == Termination::CharPolyNotIntegral) return std::nullopt;
    throw std::logic_error("det ±1 with integral characteristic polynomial gave a trivial exponent semigroup");
  }
  if (!s.part().is_full()) throw std::logic_error("det ±1 gave a non-cyclic exponent semigroup " + s.str());
  return s.content();
}

}  // namespace expsg
