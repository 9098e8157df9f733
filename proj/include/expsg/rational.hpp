#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "expsg/errors.hpp"

namespace expsg {

using BigInt = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Thin value wrapper around GMP's mpq_class that refuses to
/// hold a zero denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : q_(static_cast<long>(value)) {}  // NOLINT
  Rational(const BigInt& value) : q_(value) {}  // NOLINT

  Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) throw ArithmeticError("zero denominator");
    q_.get_num() = numerator;
    q_.get_den() = denominator;
    q_.canonicalize();
  }

  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p/q" or "p" with optional surrounding whitespace.
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return q_; }
  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  const mpz_class& num_ref() const { return q_.get_num(); }
  const mpz_class& den_ref() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  std::string str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw ArithmeticError("division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_{0};
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

inline BigInt parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw ParseError("malformed rational '" + std::string(whole) + "'");
  for (char c : digits) {
    if (c < '0' || c > '9') throw ParseError("malformed rational '" + std::string(whole) + "'");
  }
  std::string buf(s);
  if (buf.front() == '+') buf.erase(0, 1);
  return BigInt(buf, 10);
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
  const std::string_view s = detail::trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_integer(s, text));
  BigInt num = detail::parse_integer(s.substr(0, slash), text);
  BigInt den = detail::parse_integer(s.substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Floor division for big integers (rounds toward negative infinity).
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Non-negative remainder in [0, |m|).
inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline BigInt pow_big(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

/// b^e for a (possibly negative) integer exponent.
inline Rational pow_int(long base, long exponent) {
  const BigInt p = pow_big(BigInt(base), static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rational(BigInt(1), p) : Rational(p);
}

inline std::size_t hash_value(const BigInt& v) {
  std::size_t h = 1469598103934665603ull;
  const std::size_t n = mpz_size(v.get_mpz_t());
  for (std::size_t i = 0; i < n; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(v.get_mpz_t(), i));
    h *= 1099511628211ull;
  }
  return h ^ static_cast<std::size_t>(sgn(v) + 1);
}

}  // namespace expsg

template <>
struct std::hash<expsg::Rational> {
  std::size_t operator()(const expsg::Rational& r) const noexcept {
    return expsg::hash_value(r.num_ref()) * 31u + expsg::hash_value(r.den_ref());
  }
};
