#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lctkit {

using BigInt = mpz_class;

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Malformed input text or an invalid combination of options.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Input object violates a structural invariant (graph shape, definiteness).
class StructuralError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/*
 * Exact rational number, always reduced with a strictly positive
 * denominator. Thin value wrapper over GMP's mpq_class; every operation
 * canonicalizes its result.
 *
 * Text form: "p/q", with "/q" omitted when q == 1. The parser also accepts
 * finite decimals ("0.45" -> 9/20) and surrounding whitespace.
 */
class Rational {
public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(static_cast<long>(v)) {}  // NOLINT
  Rational(const BigInt& v) : q_(v) {}  // NOLINT
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  static Rational parse(std::string_view text);

  const BigInt& num() const { return q_.get_num(); }
  const BigInt& den() const { return q_.get_den(); }

  std::string str() const;

  bool is_integer() const { return den() == 1; }
  int sign() const { return sgn(q_); }
  Rational abs() const;
  Rational reciprocal() const;
  /// Largest integer not above the value.
  BigInt floor() const;
  BigInt ceil() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

  const mpq_class& raw() const { return q_; }

private:
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  mpq_class q_;
};

/// Fits-in-64-bit conversion; throws DomainError otherwise.
std::int64_t to_int64(const BigInt& v);

}  // namespace lctkit

template <>
struct std::hash<lctkit::Rational> {
  std::size_t operator()(const lctkit::Rational& r) const noexcept;
};
