#include "lctkit/rational.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace lctkit {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch) != 0; });
}

BigInt parse_int(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw UsageError("malformed rational: '" + std::string(whole) + "'");
  }
  BigInt v(std::string(s), 10);
  return neg ? BigInt(-v) : v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw UsageError("empty rational");
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const BigInt p = parse_int(s.substr(0, slash), s);
    std::string_view qs = s.substr(slash + 1);
    if (!all_digits(qs)) throw UsageError("malformed rational: '" + std::string(s) + "'");
    const BigInt q(std::string(qs), 10);
    if (q == 0) throw UsageError("zero denominator: '" + std::string(s) + "'");
    return {p, q};
  }
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    bool neg = false;
    if (!ip.empty() && (ip.front() == '-' || ip.front() == '+')) {
      neg = ip.front() == '-';
      ip.remove_prefix(1);
    }
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
        (!fp.empty() && !all_digits(fp))) {
      throw UsageError("malformed decimal: '" + std::string(s) + "'");
    }
    BigInt scale = 1;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    const BigInt whole = ip.empty() ? BigInt(0) : BigInt(std::string(ip), 10);
    const BigInt frac = fp.empty() ? BigInt(0) : BigInt(std::string(fp), 10);
    BigInt n = whole * scale + frac;
    if (neg) n = -n;
    return {n, scale};
  }
  return Rational(parse_int(s, s));
}

std::string Rational::str() const {
  if (den() == 1) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::reciprocal() const {
  if (sign() == 0) throw DomainError("reciprocal of zero");
  return Rational(mpq_class(1 / q_));
}

BigInt Rational::floor() const {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return r;
}

BigInt Rational::ceil() const {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return r;
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

std::int64_t to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) throw DomainError("integer out of 64-bit range: " + v.get_str());
  return v.get_si();
}

}  // namespace lctkit

std::size_t std::hash<lctkit::Rational>::operator()(const lctkit::Rational& r) const noexcept {
  const std::size_t h1 = mpz_get_ui(r.num().get_mpz_t()) ^ static_cast<std::size_t>(sgn(r.num()));
  const std::size_t h2 = mpz_get_ui(r.den().get_mpz_t());
  return h1 * 0x9E3779B97F4A7C15ULL ^ (h2 + (h1 << 6) + (h1 >> 2));
}
