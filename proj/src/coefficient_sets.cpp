#include "lctkit/coefficient_sets.hpp"

namespace lctkit {

ExtendedMultiplicity ExtendedMultiplicity::finite(BigInt value) {
  if (value < 1) throw DomainError("multiplicity must be a positive integer");
  ExtendedMultiplicity m;
  m.value_ = std::move(value);
  return m;
}

const BigInt& ExtendedMultiplicity::value() const {
  if (!value_) throw DomainError("infinite multiplicity has no integer value");
  return *value_;
}

Rational ExtendedMultiplicity::reciprocal() const {
  if (!value_) return Rational(0);
  return Rational(BigInt(1), *value_);
}

Rational ExtendedMultiplicity::one_minus_reciprocal() const {
  return Rational(1) - reciprocal();
}

std::string ExtendedMultiplicity::str() const { return value_ ? value_->get_str() : "inf"; }

ExtendedMultiplicity ExtendedMultiplicity::parse(const std::string& text) {
  if (text == "inf") return infinity();
  const Rational r = Rational::parse(text);
  if (!r.is_integer() || r.sign() <= 0) throw UsageError("not a multiplicity: '" + text + "'");
  return finite(r.num());
}

std::strong_ordering operator<=>(const ExtendedMultiplicity& a, const ExtendedMultiplicity& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
  }
  const int c = cmp(*a.value_, *b.value_);
  return c <=> 0;
}

void require_unit_interval(const Rational& x, const char* what) {
  if (x.sign() < 0 || x > Rational(1)) {
    throw DomainError(std::string(what) + " = " + x.str() + " lies outside [0,1]");
  }
}

std::optional<ExtendedMultiplicity> phi_sm_witness(const Rational& x) {
  require_unit_interval(x, "x");
  if (x == Rational(1)) return ExtendedMultiplicity::infinity();
  // 1 - x = 1/m  <=>  (1 - x) has numerator 1.
  const Rational gap = Rational(1) - x;
  if (gap.num() != 1) return std::nullopt;
  return ExtendedMultiplicity::finite(gap.den());
}

bool phi_sm_alpha_member(const Rational& x, const Rational& alpha) {
  require_unit_interval(x, "x");
  require_unit_interval(alpha, "alpha");
  return x >= alpha || phi_sm_witness(x).has_value();
}

std::optional<ExtendedMultiplicity> t1_member(const Rational& c) {
  require_unit_interval(c, "c");
  if (c.sign() == 0) return ExtendedMultiplicity::infinity();
  if (c.num() != 1) return std::nullopt;
  return ExtendedMultiplicity::finite(c.den());
}

}  // namespace lctkit
