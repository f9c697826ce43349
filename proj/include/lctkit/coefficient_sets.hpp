#pragma once

#include <compare>
#include <optional>
#include <string>

#include "lctkit/rational.hpp"

namespace lctkit {

/// A positive integer or the symbol infinity (inf > every integer).
class ExtendedMultiplicity {
public:
  static ExtendedMultiplicity finite(BigInt value);
  static ExtendedMultiplicity infinity() { return ExtendedMultiplicity(); }

  bool is_infinite() const { return !value_.has_value(); }
  /// Precondition: !is_infinite().
  const BigInt& value() const;

  /// 1/m, with 1/inf = 0.
  Rational reciprocal() const;
  /// 1 - 1/m, with 1 - 1/inf = 1.
  Rational one_minus_reciprocal() const;

  /// "inf" or the decimal integer.
  std::string str() const;
  static ExtendedMultiplicity parse(const std::string& text);

  friend bool operator==(const ExtendedMultiplicity& a, const ExtendedMultiplicity& b) {
    return (a <=> b) == 0;
  }
  friend std::strong_ordering operator<=>(const ExtendedMultiplicity& a,
                                          const ExtendedMultiplicity& b);

private:
  ExtendedMultiplicity() = default;
  std::optional<BigInt> value_;
};

/// m with x = 1 - 1/m, if any (m = inf iff x = 1). Requires 0 <= x <= 1.
std::optional<ExtendedMultiplicity> phi_sm_witness(const Rational& x);

/// x in {1 - 1/m} or alpha <= x <= 1. Requires x, alpha in [0,1].
bool phi_sm_alpha_member(const Rational& x, const Rational& alpha);

/// n with c = 1/n, if any (n = inf iff c = 0). Requires 0 <= c <= 1.
std::optional<ExtendedMultiplicity> t1_member(const Rational& c);

/// Throws DomainError unless 0 <= x <= 1; `what` names the argument.
void require_unit_interval(const Rational& x, const char* what);

}  // namespace lctkit
