#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "lctkit/coefficient_sets.hpp"
#include "lctkit/rational.hpp"

namespace lctkit {

/// Boundary coefficient 1 - 1/m + k*c/m as a function of the threshold c.
struct CoeffTerm {
  std::int64_t m = 1;
  std::int64_t k = 0;

  friend auto operator<=>(const CoeffTerm&, const CoeffTerm&) = default;
};

/// Throws DomainError for m < 1, k < 0 or the zero term (m, k) = (1, 0).
void validate_term(const CoeffTerm& term);

Rational theta_value(const CoeffTerm& term, const Rational& c);

/*
 * Certificate that c lies in the two-dimensional threshold set:
 *   sum_i (1 - 1/m_i + k_i c/m_i) = 2,  sum_i k_i >= 1,  k_i c < 1.
 * Terms are kept sorted by (m, k).
 */
struct WitnessT2 {
  Rational c;
  std::vector<CoeffTerm> terms;

  /// Recomputes every invariant from scratch; true iff all hold exactly.
  bool verify() const;
  std::vector<Rational> theta_values() const;
};

/// Lexicographic comparison of canonical term lists.
bool witness_less(const WitnessT2& a, const WitnessT2& b);

/// Termination data of an exhaustive witness search; certifies a negative answer.
struct SearchBounds {
  std::int64_t r_min = 3;
  std::int64_t r_max = 0;
  std::int64_t k_max = 0;
  /// Largest m-bound encountered at each slot depth (index 0 = first term).
  std::vector<std::int64_t> m_bounds;
  std::uint64_t nodes = 0;
};

struct InT1 {
  ExtendedMultiplicity n;
};
struct InT2 {
  WitnessT2 witness;
};
struct NotInT2 {
  SearchBounds bounds;
};
using MembershipVerdict = std::variant<InT1, InT2, NotInT2>;

inline bool is_member(const MembershipVerdict& v) { return !std::holds_alternative<NotInT2>(v); }

/// Requires 0 < c <= 1; throws DomainError otherwise.
void require_threshold_domain(const Rational& c);

/*
 * Visits every solution of the coefficient equation with k*c < 1 strictly,
 * each multiset exactly once. Returns the search bounds.
 */
SearchBounds for_each_t2_witness(const Rational& c,
                                 const std::function<void(const WitnessT2&)>& visit);

std::vector<WitnessT2> t2_all_witnesses(const Rational& c);

/// Lexicographically minimal witness, if any.
std::optional<WitnessT2> t2_witness_search(const Rational& c, SearchBounds* bounds = nullptr);

MembershipVerdict t2_member(const Rational& c);

/// n >= 2 with c = 1/2 + 1/n. Requires 1/2 < c <= 1.
std::optional<std::int64_t> t2_form_check(const Rational& c);

struct Interval {
  Rational lo;
  Rational hi;
  bool closed_lo = true;
  bool closed_hi = true;

  bool contains(const Rational& x) const;
};

/// Reduced fractions in the interval with denominator <= maxden, ascending.
std::vector<Rational> stern_brocot_range(const Interval& range, std::int64_t maxden);

struct EnumeratedPoint {
  Rational c;
  MembershipVerdict verdict;
};

/// All members of the threshold set in the interval with denominator <= maxden,
/// with their verdicts, ascending. Membership tests are spread over `workers`
/// threads; output order does not depend on the worker count.
std::vector<EnumeratedPoint> t2_enumerate_verdicts(const Interval& range, std::int64_t maxden,
                                                   unsigned workers = 1);

std::vector<Rational> t2_enumerate(const Interval& range, std::int64_t maxden,
                                   unsigned workers = 1);

struct AccumulationRecord {
  Rational target;
  std::size_t count = 0;
  std::optional<Rational> nearest;
};

/// For each target t: how many values lie in (t - delta, t + delta) \ {t}, and the
/// closest value other than t itself.
std::vector<AccumulationRecord> accumulation_report(const std::vector<Rational>& values,
                                                    const std::vector<Rational>& targets,
                                                    const Rational& delta);

/*
 * Points of an upper-half listing on which the two published descriptions of
 * the set in [1/2, 1] disagree: {1/2 + 1/n : n >= 2} admits c = 1, while the
 * {n >= 3} form does not; neither form contains 1/2, which is in T1.
 */
struct FormDiscrepancy {
  std::vector<Rational> only_in_n_ge_2;
  std::vector<Rational> t1_outside_both;
};
FormDiscrepancy upper_half_form_discrepancy(const std::vector<Rational>& members);

}  // namespace lctkit
