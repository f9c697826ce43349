#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lctkit/rational.hpp"
#include "lctkit/thresholds.hpp"
#include "lctkit/toric.hpp"

namespace lctkit {

// ---------------------------------------------------------------------------
// Boundaries on P^1

/// Coefficients of a boundary on P^1, each in [0,1].
struct P1Boundary {
  std::vector<Rational> coefficients;

  void validate() const;
};

enum class P1Outcome { HypothesisViolated, ConclusionHolds, Counterexample };

struct P1Verdict {
  P1Outcome outcome;
  std::string reason;               // which hypothesis failed, when one did
  std::optional<std::size_t> witness;  // index j with 1/2 + 1/N < lambda_j < 1
};

/*
 * Hypotheses: (i) the coefficients sum to 2, (ii) each lies in
 * Phi_sm^{1/2+1/N}, (iii) some lambda_j satisfies 1/2 + 1/N < lambda_j < 1.
 * Conclusion: every lambda_i <= 1 - 1/N. Requires N >= 6.
 */
P1Verdict lemma_p1_verify(std::int64_t N, const P1Boundary& boundary);

struct P1ScanReport {
  std::uint64_t instances_checked = 0;
  std::vector<std::vector<Rational>> counterexamples;  // each sorted descending
};

/// Every boundary with at most four components drawn from
/// {1 - 1/m : m <= max_m} and the rationals of [1/2 + 1/N, 1] with denominator
/// <= max_den that satisfies all hypotheses.
P1ScanReport lemma_p1_scan(std::int64_t N, std::int64_t max_m, std::int64_t max_den,
                           unsigned workers = 1);

// ---------------------------------------------------------------------------
// Rounding coefficients above 1 - 1/N

/// xi_i = 1 if theta_i > 1 - 1/N, theta_i otherwise.
std::vector<Rational> xi_transform(const std::vector<Rational>& coefficients, std::int64_t N);

enum class Lct2Outcome { NotKlt, LcHolds, Violation };

struct Lct2Verdict {
  Lct2Outcome outcome;
  MldResult klt_mld;          // total minimum for the original boundary
  AxesBoundary xi;
  std::optional<MldResult> lc_mld;  // total minimum for the rounded boundary
  /// Verdicts only cover cyclic quotient germs with an axes boundary.
  static constexpr const char* scope = "toric germs with torus-invariant boundary";
};

/// If (germ, boundary) is klt then (germ, xi(boundary)) is lc.
/// Requires N >= 6 and both coefficients in Phi_sm^{1/2+1/N}.
Lct2Verdict lct2_desk_check(const CyclicQuotientGerm& germ, const AxesBoundary& boundary,
                            std::int64_t N);

struct Lct2ScanReport {
  std::uint64_t instances_checked = 0;
  std::uint64_t klt_instances = 0;
  std::vector<std::pair<CyclicQuotientGerm, AxesBoundary>> violations;
};

/// All germs with m <= max_m against all coefficient pairs of Phi_sm^{1/2+1/N}
/// with denominator <= max_den.
Lct2ScanReport lct2_scan(std::int64_t N, std::int64_t max_m, std::int64_t max_den,
                         unsigned workers = 1);

// ---------------------------------------------------------------------------
// Sampling the pair discrepancy bound

struct PairDiscrInstance {
  CyclicQuotientGerm germ;
  AxesBoundary boundary;
  std::int64_t N;
};

/// Deterministic for a given seed: N in [6,20], m in [1,max_m], q coprime to m,
/// lambda_i = 1 - t/(N D) with D in [1,30] and 0 <= t < D.
std::vector<PairDiscrInstance> sample_pair_discr_instances(std::size_t count, std::uint64_t seed,
                                                           std::int64_t max_m = 50);

struct PairDiscrReport {
  std::uint64_t instances_checked = 0;
  std::uint64_t hypothesis_held = 0;
  std::vector<PairDiscrInstance> counterexamples;
};

PairDiscrReport pair_discr_sample(std::size_t count, std::uint64_t seed, std::int64_t max_m = 50);

// ---------------------------------------------------------------------------
// Adjunction ledger

struct DiffTerm {
  std::int64_t s = 1;
  std::int64_t r = 0;
};

/*
 * sum_j (1 - 1/s_j + r_j c/s_j) = 2 - 2 pa + (1 - gamma) gamma_sq
 * Diff terms use r c <= 1 (not strict).
 */
struct EqSLedger {
  std::int64_t pa = 0;
  Rational gamma_sq{1};
  Rational gamma{1};
  std::vector<DiffTerm> diff_terms;
  Rational c{0};

  Rational lhs() const;
  Rational rhs() const;
  /// Throws DomainError on any invariant violation.
  void validate() const;
};

bool adjunction_holds(const EqSLedger& ledger);

struct SolveResult {
  enum class Kind { Unique, None, IdenticallySatisfied };
  Kind kind = Kind::None;
  std::optional<Rational> value;
};

/// Unknown c; the ledger's c is ignored.
SolveResult solve_for_c(const EqSLedger& ledger);
/// Unknown gamma; the ledger's gamma is ignored.
SolveResult solve_for_gamma(const EqSLedger& ledger);

struct EqSReport {
  std::uint64_t instances_checked = 0;
  std::uint64_t c_unique = 0;
  std::uint64_t c_identically_satisfied = 0;
  std::uint64_t all_r_zero = 0;
  std::vector<EqSLedger> failures;
};

/// Random valid ledgers: gamma is solved, then c is recovered from the solved
/// ledger, and both must re-verify exactly. For ledgers with every r_j = 0 the
/// solved gamma must not depend on c.
EqSReport eq_s_roundtrip(std::size_t count, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Numeric conditions on a Picard-rank-one log surface

struct LpTerm {
  std::int64_t m = 1;
  std::int64_t k = 0;
  Rational degree{1};
};

struct LpVerdict {
  bool coefficients_ok = true;   // k c < 1 and (m, k) admissible
  bool numerically_trivial = true;  // sum theta_i deg_i = anticanonical degree
  bool ample = true;             // anticanonical degree - sum (1 - 1/m_i) deg_i > 0
  bool k_positive = true;        // sum k_i >= 1

  bool passes() const { return coefficients_ok && numerically_trivial && ample && k_positive; }
  std::vector<std::string> failures() const;
};

LpVerdict lp_numeric_check(const Rational& c, const std::vector<LpTerm>& terms,
                           const Rational& anticanonical_degree);

const char* to_string(P1Outcome o);
const char* to_string(Lct2Outcome o);
const char* to_string(SolveResult::Kind k);

}  // namespace lctkit
