#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lctkit/rational.hpp"

namespace lctkit {

/// The surface germ C^2 / Z_m(1, q); m = 1 is the smooth germ.
class CyclicQuotientGerm {
public:
  /// Throws DomainError unless m >= 1, 1 <= q <= m and gcd(m, q) = 1.
  CyclicQuotientGerm(std::int64_t m, std::int64_t q);

  std::int64_t m() const { return m_; }
  std::int64_t q() const { return q_; }
  bool smooth() const { return m_ == 1; }

  friend bool operator==(const CyclicQuotientGerm&, const CyclicQuotientGerm&) = default;

private:
  std::int64_t m_;
  std::int64_t q_;
};

/// Coefficients of the two coordinate axes. lambda1 sits on the divisor of
/// the ray (1,0), lambda2 on the ray (0,1).
struct AxesBoundary {
  Rational lambda1;
  Rational lambda2;

  void validate() const;
};

/// A point of N = Z^2 + Z (1/m)(1, q).
struct LatticeVector {
  Rational v1;
  Rational v2;

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
};

/// Hirzebruch-Jung expansion m/q = a1 - 1/(a2 - ...), all a_i >= 2.
/// Requires gcd(m, q) = 1 and 1 <= q < m; m = 1 yields the empty list.
std::vector<std::int64_t> hj_expand(std::int64_t m, std::int64_t q);

bool in_lattice(const CyclicQuotientGerm& germ, const LatticeVector& v);
/// Throws DomainError unless v is a primitive lattice point of the closed quadrant.
void validate_lattice_vector(const CyclicQuotientGerm& germ, const LatticeVector& v);

/*
 * Hilbert basis of the quadrant cone in N, ordered from the ray (0,1) to the
 * ray (1,0): u_0 = (0,1), u_1 = (1/m)(1,q), u_{j+1} = a_j u_j - u_{j-1},
 * ending at (1,0). Interior elements u_1..u_s correspond one-to-one (in
 * order) to the curves of the minimal resolution chain.
 */
std::vector<LatticeVector> hilbert_basis(const CyclicQuotientGerm& germ);

/// Discrepancy v1 + v2 - 1 - lambda1 v1 - lambda2 v2 of the toric valuation v.
Rational toric_discrepancy(const CyclicQuotientGerm& germ, const AxesBoundary& boundary,
                           const LatticeVector& v);

struct MldResult {
  Rational value;
  LatticeVector argmin;
};

/// Minimal discrepancy over exceptional toric valuations (centre of codimension 2),
/// or over all of them including the two axes when include_codim1 is set.
MldResult mld_axes(const CyclicQuotientGerm& germ, const AxesBoundary& boundary,
                   bool include_codim1);

/// Same minimum over a precomputed hilbert_basis(germ); the boundary is not revalidated.
MldResult mld_over_basis(const std::vector<LatticeVector>& basis, const AxesBoundary& boundary,
                         bool include_codim1);

enum class PairDiscrOutcome { HypothesisFails, ImplicationHolds, Counterexample };

struct PairDiscrVerdict {
  PairDiscrOutcome outcome;
  Rational discr;        // codimension-2 minimum
  LatticeVector argmin;
  Rational lambda_sum;
  Rational bound;        // 2 - 1/N
};

/// If discr >= -1 + 1/N then lambda1 + lambda2 <= 2 - 1/N.
/// Requires N >= 6 and both lambda_i in (1 - 1/N, 1].
PairDiscrVerdict pair_discr_check(const CyclicQuotientGerm& germ, const AxesBoundary& boundary,
                                  std::int64_t N);

struct DiffContribution {
  std::int64_t k = 0;
  Rational d;
};

/// 1 - 1/m + (sum k d)/m.
Rational diff_coefficient(std::int64_t m, const std::vector<DiffContribution>& contributions);

const char* to_string(PairDiscrOutcome o);

}  // namespace lctkit
