#include "lctkit/toric.hpp"

#include <numeric>
#include <optional>

namespace lctkit {

CyclicQuotientGerm::CyclicQuotientGerm(std::int64_t m, std::int64_t q) : m_(m), q_(q) {
  if (m < 1) throw DomainError("germ order m must be positive");
  if (q < 1 || q > m) throw DomainError("germ weight q must satisfy 1 <= q <= m");
  if (std::gcd(m, q) != 1) throw DomainError("germ weights need gcd(m, q) = 1");
}

void AxesBoundary::validate() const {
  for (const Rational* l : {&lambda1, &lambda2}) {
    if (l->sign() < 0 || *l > Rational(1)) {
      throw DomainError("axis coefficient " + l->str() + " lies outside [0,1]");
    }
  }
}

std::vector<std::int64_t> hj_expand(std::int64_t m, std::int64_t q) {
  if (m < 1 || q < 1) throw DomainError("hj_expand needs positive m and q");
  if (std::gcd(m, q) != 1) throw DomainError("hj_expand needs gcd(m, q) = 1");
  if (m == 1) return {};
  if (q >= m) throw DomainError("hj_expand needs q < m");
  std::vector<std::int64_t> out;
  std::int64_t a = m;
  std::int64_t b = q;
  while (b != 0) {
    const std::int64_t ceil_ab = (a + b - 1) / b;
    out.push_back(ceil_ab);
    const std::int64_t next = ceil_ab * b - a;
    a = b;
    b = next;
  }
  return out;
}

bool in_lattice(const CyclicQuotientGerm& germ, const LatticeVector& v) {
  // v = (a/m, b/m) with integers a, b and b = a q (mod m).
  const Rational m(germ.m());
  const Rational a = v.v1 * m;
  const Rational b = v.v2 * m;
  if (!a.is_integer() || !b.is_integer()) return false;
  BigInt diff = b.num() - a.num() * germ.q();
  return mpz_divisible_ui_p(diff.get_mpz_t(), static_cast<unsigned long>(germ.m())) != 0;
}

void validate_lattice_vector(const CyclicQuotientGerm& germ, const LatticeVector& v) {
  if (v.v1.sign() < 0 || v.v2.sign() < 0) throw DomainError("lattice vector leaves the quadrant");
  if (v.v1.sign() == 0 && v.v2.sign() == 0) throw DomainError("lattice vector is zero");
  if (!in_lattice(germ, v)) throw DomainError("vector is not in the lattice of the germ");
  // v/d in N for some d >= 2 forces d | gcd(m v1, m v2).
  const Rational m(germ.m());
  BigInt g;
  mpz_gcd(g.get_mpz_t(), (v.v1 * m).num().get_mpz_t(), (v.v2 * m).num().get_mpz_t());
  const std::int64_t gmax = to_int64(g);
  for (std::int64_t d = 2; d <= gmax; ++d) {
    if (gmax % d != 0) continue;
    if (in_lattice(germ, {v.v1 / Rational(d), v.v2 / Rational(d)})) {
      throw DomainError("lattice vector is not primitive");
    }
  }
}

std::vector<LatticeVector> hilbert_basis(const CyclicQuotientGerm& germ) {
  std::vector<LatticeVector> out{{Rational(0), Rational(1)}};
  if (germ.smooth()) {
    out.push_back({Rational(1), Rational(0)});
    return out;
  }
  out.push_back({Rational(1, germ.m()), Rational(germ.q(), germ.m())});
  for (const std::int64_t a : hj_expand(germ.m(), germ.q())) {
    const auto& cur = out[out.size() - 1];
    const auto& prev = out[out.size() - 2];
    out.push_back({Rational(a) * cur.v1 - prev.v1, Rational(a) * cur.v2 - prev.v2});
  }
  if (!(out.back() == LatticeVector{Rational(1), Rational(0)})) {
    throw StructuralError("Hilbert basis recursion did not close at (1,0)");
  }
  return out;
}

Rational toric_discrepancy(const CyclicQuotientGerm& germ, const AxesBoundary& boundary,
                           const LatticeVector& v) {
  boundary.validate();
  validate_lattice_vector(germ, v);
  return v.v1 + v.v2 - Rational(1) - boundary.lambda1 * v.v1 - boundary.lambda2 * v.v2;
}

/*
 * The log discrepancy of v is the linear form (1 - lambda1) v1 + (1 - lambda2) v2,
 * whose coefficients are nonnegative. Every interior lattice point of the
 * quadrant is a nonnegative integer combination of two consecutive Hilbert
 * basis elements, so its value dominates that of an interior basis element
 * whenever one exists (s >= 1). For the smooth germ there is none and the
 * minimum over interior points is attained at (1,1). Toric valuations suffice
 * because the boundary is torus invariant.
 */
MldResult mld_over_basis(const std::vector<LatticeVector>& basis, const AxesBoundary& boundary,
                         bool include_codim1) {
  if (basis.size() < 2) throw DomainError("a Hilbert basis has at least the two axis rays");
  const Rational g1 = Rational(1) - boundary.lambda1;
  const Rational g2 = Rational(1) - boundary.lambda2;
  std::optional<MldResult> best;
  const auto consider = [&](const LatticeVector& v) {
    Rational d = g1 * v.v1 + g2 * v.v2 - Rational(1);
    if (!best || d < best->value) best = MldResult{std::move(d), v};
  };
  if (basis.size() == 2) consider({Rational(1), Rational(1)});
  for (std::size_t i = 1; i + 1 < basis.size(); ++i) consider(basis[i]);
  if (include_codim1) {
    consider(basis.back());
    consider(basis.front());
  }
  return *best;
}

MldResult mld_axes(const CyclicQuotientGerm& germ, const AxesBoundary& boundary,
                   bool include_codim1) {
  boundary.validate();
  return mld_over_basis(hilbert_basis(germ), boundary, include_codim1);
}

PairDiscrVerdict pair_discr_check(const CyclicQuotientGerm& germ, const AxesBoundary& boundary,
                                  std::int64_t N) {
  if (N < 6) throw DomainError("pair_discr_check needs N >= 6");
  boundary.validate();
  const Rational floor_coeff = Rational(1) - Rational(1, N);
  if (boundary.lambda1 <= floor_coeff || boundary.lambda2 <= floor_coeff) {
    throw DomainError("pair_discr_check needs both coefficients in (1 - 1/N, 1]");
  }
  const MldResult mld = mld_axes(germ, boundary, false);
  PairDiscrVerdict v{PairDiscrOutcome::HypothesisFails, mld.value, mld.argmin,
                     boundary.lambda1 + boundary.lambda2, Rational(2) - Rational(1, N)};
  if (mld.value < Rational(-1) + Rational(1, N)) return v;
  v.outcome = v.lambda_sum <= v.bound ? PairDiscrOutcome::ImplicationHolds
                                      : PairDiscrOutcome::Counterexample;
  return v;
}

Rational diff_coefficient(std::int64_t m, const std::vector<DiffContribution>& contributions) {
  if (m < 1) throw DomainError("diff_coefficient needs m >= 1");
  Rational sum(0);
  for (const auto& [k, d] : contributions) {
    if (k < 0) throw DomainError("diff_coefficient needs k >= 0");
    if (d.sign() < 0 || d > Rational(1)) throw DomainError("diff_coefficient needs d in [0,1]");
    sum += Rational(k) * d;
  }
  const Rational mr(m);
  return Rational(1) - Rational(1) / mr + sum / mr;
}

const char* to_string(PairDiscrOutcome o) {
  switch (o) {
    case PairDiscrOutcome::HypothesisFails: return "hypothesis-fails";
    case PairDiscrOutcome::ImplicationHolds: return "implication-holds";
    case PairDiscrOutcome::Counterexample: return "counterexample";
  }
  return "?";
}

}  // namespace lctkit
