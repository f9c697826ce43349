#include "lctkit/verifiers.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <thread>
#include <tuple>

#include "lctkit/coefficient_sets.hpp"

namespace lctkit {

namespace {

// Portable bounded draws (the standard distributions are implementation-defined).
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

private:
  std::mt19937_64 engine_;
};

Rational threshold_alpha(std::int64_t N) { return Rational(1, 2) + Rational(1, N); }

void require_n(std::int64_t N) {
  if (N < 6) throw DomainError("N must be at least 6");
}

template <typename Fn>
void run_strided(std::size_t n, unsigned workers, Fn&& fn) {
  const std::size_t w = std::max<std::size_t>(1, std::min<std::size_t>(workers, n));
  std::vector<std::jthread> pool;
  for (std::size_t i = 0; i < w; ++i) {
    pool.emplace_back([&, i] {
      for (std::size_t j = i; j < n; j += w) fn(i, j);
    });
  }
}

}  // namespace

// ---------------------------------------------------------------------------

void P1Boundary::validate() const {
  for (const auto& l : coefficients) require_unit_interval(l, "boundary coefficient");
}

P1Verdict lemma_p1_verify(std::int64_t N, const P1Boundary& boundary) {
  require_n(N);
  boundary.validate();
  const Rational alpha = threshold_alpha(N);
  const auto& coeffs = boundary.coefficients;
  const Rational sum = std::accumulate(coeffs.begin(), coeffs.end(), Rational(0));
  if (sum != Rational(2)) {
    return {P1Outcome::HypothesisViolated, "(i) coefficients sum to " + sum.str(), std::nullopt};
  }
  for (const auto& l : coeffs) {
    if (!phi_sm_alpha_member(l, alpha)) {
      return {P1Outcome::HypothesisViolated,
              "(ii) " + l.str() + " not in Phi_sm^" + alpha.str(), std::nullopt};
    }
  }
  std::optional<std::size_t> witness;
  for (std::size_t j = 0; j < coeffs.size() && !witness; ++j) {
    if (coeffs[j] > alpha && coeffs[j] < Rational(1)) witness = j;
  }
  if (!witness) {
    return {P1Outcome::HypothesisViolated, "(iii) no coefficient strictly between " + alpha.str() +
                                               " and 1", std::nullopt};
  }
  const Rational cap = Rational(1) - Rational(1, N);
  const bool holds = std::all_of(coeffs.begin(), coeffs.end(), [&](const Rational& l) { return l <= cap; });
  return {holds ? P1Outcome::ConclusionHolds : P1Outcome::Counterexample, "", witness};
}

P1ScanReport lemma_p1_scan(std::int64_t N, std::int64_t max_m, std::int64_t max_den,
                           unsigned workers) {
  require_n(N);
  if (max_m < 1 || max_den < 1) throw UsageError("scan bounds must be positive");
  // Keeps the integer screening below 2^63: |value| <= 2 max_den^2 max_m.
  if (max_m > 100000 || max_den > 100000) throw UsageError("scan bounds must be at most 100000");
  const Rational alpha = threshold_alpha(N);
  std::vector<Rational> values;
  for (std::int64_t m = 1; m <= max_m; ++m) values.push_back(Rational(1) - Rational(1, m));
  for (std::int64_t q = 1; q <= max_den; ++q) {
    for (std::int64_t p = 1; p <= q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      Rational x(p, q);
      if (x >= alpha) values.push_back(std::move(x));
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  const auto in_set = [&](const Rational& x) {
    return std::binary_search(values.begin(), values.end(), x);
  };

  // Multisets a >= b >= c >= d with sum 2; zeros stand for absent components.
  const std::size_t n = values.size();
  std::vector<P1ScanReport> partial(std::max(1u, workers));
  run_strided(n, workers, [&](std::size_t w, std::size_t ia) {
    const Rational& a = values[ia];
    for (std::size_t ib = ia + 1; ib-- > 0;) {
      const Rational& b = values[ib];
      const Rational rem = Rational(2) - a - b;
      if (rem.sign() < 0) continue;
      if (rem > Rational(2) * b) break;
      const Rational half = rem / Rational(2);
      for (std::size_t id = 0; id < n && values[id] <= half; ++id) {
        const Rational& d = values[id];
        const Rational c = rem - d;
        if (c > b || !in_set(c)) continue;
        P1Boundary boundary{{a, b, c, d}};
        const P1Verdict v = lemma_p1_verify(N, boundary);
        if (v.outcome == P1Outcome::HypothesisViolated) continue;
        ++partial[w].instances_checked;
        if (v.outcome == P1Outcome::Counterexample) partial[w].counterexamples.push_back(boundary.coefficients);
      }
    }
  });
  P1ScanReport out;
  for (auto& p : partial) {
    out.instances_checked += p.instances_checked;
    for (auto& ce : p.counterexamples) out.counterexamples.push_back(std::move(ce));
  }
  std::sort(out.counterexamples.begin(), out.counterexamples.end());
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Rational> xi_transform(const std::vector<Rational>& coefficients, std::int64_t N) {
  require_n(N);
  const Rational cutoff = Rational(1) - Rational(1, N);
  std::vector<Rational> out;
  out.reserve(coefficients.size());
  for (const auto& t : coefficients) {
    require_unit_interval(t, "coefficient");
    out.push_back(t > cutoff ? Rational(1) : t);
  }
  return out;
}

namespace {

Lct2Verdict lct2_on_basis(const std::vector<LatticeVector>& basis, const AxesBoundary& boundary,
                          std::int64_t N) {
  const auto xi = xi_transform({boundary.lambda1, boundary.lambda2}, N);
  Lct2Verdict v{Lct2Outcome::NotKlt, mld_over_basis(basis, boundary, true), AxesBoundary{xi[0], xi[1]},
                std::nullopt};
  if (v.klt_mld.value <= Rational(-1)) return v;
  v.lc_mld = mld_over_basis(basis, v.xi, true);
  v.outcome = v.lc_mld->value >= Rational(-1) ? Lct2Outcome::LcHolds : Lct2Outcome::Violation;
  return v;
}

}  // namespace

Lct2Verdict lct2_desk_check(const CyclicQuotientGerm& germ, const AxesBoundary& boundary,
                            std::int64_t N) {
  require_n(N);
  boundary.validate();
  const Rational alpha = threshold_alpha(N);
  if (!phi_sm_alpha_member(boundary.lambda1, alpha) || !phi_sm_alpha_member(boundary.lambda2, alpha)) {
    throw DomainError("boundary coefficients must lie in Phi_sm^" + alpha.str());
  }
  return lct2_on_basis(hilbert_basis(germ), boundary, N);
}

Lct2ScanReport lct2_scan(std::int64_t N, std::int64_t max_m, std::int64_t max_den,
                         unsigned workers) {
  require_n(N);
  if (max_m < 1 || max_den < 1) throw UsageError("scan bounds must be positive");
  // Keeps the integer screening below 2^63: |value| <= 2 max_den^2 max_m.
  if (max_m > 100000 || max_den > 100000) throw UsageError("scan bounds must be at most 100000");
  const Rational alpha = threshold_alpha(N);
  std::vector<Rational> values;
  for (std::int64_t q = 1; q <= max_den; ++q) {
    for (std::int64_t p = 0; p <= q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      Rational x(p, q);
      if (phi_sm_alpha_member(x, alpha)) values.push_back(std::move(x));
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<CyclicQuotientGerm> germs;
  for (std::int64_t m = 1; m <= max_m; ++m) {
    for (std::int64_t q = 1; q <= m; ++q) {
      if (std::gcd(m, q) == 1) germs.emplace_back(m, q);
    }
  }
  // Screening in integers: with v = (a, b)/m and lambda_i = p_i/q_i, the log
  // discrepancy of v times m q1 q2 is (q1 - p1) q2 a + (q2 - p2) q1 b, and
  // klt / lc only need its sign. Anything flagged is re-run through the exact
  // rational check before it is reported.
  struct Frac {
    std::int64_t p, q;
  };
  std::vector<Frac> fr;
  std::vector<Frac> xi_fr;
  const Rational cutoff = Rational(1) - Rational(1, N);
  for (const auto& v : values) {
    fr.push_back({to_int64(v.num()), to_int64(v.den())});
    xi_fr.push_back(v > cutoff ? Frac{1, 1} : fr.back());
  }
  std::vector<Lct2ScanReport> partial(std::max(1u, workers));
  run_strided(germs.size(), workers, [&](std::size_t w, std::size_t ig) {
    const auto basis = hilbert_basis(germs[ig]);
    const std::int64_t m = germs[ig].m();
    std::vector<std::pair<std::int64_t, std::int64_t>> pts;
    for (const auto& v : basis) {
      pts.emplace_back(to_int64((v.v1 * Rational(m)).num()), to_int64((v.v2 * Rational(m)).num()));
    }
    if (basis.size() == 2) pts.emplace_back(m, m);
    const auto min_sign = [&](const Frac& l1, const Frac& l2) {
      int worst = 1;
      for (const auto& [a, b] : pts) {
        const std::int64_t val = (l1.q - l1.p) * l2.q * a + (l2.q - l2.p) * l1.q * b;
        worst = std::min(worst, val > 0 ? 1 : (val == 0 ? 0 : -1));
      }
      return worst;
    };
    for (std::size_t i = 0; i < values.size(); ++i) {
      for (std::size_t j = 0; j < values.size(); ++j) {
        ++partial[w].instances_checked;
        if (min_sign(fr[i], fr[j]) <= 0) continue;  // not klt
        ++partial[w].klt_instances;
        if (min_sign(xi_fr[i], xi_fr[j]) >= 0) continue;
        const AxesBoundary b{values[i], values[j]};
        if (lct2_on_basis(basis, b, N).outcome == Lct2Outcome::Violation) {
          partial[w].violations.emplace_back(germs[ig], b);
        }
      }
    }
  });
  Lct2ScanReport out;
  for (auto& p : partial) {
    out.instances_checked += p.instances_checked;
    out.klt_instances += p.klt_instances;
    for (auto& v : p.violations) out.violations.push_back(std::move(v));
  }
  std::sort(out.violations.begin(), out.violations.end(), [](const auto& x, const auto& y) {
    return std::make_tuple(x.first.m(), x.first.q(), x.second.lambda1, x.second.lambda2) <
           std::make_tuple(y.first.m(), y.first.q(), y.second.lambda1, y.second.lambda2);
  });
  return out;
}

// ---------------------------------------------------------------------------

std::vector<PairDiscrInstance> sample_pair_discr_instances(std::size_t count, std::uint64_t seed,
                                                           std::int64_t max_m) {
  if (max_m < 1) throw UsageError("max_m must be positive");
  SeededRng rng(seed);
  std::vector<PairDiscrInstance> out;
  out.reserve(count);
  while (out.size() < count) {
    const std::int64_t N = rng.uniform(6, 20);
    const std::int64_t m = rng.uniform(1, max_m);
    std::int64_t q = 1;
    if (m > 1) {
      do q = rng.uniform(1, m - 1);
      while (std::gcd(m, q) != 1);
    }
    const auto draw_lambda = [&] {
      const std::int64_t D = rng.uniform(1, 30);
      const std::int64_t t = rng.uniform(0, D - 1);
      return Rational(1) - Rational(t, N * D);
    };
    Rational l1 = draw_lambda();
    Rational l2 = draw_lambda();
    out.push_back({CyclicQuotientGerm(m, q), AxesBoundary{std::move(l1), std::move(l2)}, N});
  }
  return out;
}

PairDiscrReport pair_discr_sample(std::size_t count, std::uint64_t seed, std::int64_t max_m) {
  PairDiscrReport report;
  for (auto& inst : sample_pair_discr_instances(count, seed, max_m)) {
    const PairDiscrVerdict v = pair_discr_check(inst.germ, inst.boundary, inst.N);
    ++report.instances_checked;
    if (v.outcome != PairDiscrOutcome::HypothesisFails) ++report.hypothesis_held;
    if (v.outcome == PairDiscrOutcome::Counterexample) report.counterexamples.push_back(std::move(inst));
  }
  return report;
}

// ---------------------------------------------------------------------------

Rational EqSLedger::lhs() const {
  Rational sum(0);
  for (const auto& t : diff_terms) {
    const Rational s(t.s);
    sum += Rational(1) - Rational(1) / s + Rational(t.r) * c / s;
  }
  return sum;
}

Rational EqSLedger::rhs() const {
  return Rational(2 - 2 * pa) + (Rational(1) - gamma) * gamma_sq;
}

void EqSLedger::validate() const {
  if (pa < 0) throw DomainError("arithmetic genus must be nonnegative");
  if (gamma_sq.sign() <= 0) throw DomainError("self-intersection must be positive");
  if (gamma.sign() <= 0 || gamma > Rational(1)) throw DomainError("gamma must lie in (0,1]");
  for (const auto& t : diff_terms) {
    if (t.s < 1 || t.r < 0) throw DomainError("Diff terms need s >= 1 and r >= 0");
    if (Rational(t.r) * c > Rational(1)) throw DomainError("Diff terms need r c <= 1");
    const Rational s(t.s);
    const Rational coeff = Rational(1) - Rational(1) / s + Rational(t.r) * c / s;
    if (coeff.sign() < 0 || coeff > Rational(1)) throw DomainError("Diff coefficient outside [0,1]");
  }
}

bool adjunction_holds(const EqSLedger& ledger) {
  ledger.validate();
  return ledger.lhs() == ledger.rhs();
}

namespace {

void validate_terms_only(const EqSLedger& ledger) {
  if (ledger.pa < 0) throw DomainError("arithmetic genus must be nonnegative");
  if (ledger.gamma_sq.sign() <= 0) throw DomainError("self-intersection must be positive");
  for (const auto& t : ledger.diff_terms) {
    if (t.s < 1 || t.r < 0) throw DomainError("Diff terms need s >= 1 and r >= 0");
  }
}

// constant + slope * x = target
SolveResult solve_affine(const Rational& constant, const Rational& slope, const Rational& target) {
  if (slope.sign() == 0) {
    if (constant == target) return {SolveResult::Kind::IdenticallySatisfied, std::nullopt};
    return {SolveResult::Kind::None, std::nullopt};
  }
  return {SolveResult::Kind::Unique, (target - constant) / slope};
}

}  // namespace

SolveResult solve_for_c(const EqSLedger& ledger) {
  validate_terms_only(ledger);
  Rational constant(0);
  Rational slope(0);
  for (const auto& t : ledger.diff_terms) {
    const Rational s(t.s);
    constant += Rational(1) - Rational(1) / s;
    slope += Rational(t.r) / s;
  }
  return solve_affine(constant, slope, ledger.rhs());
}

SolveResult solve_for_gamma(const EqSLedger& ledger) {
  validate_terms_only(ledger);
  // lhs = 2 - 2 pa + gamma_sq - gamma * gamma_sq
  const Rational constant = Rational(2 - 2 * ledger.pa) + ledger.gamma_sq;
  return solve_affine(constant, -ledger.gamma_sq, ledger.lhs());
}

EqSReport eq_s_roundtrip(std::size_t count, std::uint64_t seed) {
  SeededRng rng(seed);
  EqSReport report;
  for (std::size_t i = 0; i < count; ++i) {
    EqSLedger ledger;
    ledger.pa = rng.uniform(0, 2);
    ledger.gamma_sq = Rational(rng.uniform(1, 20), rng.uniform(1, 6));
    const std::int64_t cq = rng.uniform(1, 30);
    ledger.c = Rational(rng.uniform(1, cq), cq);
    const bool all_r_zero = rng.uniform(0, 3) == 0;
    const std::int64_t r_cap = to_int64(ledger.c.reciprocal().floor());
    const std::int64_t terms = rng.uniform(1, 5);
    for (std::int64_t t = 0; t < terms; ++t) {
      ledger.diff_terms.push_back({rng.uniform(1, 12), all_r_zero ? 0 : rng.uniform(0, r_cap)});
    }
    ++report.instances_checked;
    bool ok = true;
    const SolveResult g = solve_for_gamma(ledger);
    if (g.kind != SolveResult::Kind::Unique) {
      ok = false;
    } else {
      EqSLedger solved = ledger;
      solved.gamma = *g.value;
      ok = solved.lhs() == solved.rhs();
      const SolveResult c = solve_for_c(solved);
      if (c.kind == SolveResult::Kind::Unique) {
        ++report.c_unique;
        ok = ok && *c.value == ledger.c;
      } else if (c.kind == SolveResult::Kind::IdenticallySatisfied) {
        ++report.c_identically_satisfied;
      } else {
        ok = false;
      }
      const bool no_r = std::all_of(ledger.diff_terms.begin(), ledger.diff_terms.end(),
                                    [](const DiffTerm& d) { return d.r == 0; });
      if (no_r) {
        ++report.all_r_zero;
        // gamma is then determined without reference to c
        EqSLedger other = ledger;
        other.c = ledger.c / Rational(2);
        const SolveResult g2 = solve_for_gamma(other);
        ok = ok && c.kind == SolveResult::Kind::IdenticallySatisfied &&
             g2.kind == SolveResult::Kind::Unique && *g2.value == *g.value;
      }
    }
    if (!ok) report.failures.push_back(ledger);
  }
  return report;
}

// ---------------------------------------------------------------------------

std::vector<std::string> LpVerdict::failures() const {
  std::vector<std::string> out;
  if (!coefficients_ok) out.emplace_back("(iii) coefficient form");
  if (!numerically_trivial) out.emplace_back("(ii) numerically trivial");
  if (!ample) out.emplace_back("(iv) ampleness");
  if (!k_positive) out.emplace_back("(iv) sum k > 0");
  return out;
}

LpVerdict lp_numeric_check(const Rational& c, const std::vector<LpTerm>& terms,
                           const Rational& anticanonical_degree) {
  require_unit_interval(c, "c");
  if (anticanonical_degree.sign() <= 0) throw DomainError("anticanonical degree must be positive");
  LpVerdict v;
  Rational total(0);
  Rational fixed_part(0);
  std::int64_t ksum = 0;
  for (const auto& t : terms) {
    if (t.degree.sign() <= 0) throw DomainError("curve degrees must be positive");
    if (t.m < 1 || t.k < 0) throw DomainError("terms need m >= 1 and k >= 0");
    if (Rational(t.k) * c >= Rational(1)) v.coefficients_ok = false;
    const CoeffTerm term{t.m, t.k};
    total += theta_value(term, c) * t.degree;
    fixed_part += (Rational(1) - Rational(1, t.m)) * t.degree;
    ksum += t.k;
  }
  v.numerically_trivial = total == anticanonical_degree;
  v.ample = anticanonical_degree - fixed_part > Rational(0);
  v.k_positive = ksum >= 1;
  return v;
}

const char* to_string(P1Outcome o) {
  switch (o) {
    case P1Outcome::HypothesisViolated: return "hypothesis-violated";
    case P1Outcome::ConclusionHolds: return "conclusion-holds";
    case P1Outcome::Counterexample: return "counterexample";
  }
  return "?";
}

const char* to_string(Lct2Outcome o) {
  switch (o) {
    case Lct2Outcome::NotKlt: return "not-klt";
    case Lct2Outcome::LcHolds: return "lc-holds";
    case Lct2Outcome::Violation: return "violation";
  }
  return "?";
}

const char* to_string(SolveResult::Kind k) {
  switch (k) {
    case SolveResult::Kind::Unique: return "unique";
    case SolveResult::Kind::None: return "none";
    case SolveResult::Kind::IdenticallySatisfied: return "identically-satisfied";
  }
  return "?";
}

}  // namespace lctkit
