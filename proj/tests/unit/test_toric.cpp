#include <doctest.h>

#include <numeric>
#include <random>

#include "lctkit/resolution_graph.hpp"
#include "lctkit/thresholds.hpp"
#include "lctkit/toric.hpp"
#include "oracles.hpp"

using namespace lctkit;

namespace {

const Rational zero(0);

AxesBoundary axes(const Rational& l1, const Rational& l2) { return {l1, l2}; }

}  // namespace

TEST_CASE("germ and boundary validation") {
  CHECK_NOTHROW(CyclicQuotientGerm(1, 1));
  CHECK_THROWS_AS(CyclicQuotientGerm(0, 1), DomainError);
  CHECK_THROWS_AS(CyclicQuotientGerm(4, 2), DomainError);
  CHECK_THROWS_AS(CyclicQuotientGerm(3, 4), DomainError);
  CHECK_THROWS_AS(axes(Rational(3, 2), zero).validate(), DomainError);
  CHECK_THROWS_AS(axes(zero, Rational(-1, 2)).validate(), DomainError);
}

TEST_CASE("hj_expand examples") {
  CHECK(hj_expand(2, 1) == std::vector<std::int64_t>{2});
  CHECK(hj_expand(5, 2) == std::vector<std::int64_t>{3, 2});
  CHECK(hj_expand(1, 1).empty());
  CHECK(hj_expand(3, 2) == std::vector<std::int64_t>{2, 2});
  CHECK(hj_expand(7, 3) == std::vector<std::int64_t>{3, 2, 2});
  CHECK_THROWS_AS(hj_expand(6, 4), DomainError);
  CHECK_THROWS_AS(hj_expand(5, 5), DomainError);
}

TEST_CASE("hj_expand round trip and agreement with the convex-hull basis, m <= 200") {
  for (std::int64_t m = 2; m <= 200; ++m) {
    for (std::int64_t q = 1; q < m; ++q) {
      if (std::gcd(m, q) != 1) continue;
      const auto a = hj_expand(m, q);
      for (auto ai : a) REQUIRE(ai >= 2);
      REQUIRE(oracle::evaluate_hj(a) == Rational(m, q));
      if (m <= 60) {
        const auto hull = oracle::brute_force_hilbert_basis(m, q);
        REQUIRE(oracle::chain_from_basis(hull) == a);
        const auto basis = hilbert_basis(CyclicQuotientGerm(m, q));
        REQUIRE(basis.size() == hull.size());
        for (std::size_t i = 0; i < basis.size(); ++i) {
          REQUIRE(basis[i].v1 == hull[i].x);
          REQUIRE(basis[i].v2 == hull[i].y);
        }
      }
    }
  }
}

TEST_CASE("hilbert basis of small germs") {
  const auto b = hilbert_basis(CyclicQuotientGerm(3, 1));
  REQUIRE(b.size() == 3);
  CHECK(b[1] == LatticeVector{Rational(1, 3), Rational(1, 3)});
  const auto smooth = hilbert_basis(CyclicQuotientGerm(1, 1));
  REQUIRE(smooth.size() == 2);
  CHECK(smooth.front() == LatticeVector{zero, Rational(1)});
  CHECK(smooth.back() == LatticeVector{Rational(1), zero});
}

TEST_CASE("lattice vector validation") {
  const CyclicQuotientGerm g(5, 2);
  CHECK(in_lattice(g, {Rational(1, 5), Rational(2, 5)}));
  CHECK_FALSE(in_lattice(g, {Rational(1, 5), Rational(1, 5)}));
  CHECK_NOTHROW(validate_lattice_vector(g, {Rational(1, 5), Rational(2, 5)}));
  CHECK_THROWS_AS(validate_lattice_vector(g, {Rational(2, 5), Rational(4, 5)}), DomainError);  // 2 u1
  CHECK_THROWS_AS(validate_lattice_vector(g, {zero, zero}), DomainError);
  CHECK_THROWS_AS(validate_lattice_vector(g, {Rational(-1), Rational(1)}), DomainError);
  CHECK_THROWS_AS(toric_discrepancy(g, axes(zero, zero), {Rational(1, 5), Rational(1, 5)}), DomainError);
}

TEST_CASE("toric_discrepancy examples") {
  CHECK(toric_discrepancy(CyclicQuotientGerm(1, 1), axes(zero, zero), {Rational(1), Rational(1)}) == Rational(1));
  CHECK(toric_discrepancy(CyclicQuotientGerm(3, 1), axes(zero, zero), {Rational(1, 3), Rational(1, 3)}) ==
        Rational(-1, 3));
  // The crepant solve on the [3]-chain gives the same number.
  const auto b = crepant_pullback(chain_graph(CyclicQuotientGerm(3, 1), axes(zero, zero)), Rational(1));
  REQUIRE(b.size() == 1);
  CHECK(-b[0].second == Rational(-1, 3));
}

TEST_CASE("axis rays have discrepancy minus their coefficient") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 40);
    std::int64_t q = 1 + static_cast<std::int64_t>(rng() % m);
    while (std::gcd(m, q) != 1) q = q % m + 1;
    const Rational l1(static_cast<long>(rng() % 13), 12);
    const Rational l2(static_cast<long>(rng() % 13), 12);
    const CyclicQuotientGerm g(m, q);
    CHECK(toric_discrepancy(g, axes(l1, l2), {Rational(1), zero}) == -l1);
    CHECK(toric_discrepancy(g, axes(l1, l2), {zero, Rational(1)}) == -l2);
  }
}

TEST_CASE("mld_axes examples") {
  const auto smooth = mld_axes(CyclicQuotientGerm(1, 1), axes(zero, zero), false);
  CHECK(smooth.value == Rational(1));
  CHECK(smooth.argmin == LatticeVector{Rational(1), Rational(1)});

  const auto a1 = mld_axes(CyclicQuotientGerm(2, 1), axes(zero, zero), false);
  CHECK(a1.value == zero);
  CHECK(a1.argmin == LatticeVector{Rational(1, 2), Rational(1, 2)});

  // 1/3(1,2) is the A2 point: crepant. The value -1/3 belongs to 1/3(1,1).
  CHECK(mld_axes(CyclicQuotientGerm(3, 2), axes(zero, zero), false).value == zero);
  const auto g31 = mld_axes(CyclicQuotientGerm(3, 1), axes(zero, zero), false);
  CHECK(g31.value == Rational(-1, 3));
  CHECK(g31.argmin == LatticeVector{Rational(1, 3), Rational(1, 3)});

  const auto with_axes = mld_axes(CyclicQuotientGerm(2, 1), axes(Rational(1, 2), Rational(1)), true);
  CHECK(with_axes.value == Rational(-1));
}

TEST_CASE("mld_axes agrees with the bounded-height brute force") {
  const std::vector<std::pair<Rational, Rational>> lambdas{
      {zero, zero}, {Rational(1, 2), Rational(1, 3)}, {Rational(5, 6), Rational(9, 10)}, {Rational(1), Rational(2, 3)}};
  for (std::int64_t m = 1; m <= 12; ++m) {
    for (std::int64_t q = 1; q <= m; ++q) {
      if (std::gcd(m, q) != 1 || (m > 1 && q == m)) continue;
      for (const auto& [l1, l2] : lambdas) {
        const auto r = mld_axes(CyclicQuotientGerm(m, q), axes(l1, l2), false);
        CHECK(r.value == oracle::brute_force_mld(m, q, l1, l2, 3));
      }
    }
  }
  CHECK(oracle::brute_force_mld(5, 2, zero, zero, 2) == Rational(-2, 5));
  CHECK(oracle::brute_force_mld(7, 3, zero, zero, 2) == Rational(-3, 7));
}

TEST_CASE("mld is monotone in the coefficients") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 400; ++i) {
    const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 30);
    std::int64_t q = 1 + static_cast<std::int64_t>(rng() % m);
    while (std::gcd(m, q) != 1) q = q % m + 1;
    const CyclicQuotientGerm g(m, q);
    const Rational l1(static_cast<long>(rng() % 20), 20);
    const Rational l2(static_cast<long>(rng() % 20), 20);
    const Rational bump(static_cast<long>(1 + rng() % 5), 100);
    for (bool codim1 : {false, true}) {
      const auto base = mld_axes(g, axes(l1, l2), codim1).value;
      CHECK(mld_axes(g, axes(l1 + bump, l2), codim1).value <= base);
      CHECK(mld_axes(g, axes(l1, l2 + bump), codim1).value <= base);
    }
  }
}

TEST_CASE("pair_discr_check") {
  const auto a1 = pair_discr_check(CyclicQuotientGerm(2, 1), axes(Rational(1), Rational(1)), 6);
  CHECK(a1.outcome == PairDiscrOutcome::HypothesisFails);
  CHECK(a1.discr == Rational(-1));
  CHECK(a1.argmin == LatticeVector{Rational(1, 2), Rational(1, 2)});

  // discr = 1 - 11/12 - 11/12 = -5/6 = -1 + 1/6: the hypothesis holds with equality.
  const auto node = pair_discr_check(CyclicQuotientGerm(1, 1), axes(Rational(11, 12), Rational(11, 12)), 6);
  CHECK(node.discr == Rational(-5, 6));
  CHECK(node.outcome == PairDiscrOutcome::ImplicationHolds);
  CHECK(node.lambda_sum == Rational(11, 6));
  CHECK(node.bound == Rational(11, 6));

  const auto strict = pair_discr_check(CyclicQuotientGerm(1, 1), axes(Rational(23, 24), Rational(11, 12)), 6);
  CHECK(strict.outcome == PairDiscrOutcome::HypothesisFails);

  CHECK_THROWS_AS(pair_discr_check(CyclicQuotientGerm(1, 1), axes(Rational(1), Rational(1)), 5), DomainError);
  CHECK_THROWS_AS(pair_discr_check(CyclicQuotientGerm(1, 1), axes(Rational(5, 6), Rational(1)), 6), DomainError);
  CHECK(std::string(to_string(PairDiscrOutcome::ImplicationHolds)) == "implication-holds");
}

TEST_CASE("diff_coefficient") {
  const Rational c(2, 7);
  CHECK(diff_coefficient(1, {{1, c}}) == c);
  CHECK(diff_coefficient(2, {{1, c}}) == (Rational(1) + c) / Rational(2));
  CHECK(diff_coefficient(3, {{1, Rational(1, 2)}}) == Rational(5, 6));
  CHECK(diff_coefficient(3, {{1, Rational(1, 2)}}) == theta_value({3, 1}, Rational(1, 2)));
  CHECK(diff_coefficient(4, {}) == Rational(3, 4));
  CHECK_THROWS_AS(diff_coefficient(0, {}), DomainError);
  CHECK_THROWS_AS(diff_coefficient(2, {{-1, c}}), DomainError);
  CHECK_THROWS_AS(diff_coefficient(2, {{1, Rational(3, 2)}}), DomainError);
}
