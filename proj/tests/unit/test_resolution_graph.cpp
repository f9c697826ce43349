#include <doctest.h>

#include <numeric>
#include <random>

#include "lctkit/resolution_graph.hpp"
#include "lctkit/thresholds.hpp"
#include "oracles.hpp"

using namespace lctkit;

namespace {

ResolutionGraph node_graph() {
  return ResolutionGraph({{1, -1, 2}}, {}, {{1, Rational(1)}, {1, Rational(1)}});
}

ResolutionGraph cusp_graph() {
  return ResolutionGraph({{1, -3, 2}, {2, -2, 3}, {3, -1, 6}}, {{1, 3}, {2, 3}}, {{3, Rational(1)}});
}

// Embedded resolution of x^2 + y^n written out by hand (see data/graphs/README.md).
ResolutionGraph x2_yn(std::int64_t n) {
  std::vector<Curve> curves;
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  std::vector<BoundaryEnd> ends;
  const std::int64_t k = n / 2;
  if (n % 2 == 0) {
    for (std::int64_t i = 1; i <= k; ++i) {
      curves.push_back({i, i == k ? -1 : -2, 2 * i});
      if (i > 1) edges.emplace_back(i - 1, i);
    }
    ends = {{k, Rational(1)}, {k, Rational(1)}};
  } else {
    for (std::int64_t i = 1; i <= k; ++i) {
      curves.push_back({i, i == k ? -3 : -2, 2 * i});
      if (i > 1) edges.emplace_back(i - 1, i);
    }
    curves.push_back({k + 1, -2, 2 * k + 1});
    curves.push_back({k + 2, -1, 4 * k + 2});
    edges.emplace_back(k, k + 2);
    edges.emplace_back(k + 1, k + 2);
    ends = {{k + 2, Rational(1)}};
  }
  return {curves, edges, ends};
}

}  // namespace

TEST_CASE("structural validation") {
  CHECK_THROWS_AS(ResolutionGraph({{1, -2, 0}, {1, -2, 0}}, {{1, 1}}, {}), StructuralError);
  CHECK_THROWS_AS(ResolutionGraph({{1, 0, 0}}, {}, {}), StructuralError);
  CHECK_THROWS_AS(ResolutionGraph({{1, -2, -1}}, {}, {}), StructuralError);
  CHECK_THROWS_AS(ResolutionGraph({{1, -2, 0}, {2, -2, 0}}, {{1, 3}}, {}), StructuralError);
  CHECK_THROWS_AS(ResolutionGraph({{1, -2, 0}, {2, -2, 0}}, {{1, 2}, {2, 1}}, {}), StructuralError);
  CHECK_THROWS_AS(ResolutionGraph({{1, -2, 0}, {2, -2, 0}}, {}, {}), StructuralError);  // disconnected
  // A cycle: three curves, three edges.
  CHECK_THROWS_AS(ResolutionGraph({{1, -3, 0}, {2, -3, 0}, {3, -3, 0}}, {{1, 2}, {2, 3}, {1, 3}}, {}),
                  StructuralError);
  CHECK_THROWS_AS(ResolutionGraph({{1, -1, 2}}, {}, {{2, Rational(1)}}), StructuralError);
  // f-multiplicities inconsistent with the strict transform: -2 + 1 != 0.
  CHECK_THROWS_AS(ResolutionGraph({{1, -1, 2}}, {}, {{1, Rational(1)}}), StructuralError);
}

TEST_CASE("non negative definite matrices are rejected during the solve") {
  // Two (-1)-curves meeting: det = 0.
  const ResolutionGraph g({{1, -1, 0}, {2, -1, 0}}, {{1, 2}}, {});
  CHECK_THROWS_AS(crepant_affine(g), StructuralError);
  const ResolutionGraph h({{1, -1, 0}, {2, -1, 0}, {3, -1, 0}}, {{1, 2}, {2, 3}}, {});
  CHECK_THROWS_AS(crepant_pullback(h, Rational(0)), StructuralError);
}

TEST_CASE("crepant_pullback examples") {
  const auto node = crepant_affine(node_graph());
  REQUIRE(node.size() == 1);
  CHECK(node[0].slope == Rational(2));
  CHECK(node[0].offset == Rational(-1));
  CHECK(crepant_pullback(node_graph(), Rational(1, 3))[0].second == Rational(-1, 3));

  // f-multiplicities alone determine F_Y when no ends are listed.
  const ResolutionGraph node_f({{1, -1, 2}}, {}, {});
  CHECK(crepant_affine(node_f)[0].slope == Rational(2));

  const auto a1 = crepant_pullback(chain_graph(CyclicQuotientGerm(2, 1), {Rational(0), Rational(0)}), Rational(1));
  REQUIRE(a1.size() == 1);
  CHECK(a1[0].second == Rational(0));

  CHECK(crepant_pullback(ResolutionGraph(), Rational(1, 2)).empty());

  const auto cusp = crepant_affine(cusp_graph());
  CHECK(cusp[0].at(Rational(1)) == Rational(1));  // b = 2c - 1
  CHECK(cusp[2].slope == Rational(6));
  CHECK(cusp[2].offset == Rational(-4));
}

TEST_CASE("elimination agrees with plain Gauss-Jordan") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t m = 2 + static_cast<std::int64_t>(rng() % 60);
    std::int64_t q = 1 + static_cast<std::int64_t>(rng() % (m - 1));
    while (std::gcd(m, q) != 1) q = q % (m - 1) + 1;
    const Rational l1(static_cast<long>(rng() % 11), 10);
    const Rational l2(static_cast<long>(rng() % 11), 10);
    const auto g = chain_graph(CyclicQuotientGerm(m, q), {l1, l2});
    const auto mat = g.intersection_matrix();
    const auto fy = g.strict_transform_degrees();
    const Rational c(static_cast<long>(rng() % 7), 6);
    std::vector<std::vector<Rational>> a(mat.size());
    std::vector<Rational> rhs(mat.size());
    for (std::size_t i = 0; i < mat.size(); ++i) {
      for (auto v : mat[i]) a[i].emplace_back(static_cast<long>(v));
      rhs[i] = Rational(2 + mat[i][i]) - c * fy[i];
    }
    const auto expected = oracle::gauss_solve(a, rhs);
    const auto got = crepant_pullback(g, c);
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].second == expected[i]);
  }
}

TEST_CASE("lct_from_graph examples") {
  const auto smooth = lct_from_graph(ResolutionGraph(), {1});
  CHECK(smooth.value == Rational(1));
  CHECK(smooth.binding == LctResult::Binding::Component);
  CHECK_FALSE(smooth.capped);

  const auto node = lct_from_graph(node_graph());
  CHECK(node.value == Rational(1));

  const auto cusp = lct_from_graph(cusp_graph());
  CHECK(cusp.value == Rational(5, 6));
  CHECK(cusp.binding == LctResult::Binding::Curve);
  CHECK(cusp.binding_id == 3);

  const auto empty = lct_from_graph(ResolutionGraph());
  CHECK(empty.value == Rational(1));
  CHECK(empty.capped);
  CHECK(empty.binding == LctResult::Binding::None);

  CHECK_THROWS_AS(lct_from_graph(ResolutionGraph(), {0}), DomainError);
}

TEST_CASE("x^2 + y^n family has lct 1/2 + 1/n") {
  for (std::int64_t n = 2; n <= 40; ++n) {
    const auto r = lct_from_graph(x2_yn(n));
    CHECK_MESSAGE(r.value == Rational(1, 2) + Rational(1, n), "n = " << n);
    if (n >= 3 && n <= 12) CHECK(is_member(t2_member(r.value)));
  }
}

TEST_CASE("toric discrepancies match the crepant solve on the resolution chain") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 40);
    std::int64_t q = 1 + static_cast<std::int64_t>(rng() % m);
    while (std::gcd(m, q) != 1) q = q % m + 1;
    if (m > 1 && q == m) q = 1;
    const CyclicQuotientGerm germ(m, q);
    const AxesBoundary lambda{Rational(static_cast<long>(rng() % 9), 8), Rational(static_cast<long>(rng() % 9), 8)};
    const auto basis = hilbert_basis(germ);
    const auto b = crepant_pullback(chain_graph(germ, lambda), Rational(1));
    REQUIRE(b.size() + 2 == basis.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
      CHECK(toric_discrepancy(germ, lambda, basis[i + 1]) == -b[i].second);
    }
  }
}
