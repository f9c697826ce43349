// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
//
//   lctkit_acceptance [--data-dir DIR] [--workers N] [--seed S]

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "lctkit/json_io.hpp"
#include "lctkit/resolution_graph.hpp"
#include "lctkit/thresholds.hpp"
#include "lctkit/toric.hpp"
#include "lctkit/verifiers.hpp"
#include "oracles.hpp"

using namespace lctkit;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

std::vector<Rational> reduced_in(const Rational& lo_exclusive, const Rational& hi, long maxden) {
  std::vector<Rational> out;
  for (long q = 1; q <= maxden; ++q) {
    for (long p = 1; p <= q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const Rational c(p, q);
      if (c > lo_exclusive && c <= hi) out.push_back(c);
    }
  }
  return out;
}

Outcome upper_half_equivalence() {
  std::size_t checked = 0;
  std::size_t members = 0;
  for (const auto& c : reduced_in(Rational(1, 2), Rational(1), 100)) {
    ++checked;
    const bool member = is_member(t2_member(c));
    const bool form = t2_form_check(c).has_value();
    if (member != form) return {false, "mismatch at c = " + c.str()};
    members += member ? 1 : 0;
  }
  return {true, std::to_string(checked) + " values, " + std::to_string(members) + " members"};
}

oracle::TermList to_list(const WitnessT2& w) {
  oracle::TermList out;
  for (const auto& t : w.terms) out.emplace_back(t.m, t.k);
  return out;
}

Outcome oracle_equivalence() {
  constexpr std::int64_t m_cap = 12, k_cap = 12, r_cap = 6;
  std::size_t checked = 0, witnesses = 0, beyond_caps = 0;
  for (const auto& c : reduced_in(Rational(0), Rational(1), 24)) {
    ++checked;
    std::set<oracle::TermList> in_caps;
    std::size_t total = 0;
    bool all_verify = true;
    for_each_t2_witness(c, [&](const WitnessT2& w) {
      ++total;
      all_verify = all_verify && w.verify();
      bool inside = static_cast<std::int64_t>(w.terms.size()) <= r_cap;
      for (const auto& t : w.terms) inside = inside && t.m <= m_cap && t.k <= k_cap;
      if (inside) in_caps.insert(to_list(w));
    });
    witnesses += total;
    if (!all_verify) return {false, "a witness fails to re-verify at c = " + c.str()};
    const auto brute = oracle::brute_force_witnesses(to_int64(c.num()), to_int64(c.den()), m_cap, k_cap, r_cap);
    if (brute != in_caps) return {false, "solution sets differ within the caps at c = " + c.str()};
    const auto minimal = t2_witness_search(c);
    if (minimal.has_value() != (total > 0)) return {false, "existence differs at c = " + c.str()};
    if (!brute.empty() && !minimal) return {false, "oracle finds a witness the search misses at c = " + c.str()};
    if (minimal && !brute.empty()) {
      // The returned witness can never exceed an in-cap solution, and when it
      // lies inside the caps it must be the oracle's minimum.
      const auto overall = to_list(*minimal);
      if (overall > *brute.begin()) return {false, "search minimum exceeds the oracle's at c = " + c.str()};
      if (in_caps.contains(overall) && overall != *brute.begin()) {
        return {false, "minimal in-cap witness differs at c = " + c.str()};
      }
    }
    if (minimal && brute.empty()) ++beyond_caps;
  }
  std::ostringstream os;
  os << checked << " values, " << witnesses << " witnesses re-verified, " << beyond_caps
     << " members with witnesses only beyond the oracle caps";
  return {true, os.str()};
}

Outcome accumulation_at_half(unsigned workers) {
  const auto values = t2_enumerate({Rational::parse("0.45"), Rational::parse("0.6")}, 400, workers);
  const auto rec = accumulation_report(values, {Rational(1, 2)}, Rational(1, 50));
  std::size_t right = 0;
  for (const auto& c : values) {
    if (c > Rational(1, 2)) {
      if (!t2_form_check(c)) return {false, c.str() + " is a member not of the form 1/2 + 1/n"};
      if (c < Rational(1, 2) + Rational(1, 50)) ++right;
    }
  }
  const bool ok = right >= 20;
  return {ok, std::to_string(right) + " members in (1/2, 1/2 + 1/50); " + std::to_string(rec[0].count) +
                  " within 1/50 on both sides"};
}

Outcome p1_scan(unsigned workers) {
  std::uint64_t instances = 0;
  for (std::int64_t N = 6; N <= 10; ++N) {
    const auto r = lemma_p1_scan(N, 60, 60, workers);
    instances += r.instances_checked;
    if (!r.counterexamples.empty()) return {false, "counterexample for N = " + std::to_string(N)};
  }
  return {true, std::to_string(instances) + " boundaries satisfying the hypotheses"};
}

Outcome pair_discr(std::uint64_t seed) {
  const auto r = pair_discr_sample(1000, seed);
  return {r.counterexamples.empty() && r.instances_checked == 1000,
          std::to_string(r.instances_checked) + " instances, " + std::to_string(r.hypothesis_held) +
              " with the hypothesis, " + std::to_string(r.counterexamples.size()) + " violations"};
}

Outcome toric_vs_crepant(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t vectors = 0;
  for (int i = 0; i < 50; ++i) {
    const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 40);
    std::vector<std::int64_t> qs;
    for (std::int64_t q = 1; q <= m; ++q) {
      if (std::gcd(m, q) == 1 && (q < m || m == 1)) qs.push_back(q);
    }
    const CyclicQuotientGerm germ(m, qs[rng() % qs.size()]);
    const long d1 = 1 + static_cast<long>(rng() % 30);
    const long d2 = 1 + static_cast<long>(rng() % 30);
    const AxesBoundary lambda{Rational(static_cast<long>(rng() % (d1 + 1)), d1),
                              Rational(static_cast<long>(rng() % (d2 + 1)), d2)};
    const auto basis = hilbert_basis(germ);
    const auto b = crepant_pullback(chain_graph(germ, lambda), Rational(1));
    if (b.size() + 2 != basis.size()) return {false, "chain length differs from the basis"};
    for (std::size_t j = 0; j < b.size(); ++j) {
      ++vectors;
      if (toric_discrepancy(germ, lambda, basis[j + 1]) != -b[j].second) {
        return {false, "disagreement for germ (" + std::to_string(m) + "," + std::to_string(germ.q()) + ")"};
      }
    }
    // Axis rays: discrepancy minus the coefficient.
    if (toric_discrepancy(germ, lambda, basis.back()) != -lambda.lambda1 ||
        toric_discrepancy(germ, lambda, basis.front()) != -lambda.lambda2) {
      return {false, "axis ray discrepancy is not minus the coefficient"};
    }
  }
  return {true, "50 germs, " + std::to_string(vectors) + " interior basis vectors"};
}

Outcome lct_family(const std::string& data_dir) {
  std::ostringstream os;
  for (std::int64_t n = 3; n <= 12; ++n) {
    const auto g = io::load_graph(data_dir + "/x2_yn_" + std::to_string(n) + ".json");
    const auto r = lct_from_graph(g);
    const Rational expected = Rational(1, 2) + Rational(1, n);
    if (r.value != expected) return {false, "n = " + std::to_string(n) + " gives " + r.value.str()};
    if (!is_member(t2_member(r.value))) return {false, r.value.str() + " is not in T2"};
    os << (n > 3 ? " " : "") << r.value.str();
  }
  return {true, os.str()};
}

Outcome eq_s(std::uint64_t seed) {
  const auto r = eq_s_roundtrip(500, seed);
  return {r.failures.empty() && r.instances_checked == 500,
          std::to_string(r.instances_checked) + " ledgers, " + std::to_string(r.all_r_zero) +
              " with every r = 0, " + std::to_string(r.failures.size()) + " failures"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lctkit acceptance criteria"};
  std::string data_dir = LCTKIT_DATA_DIR;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t seed = 7;
  app.add_option("--data-dir", data_dir, "Directory holding the bundled graphs");
  app.add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for the sampled criteria");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "membership on (1/2,1] equals the 1/2 + 1/n form, denominators <= 100", 60, upper_half_equivalence},
      {2, "witness validity and oracle equivalence, denominators <= 24", 300, oracle_equivalence},
      {3, "accumulation at 1/2 in [0.45,0.6], maxden 400", 120, [&] { return accumulation_at_half(workers); }},
      {4, "P1 lemma scan, N = 6..10, max_m = max_den = 60", 60, [&] { return p1_scan(workers); }},
      {5, "pair discrepancy implication, 1000 samples", 60, [&] { return pair_discr(seed); }},
      {6, "toric vs crepant discrepancies, 50 germs", 60, [&] { return toric_vs_crepant(seed); }},
      {7, "lct of x^2 + y^n, n = 3..12", 10, [&] { return lct_family(data_dir); }},
      {8, "eq-s ledger round trip, 500 ledgers", 10, [&] { return eq_s(seed); }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      out.pass = false;
      out.detail += "; over the time budget";
    }
    all = all && out.pass;
    std::printf("%s [%d] %s: %s (%.2fs of %.0fs)\n", out.pass ? "PASS" : "FAIL", c.id, c.name,
                out.detail.c_str(), secs, c.budget_seconds);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
