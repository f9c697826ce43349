#include "lctkit/thresholds.hpp"

#include <algorithm>
#include <thread>

namespace lctkit {

void validate_term(const CoeffTerm& term) {
  if (term.m < 1) throw DomainError("coefficient term needs m >= 1");
  if (term.k < 0) throw DomainError("coefficient term needs k >= 0");
  if (term.m == 1 && term.k == 0) throw DomainError("(m, k) = (1, 0) is the zero term");
}

Rational theta_value(const CoeffTerm& term, const Rational& c) {
  const Rational m(term.m);
  return Rational(1) - Rational(1) / m + Rational(term.k) * c / m;
}

std::vector<Rational> WitnessT2::theta_values() const {
  std::vector<Rational> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(theta_value(t, c));
  return out;
}

bool WitnessT2::verify() const {
  if (c.sign() <= 0 || c > Rational(1)) return false;
  if (!std::is_sorted(terms.begin(), terms.end())) return false;
  Rational sum(0);
  std::int64_t ksum = 0;
  for (const auto& t : terms) {
    if (t.m < 1 || t.k < 0 || (t.m == 1 && t.k == 0)) return false;
    if (Rational(t.k) * c >= Rational(1)) return false;
    const Rational th = theta_value(t, c);
    if (th.sign() <= 0 || th >= Rational(1)) return false;
    sum += th;
    ksum += t.k;
  }
  return ksum >= 1 && sum == Rational(2);
}

bool witness_less(const WitnessT2& a, const WitnessT2& b) {
  return std::lexicographical_compare(a.terms.begin(), a.terms.end(), b.terms.begin(),
                                      b.terms.end());
}

void require_threshold_domain(const Rational& c) {
  if (c.sign() <= 0 || c > Rational(1)) {
    throw DomainError("threshold c = " + c.str() + " lies outside (0,1]");
  }
}

namespace {

/*
 * Depth-first search over deficiencies u = 1 - theta = (1 - k c)/m.
 * A multiset of r terms solves the equation iff its deficiencies sum to r - 2.
 * Slots are filled in order of nonincreasing u (ties broken by ascending
 * (m, k)), so each multiset is produced once. With s left to distribute over
 * `rem` slots the next u is at least s/rem, and u <= 1/m bounds m by rem/s.
 */
class WitnessSearch {
public:
  WitnessSearch(const Rational& c, const std::function<void(const WitnessT2&)>& visit)
      : c_(c), visit_(visit) {
    // Largest k with k c < 1.
    bounds_.k_max = to_int64(c.reciprocal().ceil()) - 1;
    const Rational least_theta = std::min(c, Rational(1, 2));
    bounds_.r_max = to_int64((Rational(2) / least_theta).floor());
    bounds_.m_bounds.assign(static_cast<std::size_t>(std::max<std::int64_t>(bounds_.r_max, 0)), 0);
    one_minus_kc_.reserve(static_cast<std::size_t>(bounds_.k_max + 1));
    for (std::int64_t k = 0; k <= bounds_.k_max; ++k) {
      one_minus_kc_.push_back(Rational(1) - Rational(k) * c);
    }
  }

  SearchBounds run() {
    for (std::int64_t r = bounds_.r_min; r <= bounds_.r_max; ++r) {
      slots_.clear();
      descend(Rational(r - 2), r, Rational(1), CoeffTerm{0, 0});
    }
    return bounds_;
  }

private:
  void note_bound(std::int64_t m_bound) {
    auto& slot = bounds_.m_bounds[slots_.size()];
    slot = std::max(slot, m_bound);
  }

  // Tie rule: equal deficiencies must come with nondecreasing (m, k).
  static bool order_ok(const Rational& u, const CoeffTerm& t, const Rational& prev_u,
                       const CoeffTerm& prev) {
    if (u > prev_u) return false;
    return u < prev_u || !(t < prev);
  }

  void descend(const Rational& s, std::int64_t rem, const Rational& prev_u, const CoeffTerm& prev) {
    ++bounds_.nodes;
    if (rem == 1) {
      close_last_slot(s, prev_u, prev);
      return;
    }
    const Rational lo = s / Rational(rem);
    const std::int64_t m_bound = to_int64((Rational(rem) / s).floor());
    note_bound(m_bound);
    for (std::int64_t m = 1; m <= m_bound; ++m) {
      const Rational mr(m);
      for (std::int64_t k = 0; k <= bounds_.k_max; ++k) {
        if (m == 1 && k == 0) continue;
        const Rational u = one_minus_kc_[static_cast<std::size_t>(k)] / mr;
        if (u < lo) break;  // u decreases in k
        const CoeffTerm t{m, k};
        if (u >= s || !order_ok(u, t, prev_u, prev)) continue;
        slots_.push_back(t);
        descend(s - u, rem - 1, u, t);
        slots_.pop_back();
      }
    }
  }

  // The last deficiency must equal s exactly: m = (1 - k c)/s.
  void close_last_slot(const Rational& s, const Rational& prev_u, const CoeffTerm& prev) {
    if (s >= Rational(1) || s.sign() <= 0) return;
    note_bound(to_int64(s.reciprocal().floor()));
    for (std::int64_t k = 0; k <= bounds_.k_max; ++k) {
      const Rational m = one_minus_kc_[static_cast<std::size_t>(k)] / s;
      if (!m.is_integer()) continue;
      const CoeffTerm t{to_int64(m.num()), k};
      if ((t.m == 1 && t.k == 0) || !order_ok(s, t, prev_u, prev)) continue;
      slots_.push_back(t);
      emit();
      slots_.pop_back();
    }
  }

  void emit() {
    std::int64_t ksum = 0;
    for (const auto& t : slots_) ksum += t.k;
    if (ksum < 1) return;
    WitnessT2 w{c_, slots_};
    std::sort(w.terms.begin(), w.terms.end());
    visit_(w);
  }

  Rational c_;
  const std::function<void(const WitnessT2&)>& visit_;
  SearchBounds bounds_;
  std::vector<Rational> one_minus_kc_;
  std::vector<CoeffTerm> slots_;
};

}  // namespace

SearchBounds for_each_t2_witness(const Rational& c,
                                 const std::function<void(const WitnessT2&)>& visit) {
  require_threshold_domain(c);
  return WitnessSearch(c, visit).run();
}

std::vector<WitnessT2> t2_all_witnesses(const Rational& c) {
  std::vector<WitnessT2> out;
  for_each_t2_witness(c, [&](const WitnessT2& w) { out.push_back(w); });
  std::sort(out.begin(), out.end(), witness_less);
  return out;
}

std::optional<WitnessT2> t2_witness_search(const Rational& c, SearchBounds* bounds) {
  std::optional<WitnessT2> best;
  SearchBounds b = for_each_t2_witness(c, [&](const WitnessT2& w) {
    if (!best || witness_less(w, *best)) best = w;
  });
  if (bounds != nullptr) *bounds = std::move(b);
  return best;
}

MembershipVerdict t2_member(const Rational& c) {
  require_threshold_domain(c);
  if (auto n = t1_member(c)) return InT1{*n};
  SearchBounds bounds;
  if (auto w = t2_witness_search(c, &bounds)) return InT2{std::move(*w)};
  return NotInT2{std::move(bounds)};
}

std::optional<std::int64_t> t2_form_check(const Rational& c) {
  if (c <= Rational(1, 2) || c > Rational(1)) {
    throw DomainError("form check needs 1/2 < c <= 1, got " + c.str());
  }
  const Rational gap = c - Rational(1, 2);
  if (gap.num() != 1 || gap.den() < 2) return std::nullopt;
  return to_int64(gap.den());
}

bool Interval::contains(const Rational& x) const {
  const bool above = closed_lo ? x >= lo : x > lo;
  const bool below = closed_hi ? x <= hi : x < hi;
  return above && below;
}

namespace {

void validate_range(const Interval& range, std::int64_t maxden) {
  if (maxden < 2) throw UsageError("max denominator must be at least 2");
  if (range.lo > range.hi) throw UsageError("empty interval: lo > hi");
  if (range.lo == range.hi && !(range.closed_lo && range.closed_hi)) {
    throw UsageError("empty interval: degenerate with an open end");
  }
  if (range.lo.sign() <= 0 || range.hi > Rational(1)) {
    throw DomainError("enumeration interval must lie in (0,1]");
  }
}

}  // namespace

std::vector<Rational> stern_brocot_range(const Interval& range, std::int64_t maxden) {
  validate_range(range, maxden);
  // Each frame is a subtree: all fractions strictly between a/b and c/d,
  // rooted at their mediant.
  struct Frame {
    std::int64_t a, b, c, d;
  };
  const auto usable = [&](const Frame& f) {
    return f.b + f.d <= maxden && Rational(f.a, f.b) < range.hi && Rational(f.c, f.d) > range.lo;
  };
  std::vector<Rational> out;
  std::vector<Frame> stack;
  std::optional<Frame> cur = Frame{0, 1, 1, 1};
  while (cur || !stack.empty()) {
    while (cur && usable(*cur)) {
      stack.push_back(*cur);
      cur = Frame{cur->a, cur->b, cur->a + cur->c, cur->b + cur->d};
    }
    if (stack.empty()) break;
    const Frame f = stack.back();
    stack.pop_back();
    Rational mediant(f.a + f.c, f.b + f.d);
    if (range.contains(mediant)) out.push_back(std::move(mediant));
    cur = Frame{f.a + f.c, f.b + f.d, f.c, f.d};
  }
  if (range.contains(Rational(1))) out.emplace_back(1);
  return out;
}

std::vector<EnumeratedPoint> t2_enumerate_verdicts(const Interval& range, std::int64_t maxden,
                                                   unsigned workers) {
  const std::vector<Rational> candidates = stern_brocot_range(range, maxden);
  std::vector<std::optional<MembershipVerdict>> verdicts(candidates.size());
  const std::size_t n = candidates.size();
  const std::size_t w = std::max<std::size_t>(1, std::min<std::size_t>(workers, n));
  {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < w; ++i) {
      pool.emplace_back([&, i] {
        // Strided split: costly points cluster by denominator.
        for (std::size_t j = i; j < n; j += w) verdicts[j] = t2_member(candidates[j]);
      });
    }
  }
  std::vector<EnumeratedPoint> out;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_member(*verdicts[j])) out.push_back({candidates[j], std::move(*verdicts[j])});
  }
  return out;
}

std::vector<Rational> t2_enumerate(const Interval& range, std::int64_t maxden, unsigned workers) {
  std::vector<Rational> out;
  for (auto& p : t2_enumerate_verdicts(range, maxden, workers)) out.push_back(std::move(p.c));
  return out;
}

std::vector<AccumulationRecord> accumulation_report(const std::vector<Rational>& values,
                                                    const std::vector<Rational>& targets,
                                                    const Rational& delta) {
  if (!std::is_sorted(values.begin(), values.end())) {
    throw UsageError("accumulation report needs ascending values");
  }
  if (delta.sign() <= 0) throw UsageError("delta must be positive");
  std::vector<AccumulationRecord> out;
  for (const auto& t : targets) {
    AccumulationRecord rec{t, 0, std::nullopt};
    const auto first = std::upper_bound(values.begin(), values.end(), t - delta);
    const auto last = std::lower_bound(values.begin(), values.end(), t + delta);
    const auto [eq_lo, eq_hi] = std::equal_range(values.begin(), values.end(), t);
    if (first < last) {
      rec.count = static_cast<std::size_t>(last - first) -
                  static_cast<std::size_t>(eq_hi - eq_lo);
    }
    // Nearest value other than t: the neighbours of the equal range.
    std::optional<Rational> below;
    std::optional<Rational> above;
    if (eq_lo != values.begin()) below = *(eq_lo - 1);
    if (eq_hi != values.end()) above = *eq_hi;
    if (below && above) {
      rec.nearest = (t - *below <= *above - t) ? below : above;
    } else {
      rec.nearest = below ? below : above;
    }
    out.push_back(std::move(rec));
  }
  return out;
}

FormDiscrepancy upper_half_form_discrepancy(const std::vector<Rational>& members) {
  FormDiscrepancy d;
  for (const auto& c : members) {
    if (c == Rational(1, 2)) {
      d.t1_outside_both.push_back(c);
    } else if (c > Rational(1, 2) && c <= Rational(1)) {
      if (auto n = t2_form_check(c); n && *n == 2) d.only_in_n_ge_2.push_back(c);
    }
  }
  return d;
}

}  // namespace lctkit
