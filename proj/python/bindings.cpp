#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "lctkit/json_io.hpp"
#include "lctkit/resolution_graph.hpp"
#include "lctkit/thresholds.hpp"
#include "lctkit/toric.hpp"
#include "lctkit/verifiers.hpp"

namespace py = pybind11;
using lctkit::Rational;

// Rational <-> fractions.Fraction. Python ints are accepted on input; big
// values cross the boundary as decimal strings.
namespace pybind11::detail {

template <>
struct type_caster<Rational> {
  PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (PyBool_Check(src.ptr())) return false;
    if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator")) return false;
    if (!PyLong_Check(py::getattr(src, "numerator").ptr())) return false;  // rejects floats
    const std::string num = py::str(py::getattr(src, "numerator"));
    const std::string den = py::str(py::getattr(src, "denominator"));
    value = Rational::parse(num + "/" + den);
    return true;
  }

  static handle cast(const Rational& r, return_value_policy, handle) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    const py::int_ num(py::reinterpret_steal<py::object>(PyLong_FromString(r.num().get_str().c_str(), nullptr, 10)));
    const py::int_ den(py::reinterpret_steal<py::object>(PyLong_FromString(r.den().get_str().c_str(), nullptr, 10)));
    return fraction(num, den).release();
  }
};

}  // namespace pybind11::detail

namespace {

using Terms = std::vector<std::pair<std::int64_t, std::int64_t>>;

Terms terms_of(const lctkit::WitnessT2& w) {
  Terms out;
  for (const auto& t : w.terms) out.emplace_back(t.m, t.k);
  return out;
}

py::dict verdict_dict(const lctkit::MembershipVerdict& v) {
  py::dict d;
  d["verdict"] = lctkit::io::verdict_name(v);
  if (const auto* t1 = std::get_if<lctkit::InT1>(&v)) {
    d["n"] = t1->n.is_infinite() ? py::object(py::float_(INFINITY))
                                 : py::object(py::int_(lctkit::to_int64(t1->n.value())));
  } else if (const auto* t2 = std::get_if<lctkit::InT2>(&v)) {
    d["witness"] = terms_of(t2->witness);
  } else {
    const auto& b = std::get<lctkit::NotInT2>(v).bounds;
    py::dict bounds;
    bounds["r_min"] = b.r_min;
    bounds["r_max"] = b.r_max;
    bounds["k_max"] = b.k_max;
    bounds["m_bounds"] = b.m_bounds;
    bounds["nodes"] = b.nodes;
    d["bounds"] = bounds;
  }
  return d;
}

lctkit::ResolutionGraph graph_of(const std::string& text) {
  const auto j = lctkit::io::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw lctkit::StructuralError("malformed graph JSON");
  return lctkit::io::graph_from_json(j);
}

lctkit::EqSLedger ledger_of(std::int64_t pa, const Rational& gamma_sq, const Rational& gamma, const Terms& terms,
                            const Rational& c) {
  lctkit::EqSLedger l;
  l.pa = pa;
  l.gamma_sq = gamma_sq;
  l.gamma = gamma;
  l.c = c;
  for (const auto& [s, r] : terms) l.diff_terms.push_back({s, r});
  return l;
}

py::object solve_result(const lctkit::SolveResult& r) {
  switch (r.kind) {
    case lctkit::SolveResult::Kind::Unique: return py::cast(*r.value);
    case lctkit::SolveResult::Kind::IdenticallySatisfied: return py::str("identically-satisfied");
    case lctkit::SolveResult::Kind::None: break;
  }
  return py::none();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic for two-dimensional log canonical thresholds";

  py::register_exception<lctkit::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<lctkit::UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<lctkit::StructuralError>(m, "StructuralError", PyExc_RuntimeError);

  // thresholds
  m.def("theta_value", [](std::int64_t mm, std::int64_t k, const Rational& c) {
    return lctkit::theta_value({mm, k}, c);
  }, py::arg("m"), py::arg("k"), py::arg("c"));
  m.def("t2_member", [](const Rational& c) { return verdict_dict(lctkit::t2_member(c)); }, py::arg("c"));
  m.def("t2_witness_search", [](const Rational& c) -> std::optional<Terms> {
    const auto w = lctkit::t2_witness_search(c);
    if (!w) return std::nullopt;
    return terms_of(*w);
  }, py::arg("c"));
  m.def("t2_all_witnesses", [](const Rational& c) {
    std::vector<Terms> out;
    for (const auto& w : lctkit::t2_all_witnesses(c)) out.push_back(terms_of(w));
    return out;
  }, py::arg("c"));
  m.def("t2_form_check", &lctkit::t2_form_check, py::arg("c"));
  m.def("t2_enumerate",
        [](const Rational& lo, const Rational& hi, std::int64_t max_den, bool closed_lo, bool closed_hi,
           unsigned workers) {
          py::gil_scoped_release release;
          return lctkit::t2_enumerate({lo, hi, closed_lo, closed_hi}, max_den, workers);
        },
        py::arg("lo"), py::arg("hi"), py::arg("max_den"), py::arg("closed_lo") = true,
        py::arg("closed_hi") = true, py::arg("workers") = 1);
  m.def("accumulation_report",
        [](const std::vector<Rational>& values, const std::vector<Rational>& targets, const Rational& delta) {
          py::list out;
          for (const auto& r : lctkit::accumulation_report(values, targets, delta)) {
            py::dict d;
            d["target"] = r.target;
            d["count"] = r.count;
            d["nearest"] = r.nearest ? py::cast(*r.nearest) : py::none();
            out.append(d);
          }
          return out;
        },
        py::arg("values"), py::arg("targets"), py::arg("delta"));

  // germs
  m.def("hj_expand", &lctkit::hj_expand, py::arg("m"), py::arg("q"));
  m.def("hilbert_basis", [](std::int64_t mm, std::int64_t q) {
    std::vector<std::pair<Rational, Rational>> out;
    for (const auto& v : lctkit::hilbert_basis({mm, q})) out.emplace_back(v.v1, v.v2);
    return out;
  }, py::arg("m"), py::arg("q"));
  m.def("toric_discrepancy",
        [](std::int64_t mm, std::int64_t q, const Rational& l1, const Rational& l2, const Rational& v1,
           const Rational& v2) { return lctkit::toric_discrepancy({mm, q}, {l1, l2}, {v1, v2}); },
        py::arg("m"), py::arg("q"), py::arg("lambda1"), py::arg("lambda2"), py::arg("v1"), py::arg("v2"));
  m.def("mld_axes",
        [](std::int64_t mm, std::int64_t q, const Rational& l1, const Rational& l2, bool codim1) {
          const auto r = lctkit::mld_axes({mm, q}, {l1, l2}, codim1);
          return std::make_pair(r.value, std::make_pair(r.argmin.v1, r.argmin.v2));
        },
        py::arg("m"), py::arg("q"), py::arg("lambda1") = Rational(0), py::arg("lambda2") = Rational(0),
        py::arg("include_codim1") = false);
  m.def("pair_discr_check",
        [](std::int64_t mm, std::int64_t q, const Rational& l1, const Rational& l2, std::int64_t N) {
          return std::string(lctkit::to_string(lctkit::pair_discr_check({mm, q}, {l1, l2}, N).outcome));
        },
        py::arg("m"), py::arg("q"), py::arg("lambda1"), py::arg("lambda2"), py::arg("N"));
  m.def("_crepant_pullback", [](const std::string& graph, const Rational& c) {
    return lctkit::crepant_pullback(graph_of(graph), c);
  });
  m.def("_lct_from_graph", [](const std::string& graph, const std::vector<std::int64_t>& mults) {
    const auto r = lctkit::lct_from_graph(graph_of(graph), mults);
    const char* kind = r.binding == lctkit::LctResult::Binding::Curve       ? "curve"
                       : r.binding == lctkit::LctResult::Binding::Component ? "component"
                                                                           : "none";
    py::dict d;
    d["lct"] = r.value;
    d["binding"] = kind;
    d["binding_id"] = r.binding_id;
    d["capped"] = r.capped;
    return d;
  });

  // verifiers
  m.def("lemma_p1_verify", [](std::int64_t N, const std::vector<Rational>& coeffs) {
    return std::string(lctkit::to_string(lctkit::lemma_p1_verify(N, {coeffs}).outcome));
  }, py::arg("N"), py::arg("coefficients"));
  m.def("lemma_p1_scan",
        [](std::int64_t N, std::int64_t max_m, std::int64_t max_den, unsigned workers) {
          py::gil_scoped_release release;
          return lctkit::lemma_p1_scan(N, max_m, max_den, workers).counterexamples;
        },
        py::arg("N"), py::arg("max_m"), py::arg("max_den"), py::arg("workers") = 1);
  m.def("xi_transform", &lctkit::xi_transform, py::arg("coefficients"), py::arg("N"));
  m.def("pair_discr_sample", [](std::size_t count, std::uint64_t seed, std::int64_t max_m) {
    const auto r = lctkit::pair_discr_sample(count, seed, max_m);
    return py::make_tuple(r.instances_checked, r.hypothesis_held, r.counterexamples.size());
  }, py::arg("count"), py::arg("seed"), py::arg("max_m") = 50);
  m.def("adjunction_holds",
        [](std::int64_t pa, const Rational& gsq, const Rational& g, const Terms& terms, const Rational& c) {
          return lctkit::adjunction_holds(ledger_of(pa, gsq, g, terms, c));
        },
        py::arg("pa"), py::arg("gamma_sq"), py::arg("gamma"), py::arg("terms"), py::arg("c"));
  m.def("solve_for_c",
        [](std::int64_t pa, const Rational& gsq, const Rational& g, const Terms& terms) {
          return solve_result(lctkit::solve_for_c(ledger_of(pa, gsq, g, terms, Rational(0))));
        },
        py::arg("pa"), py::arg("gamma_sq"), py::arg("gamma"), py::arg("terms"));
  m.def("solve_for_gamma",
        [](std::int64_t pa, const Rational& gsq, const Terms& terms, const Rational& c) {
          return solve_result(lctkit::solve_for_gamma(ledger_of(pa, gsq, Rational(1), terms, c)));
        },
        py::arg("pa"), py::arg("gamma_sq"), py::arg("terms"), py::arg("c"));
}
