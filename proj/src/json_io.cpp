#include "lctkit/json_io.hpp"

#include <fstream>
#include <sstream>

namespace lctkit::io {

const char* verdict_name(const MembershipVerdict& verdict) {
  if (std::holds_alternative<InT1>(verdict)) return "in_t1";
  if (std::holds_alternative<InT2>(verdict)) return "in_t2";
  return "not_in_t2";
}

json witness_terms_to_json(const std::vector<CoeffTerm>& terms) {
  json arr = json::array();
  for (const auto& t : terms) arr.push_back({{"m", t.m}, {"k", t.k}});
  return arr;
}

std::string witness_terms_text(const std::vector<CoeffTerm>& terms) {
  std::ostringstream os;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i != 0) os << ' ';
    os << '(' << terms[i].m << ',' << terms[i].k << ')';
  }
  return os.str();
}

json verdict_to_json(const Rational& c, const MembershipVerdict& verdict) {
  json j{{"c", c.str()}, {"verdict", verdict_name(verdict)}};
  if (const auto* t1 = std::get_if<InT1>(&verdict)) {
    j["n"] = t1->n.is_infinite() ? json("inf") : json(to_int64(t1->n.value()));
  } else if (const auto* t2 = std::get_if<InT2>(&verdict)) {
    j["witness"] = witness_terms_to_json(t2->witness.terms);
    json thetas = json::array();
    for (const auto& th : t2->witness.theta_values()) thetas.push_back(th.str());
    j["theta"] = thetas;
  } else {
    const auto& b = std::get<NotInT2>(verdict).bounds;
    j["bounds"] = {{"r_min", b.r_min},     {"r_max", b.r_max}, {"k_max", b.k_max},
                   {"m_bounds", b.m_bounds}, {"nodes", b.nodes}};
  }
  return j;
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw StructuralError("expected a rational (\"p/q\" or integer), got " + j.dump());
}

namespace {

std::int64_t int_field(const json& obj, const char* key, std::optional<std::int64_t> fallback = {}) {
  if (!obj.contains(key)) {
    if (fallback) return *fallback;
    throw StructuralError(std::string("missing field '") + key + "'");
  }
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw StructuralError(std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

}  // namespace

ResolutionGraph graph_from_json(const json& j) {
  if (!j.is_object()) throw StructuralError("resolution graph must be a JSON object");
  std::vector<Curve> curves;
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  std::vector<BoundaryEnd> ends;
  if (j.contains("curves")) {
    if (!j.at("curves").is_array()) throw StructuralError("'curves' must be an array");
    for (const auto& c : j.at("curves")) {
      if (!c.is_object()) throw StructuralError("curve entries must be objects");
      curves.push_back({int_field(c, "id"), int_field(c, "self_int"), int_field(c, "f_mult", 0)});
    }
  }
  if (j.contains("edges")) {
    if (!j.at("edges").is_array()) throw StructuralError("'edges' must be an array");
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
        throw StructuralError("edges must be [i, j] integer pairs");
      }
      edges.emplace_back(e[0].get<std::int64_t>(), e[1].get<std::int64_t>());
    }
  }
  if (j.contains("ends")) {
    if (!j.at("ends").is_array()) throw StructuralError("'ends' must be an array");
    for (const auto& e : j.at("ends")) {
      if (!e.is_object() || !e.contains("mult")) throw StructuralError("ends need 'curve' and 'mult'");
      Rational mult;
      try {
        mult = rational_from_json(e.at("mult"));
      } catch (const UsageError& err) {
        throw StructuralError(err.what());
      }
      ends.push_back({int_field(e, "curve"), std::move(mult)});
    }
  }
  return {std::move(curves), std::move(edges), std::move(ends)};
}

json graph_to_json(const ResolutionGraph& graph) {
  json curves = json::array();
  for (const auto& c : graph.curves()) {
    curves.push_back({{"id", c.id}, {"self_int", c.self_int}, {"f_mult", c.f_mult}});
  }
  json edges = json::array();
  for (const auto& [a, b] : graph.edges()) edges.push_back({a, b});
  json ends = json::array();
  for (const auto& e : graph.ends()) ends.push_back({{"curve", e.curve}, {"mult", e.mult.str()}});
  return {{"curves", curves}, {"edges", edges}, {"ends", ends}};
}

ResolutionGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open graph file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw StructuralError("malformed graph JSON in '" + path + "': " + e.what());
  }
  return graph_from_json(j);
}

json lattice_vector_to_json(const LatticeVector& v) { return json::array({v.v1.str(), v.v2.str()}); }

json pair_instance_to_json(const PairDiscrInstance& inst) {
  return {{"m", inst.germ.m()},
          {"q", inst.germ.q()},
          {"lambda1", inst.boundary.lambda1.str()},
          {"lambda2", inst.boundary.lambda2.str()},
          {"N", inst.N}};
}

json ledger_to_json(const EqSLedger& ledger) {
  json terms = json::array();
  for (const auto& t : ledger.diff_terms) terms.push_back({{"s", t.s}, {"r", t.r}});
  return {{"pa", ledger.pa},
          {"gamma_sq", ledger.gamma_sq.str()},
          {"gamma", ledger.gamma.str()},
          {"c", ledger.c.str()},
          {"terms", terms}};
}

}  // namespace lctkit::io
