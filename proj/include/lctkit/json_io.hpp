#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "lctkit/rational.hpp"
#include "lctkit/resolution_graph.hpp"
#include "lctkit/thresholds.hpp"
#include "lctkit/verifiers.hpp"

namespace lctkit::io {

using json = nlohmann::ordered_json;

/// {"c":"p/q","verdict":"in_t1"|"in_t2"|"not_in_t2","n":..,"witness":[..],"bounds":{..}}
json verdict_to_json(const Rational& c, const MembershipVerdict& verdict);
const char* verdict_name(const MembershipVerdict& verdict);

json witness_terms_to_json(const std::vector<CoeffTerm>& terms);
/// Compact "(m,k) (m,k) ..." form used in CSV and table cells.
std::string witness_terms_text(const std::vector<CoeffTerm>& terms);

/// Rationals are accepted as "p/q" strings or JSON integers.
Rational rational_from_json(const json& j);

/// Parses {"curves":[{"id","self_int","f_mult"}],"edges":[[i,j]],"ends":[{"curve","mult"}]}.
/// Throws StructuralError on any malformed field.
ResolutionGraph graph_from_json(const json& j);
json graph_to_json(const ResolutionGraph& graph);
ResolutionGraph load_graph(const std::string& path);

json lattice_vector_to_json(const LatticeVector& v);
json pair_instance_to_json(const PairDiscrInstance& inst);
json ledger_to_json(const EqSLedger& ledger);

}  // namespace lctkit::io
