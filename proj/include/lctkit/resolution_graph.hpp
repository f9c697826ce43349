#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lctkit/rational.hpp"
#include "lctkit/toric.hpp"

namespace lctkit {

/// Exceptional rational curve of a resolution.
struct Curve {
  std::int64_t id = 0;
  std::int64_t self_int = -1;
  /// Multiplicity of the divisor F along this curve in the total transform.
  std::int64_t f_mult = 0;
};

/// Strict transform of a branch of F (or a boundary component) meeting a curve.
struct BoundaryEnd {
  std::int64_t curve = 0;
  Rational mult;
};

/*
 * Dual graph of a resolution: a tree of rational exceptional curves with
 * negative definite intersection matrix, plus the strict transforms of F.
 *
 * F_Y . E_j is taken from the ends when any are listed; otherwise it is
 * recovered from the f-multiplicities via (sum f_i E_i + F_Y) . E_j = 0.
 * When both are given they must satisfy that identity.
 */
class ResolutionGraph {
public:
  ResolutionGraph() = default;
  /// Validates everything except definiteness (checked during elimination).
  ResolutionGraph(std::vector<Curve> curves, std::vector<std::pair<std::int64_t, std::int64_t>> edges,
                  std::vector<BoundaryEnd> ends);

  const std::vector<Curve>& curves() const { return curves_; }
  const std::vector<std::pair<std::int64_t, std::int64_t>>& edges() const { return edges_; }
  const std::vector<BoundaryEnd>& ends() const { return ends_; }
  std::size_t size() const { return curves_.size(); }

  /// E_i . E_j in curve order.
  std::vector<std::vector<std::int64_t>> intersection_matrix() const;
  /// F_Y . E_j in curve order.
  std::vector<Rational> strict_transform_degrees() const;

  std::size_t index_of(std::int64_t id) const;

private:
  std::vector<Curve> curves_;
  std::vector<std::pair<std::int64_t, std::int64_t>> edges_;
  std::vector<BoundaryEnd> ends_;
};

/// Crepant coefficient b_i(c) = slope * c + offset.
struct AffineCoefficient {
  std::int64_t id = 0;
  Rational slope;
  Rational offset;

  Rational at(const Rational& c) const { return slope * c + offset; }
};

/*
 * Solves (K_Y + sum b_i E_i + c F_Y) . E_j = 0 for all j with K.E_j = -2 - E_j^2
 * by fraction-free elimination. Throws StructuralError if the intersection
 * matrix is not negative definite.
 */
std::vector<AffineCoefficient> crepant_affine(const ResolutionGraph& graph);

/// (curve id, b_i) at the given c; the discrepancy of E_i is -b_i.
std::vector<std::pair<std::int64_t, Rational>> crepant_pullback(const ResolutionGraph& graph,
                                                                const Rational& c);

struct LctResult {
  enum class Binding { Curve, Component, None };
  Rational value;
  Binding binding = Binding::None;
  /// Curve id, or component index for Binding::Component.
  std::int64_t binding_id = 0;
  /// Set when no constraint bounds c and the value was capped at 1.
  bool capped = false;
};

/*
 * Log canonical threshold from a log resolution: the least c with some
 * b_i(c) = 1 or some component coefficient c * mult = 1. Component
 * multiplicities default to the integral ends of the graph.
 */
LctResult lct_from_graph(const ResolutionGraph& graph,
                         const std::vector<std::int64_t>& component_multiplicities = {});

/// Minimal resolution chain of the germ; the (0,1)-axis meets the first curve with
/// coefficient lambda2 and the (1,0)-axis meets the last with lambda1.
ResolutionGraph chain_graph(const CyclicQuotientGerm& germ, const AxesBoundary& boundary);

}  // namespace lctkit
