#include "lctkit/resolution_graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lctkit {

ResolutionGraph::ResolutionGraph(std::vector<Curve> curves,
                                 std::vector<std::pair<std::int64_t, std::int64_t>> edges,
                                 std::vector<BoundaryEnd> ends)
    : curves_(std::move(curves)), edges_(std::move(edges)), ends_(std::move(ends)) {
  std::set<std::int64_t> ids;
  for (const auto& c : curves_) {
    if (!ids.insert(c.id).second) throw StructuralError("duplicate curve id " + std::to_string(c.id));
    if (c.self_int > -1) {
      throw StructuralError("curve " + std::to_string(c.id) + " has self-intersection >= 0");
    }
    if (c.f_mult < 0) throw StructuralError("negative f-multiplicity on curve " + std::to_string(c.id));
  }
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (const auto& [a, b] : edges_) {
    if (!ids.contains(a) || !ids.contains(b)) throw StructuralError("edge references unknown curve");
    if (a == b) throw StructuralError("self-loop on curve " + std::to_string(a));
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) {
      throw StructuralError("duplicate edge");
    }
  }
  for (const auto& e : ends_) {
    if (!ids.contains(e.curve)) throw StructuralError("end attached to unknown curve");
    if (e.mult.sign() < 0) throw StructuralError("negative end multiplicity");
  }
  if (!curves_.empty()) {
    if (edges_.size() + 1 != curves_.size()) throw StructuralError("resolution graph is not a tree");
    // Connectivity by union-find over indices.
    std::vector<std::size_t> parent(curves_.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    const auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& [a, b] : edges_) parent[find(index_of(a))] = find(index_of(b));
    for (std::size_t i = 1; i < curves_.size(); ++i) {
      if (find(i) != find(0)) throw StructuralError("resolution graph is not connected");
    }
  }
  const bool has_f = std::any_of(curves_.begin(), curves_.end(),
                                 [](const Curve& c) { return c.f_mult != 0; });
  if (has_f && !ends_.empty()) {
    // Total transform of F meets every exceptional curve trivially.
    const auto mat = intersection_matrix();
    const auto fy = strict_transform_degrees();
    for (std::size_t j = 0; j < curves_.size(); ++j) {
      Rational total = fy[j];
      for (std::size_t i = 0; i < curves_.size(); ++i) total += Rational(curves_[i].f_mult * mat[i][j]);
      if (total.sign() != 0) {
        throw StructuralError("f-multiplicities disagree with the ends at curve " +
                              std::to_string(curves_[j].id));
      }
    }
  }
}

std::size_t ResolutionGraph::index_of(std::int64_t id) const {
  for (std::size_t i = 0; i < curves_.size(); ++i) {
    if (curves_[i].id == id) return i;
  }
  throw StructuralError("unknown curve id " + std::to_string(id));
}

std::vector<std::vector<std::int64_t>> ResolutionGraph::intersection_matrix() const {
  const std::size_t n = curves_.size();
  std::vector<std::vector<std::int64_t>> mat(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) mat[i][i] = curves_[i].self_int;
  for (const auto& [a, b] : edges_) {
    const std::size_t i = index_of(a);
    const std::size_t j = index_of(b);
    mat[i][j] = mat[j][i] = 1;
  }
  return mat;
}

std::vector<Rational> ResolutionGraph::strict_transform_degrees() const {
  const std::size_t n = curves_.size();
  std::vector<Rational> out(n, Rational(0));
  if (!ends_.empty()) {
    for (const auto& e : ends_) out[index_of(e.curve)] += e.mult;
    return out;
  }
  const auto mat = intersection_matrix();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) out[j] -= Rational(curves_[i].f_mult * mat[i][j]);
  }
  return out;
}

namespace {

/*
 * Solves M x = r for each right-hand side by Bareiss elimination over the
 * integers. No pivoting: after step k the pivot equals the leading
 * (k+1)-minor, whose sign must be (-1)^(k+1) for a negative definite M.
 */
std::vector<std::vector<Rational>> solve_negative_definite(
    const std::vector<std::vector<std::int64_t>>& mat, const std::vector<std::vector<Rational>>& rhs) {
  const std::size_t n = mat.size();
  const std::size_t p = rhs.size();
  // Clear denominators column by column.
  std::vector<BigInt> scale(p, BigInt(1));
  for (std::size_t c = 0; c < p; ++c) {
    for (const auto& v : rhs[c]) mpz_lcm(scale[c].get_mpz_t(), scale[c].get_mpz_t(), v.den().get_mpz_t());
  }
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n + p));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(mat[i][j]);
    for (std::size_t c = 0; c < p; ++c) {
      const Rational& v = rhs[c][i];
      a[i][n + c] = v.num() * (scale[c] / v.den());
    }
  }
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const int expected = (k % 2 == 0) ? -1 : 1;
    if (sgn(a[k][k]) != expected) {
      throw StructuralError("intersection matrix is not negative definite");
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n + p; ++j) {
        BigInt t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(t);
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  std::vector<std::vector<Rational>> out(p, std::vector<Rational>(n));
  for (std::size_t c = 0; c < p; ++c) {
    for (std::size_t ii = n; ii-- > 0;) {
      Rational acc(a[ii][n + c]);
      for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(a[ii][j]) * out[c][j];
      out[c][ii] = acc / Rational(a[ii][ii]);
    }
    for (auto& v : out[c]) v /= Rational(scale[c]);
  }
  return out;
}

}  // namespace

std::vector<AffineCoefficient> crepant_affine(const ResolutionGraph& graph) {
  const std::size_t n = graph.size();
  if (n == 0) return {};
  const auto mat = graph.intersection_matrix();
  const auto fy = graph.strict_transform_degrees();
  // sum_i b_i E_i.E_j = -K.E_j - c F_Y.E_j = (2 + E_j^2) - c F_Y.E_j
  std::vector<Rational> slope_rhs(n);
  std::vector<Rational> offset_rhs(n);
  for (std::size_t j = 0; j < n; ++j) {
    slope_rhs[j] = -fy[j];
    offset_rhs[j] = Rational(2 + mat[j][j]);
  }
  const auto sol = solve_negative_definite(mat, {slope_rhs, offset_rhs});
  std::vector<AffineCoefficient> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back({graph.curves()[i].id, sol[0][i], sol[1][i]});
  }
  return out;
}

std::vector<std::pair<std::int64_t, Rational>> crepant_pullback(const ResolutionGraph& graph,
                                                                const Rational& c) {
  std::vector<std::pair<std::int64_t, Rational>> out;
  for (const auto& b : crepant_affine(graph)) out.emplace_back(b.id, b.at(c));
  return out;
}

LctResult lct_from_graph(const ResolutionGraph& graph,
                         const std::vector<std::int64_t>& component_multiplicities) {
  std::vector<std::int64_t> mults = component_multiplicities;
  if (mults.empty()) {
    for (const auto& e : graph.ends()) {
      if (!e.mult.is_integer()) throw DomainError("component multiplicities must be integral");
      mults.push_back(to_int64(e.mult.num()));
    }
  }
  LctResult best{Rational(1), LctResult::Binding::None, 0, true};
  const auto consider = [&](const Rational& bound, LctResult::Binding kind, std::int64_t id) {
    if (best.capped || bound < best.value) best = {bound, kind, id, false};
  };
  for (const auto& b : crepant_affine(graph)) {
    if (b.offset > Rational(1)) {
      throw DomainError("ambient germ is not log canonical along curve " + std::to_string(b.id));
    }
    if (b.slope.sign() > 0) consider((Rational(1) - b.offset) / b.slope, LctResult::Binding::Curve, b.id);
  }
  for (std::size_t i = 0; i < mults.size(); ++i) {
    if (mults[i] < 1) throw DomainError("component multiplicities must be >= 1");
    consider(Rational(1, mults[i]), LctResult::Binding::Component, static_cast<std::int64_t>(i));
  }
  if (!best.capped && best.value > Rational(1)) {
    best.value = Rational(1);
    best.capped = true;
  }
  return best;
}

ResolutionGraph chain_graph(const CyclicQuotientGerm& germ, const AxesBoundary& boundary) {
  boundary.validate();
  const auto a = hj_expand(germ.m(), germ.q());
  std::vector<Curve> curves;
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  std::vector<BoundaryEnd> ends;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto id = static_cast<std::int64_t>(i + 1);
    curves.push_back({id, -a[i], 0});
    if (i > 0) edges.emplace_back(id - 1, id);
  }
  if (!a.empty()) {
    ends.push_back({1, boundary.lambda2});
    ends.push_back({static_cast<std::int64_t>(a.size()), boundary.lambda1});
  }
  return {std::move(curves), std::move(edges), std::move(ends)};
}

}  // namespace lctkit
