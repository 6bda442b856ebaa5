#pragma once

// Neumaier line graphs: L(root) is Neumaier only as a rook graph (root
// K_{s+1,s+1}), a triangular graph J(s+2,2) (root K_{s+2}), or the
// octahedron (regular cliques from root triangles).

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "neumaier/characterize.hpp"
#include "neumaier/generators.hpp"
#include "neumaier/isomorphism.hpp"

namespace neumaier {

enum class LineGraphCaseKind { RookCase, JohnsonCase, Octahedron, NotNeumaier };

inline const char* to_string(LineGraphCaseKind k) {
  switch (k) {
    case LineGraphCaseKind::RookCase: return "RookCase";
    case LineGraphCaseKind::JohnsonCase: return "JohnsonCase";
    case LineGraphCaseKind::Octahedron: return "Octahedron";
    case LineGraphCaseKind::NotNeumaier: return "NotNeumaier";
  }
  return "?";
}

struct LineGraphCase {
  LineGraphCaseKind kind = LineGraphCaseKind::NotNeumaier;
  std::size_t s = 0;  // meaningful for RookCase and JohnsonCase
  friend bool operator==(const LineGraphCase&, const LineGraphCase&) = default;
};

inline std::string to_string(const LineGraphCase& c) {
  std::string out = to_string(c.kind);
  if (c.kind == LineGraphCaseKind::RookCase || c.kind == LineGraphCaseKind::JohnsonCase)
    out += "(" + std::to_string(c.s) + ")";
  return out;
}

// Largest line graph checked by explicit isomorphism.
inline constexpr std::size_t kLineGraphIsomorphismLimit = 40;

struct LineGraphClassification {
  // Usually one case. L(K_4) is both J(4,2) and the octahedron.
  std::vector<LineGraphCase> cases;
  ClassReport line_report;
  bool isomorphism_checked = false;

  bool has(LineGraphCaseKind k) const {
    for (const auto& c : cases)
      if (c.kind == k) return true;
    return false;
  }
};

/// Classifies L(root). Every Neumaier outcome is matched to its family, by
/// isomorphism when L has at most 40 vertices, and must be strongly regular
/// with smallest eigenvalue -2; a mismatch raises ConsistencyError.
inline LineGraphClassification classify_line_graph_neumaier(const Graph& root) {
  if (root.edge_count() == 0) throw ArgumentError("line graph needs a root with at least one edge");
  const auto root_edges = root.edges();
  const Graph l = line_graph(root);

  LineGraphClassification out;
  out.line_report = classify(l);
  const ClassReport& r = out.line_report;
  if (!r.is_neumaier()) {
    out.cases.push_back({LineGraphCaseKind::NotNeumaier, 0});
    return out;
  }

  const std::size_t s = static_cast<std::size_t>(*r.s), e = static_cast<std::size_t>(*r.e);
  bool star = false, triangle = false;
  for (const auto& c : r.regular_cliques) {
    // Edges of the root forming the clique share a vertex (star) or form a triangle.
    VertexSet common = VertexSet::range(root.order());
    c.members.for_each([&](std::size_t i) {
      VertexSet ends;
      ends.insert(root_edges[i].first);
      ends.insert(root_edges[i].second);
      common &= ends;
    });
    if (!common.empty()) star = true;
    else if (c.order == 3) triangle = true;
    else throw ConsistencyError("regular clique of a line graph is neither a star nor a triangle");
  }
  if (star && e == 1) out.cases.push_back({LineGraphCaseKind::RookCase, s});
  if (star && e == 2) out.cases.push_back({LineGraphCaseKind::JohnsonCase, s});
  if (triangle) out.cases.push_back({LineGraphCaseKind::Octahedron, 0});
  if (out.cases.empty())
    throw ConsistencyError("Neumaier line graph with star cliques and nexus " + std::to_string(e));

  if (!r.srg) throw ConsistencyError("Neumaier line graph is not strongly regular");
  if (std::abs(r.spectrum.min() + 2) > kEigenEqualityTolerance)
    throw ConsistencyError("Neumaier line graph does not have smallest eigenvalue -2");

  if (l.order() <= kLineGraphIsomorphismLimit) {
    for (const auto& c : out.cases) {
      Graph model;
      switch (c.kind) {
        case LineGraphCaseKind::RookCase: model = rook_graph(c.s + 1); break;
        case LineGraphCaseKind::JohnsonCase: model = johnson2_graph(c.s + 2); break;
        default: model = complete_multipartite(3, 2); break;
      }
      if (!are_isomorphic(l, model))
        throw ConsistencyError("line graph is not isomorphic to " + to_string(c));
    }
    out.isomorphism_checked = true;
  }
  return out;
}

}  // namespace neumaier
