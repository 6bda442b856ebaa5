#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "neumaier/errors.hpp"
#include "neumaier/vertex_set.hpp"

namespace neumaier {

/// Simple undirected graph on vertices 0..n-1, stored as one neighbour bitset
/// per vertex. Immutable once built; use GraphBuilder to construct.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const { return adj_.size(); }
  const VertexSet& neighbors(std::size_t u) const { return adj_[u]; }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].contains(v); }
  std::size_t degree(std::size_t u) const { return adj_[u].size(); }
  VertexSet vertices() const { return VertexSet::range(order()); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& a : adj_) twice += a.size();
    return twice / 2;
  }

  // Edges (u, v) with u < v, lexicographic.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < order(); ++u)
      adj_[u].for_each([&](std::size_t v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  std::size_t common_neighbors(std::size_t u, std::size_t v) const {
    return intersection_size(adj_[u], adj_[v]);
  }

  bool is_complete() const {
    for (std::size_t u = 0; u < order(); ++u)
      if (degree(u) + 1 != order()) return false;
    return true;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  std::vector<VertexSet> adj_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) {
    if (n > kMaxVertices)
      throw ArgumentError("graph order " + std::to_string(n) + " exceeds the compiled maximum of " +
                          std::to_string(kMaxVertices));
    g_.adj_.resize(n);
  }

  GraphBuilder& add_edge(std::size_t u, std::size_t v) {
    if (u >= g_.order() || v >= g_.order())
      throw ArgumentError("edge endpoint out of range");
    if (u == v) throw ArgumentError("self-loop at vertex " + std::to_string(u));
    g_.adj_[u].insert(v);
    g_.adj_[v].insert(u);
    return *this;
  }

  Graph build() && { return std::move(g_); }
  Graph build() const& { return g_; }

 private:
  Graph g_;
};

// Every u ~ v with u != v and u !~ v in g.
inline Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  GraphBuilder b(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

/// Line graph. Vertex i of the result is the i-th edge of g in lexicographic
/// (u, v), u < v order; two are adjacent when the edges share an endpoint.
inline Graph line_graph(const Graph& g) {
  const auto es = g.edges();
  if (es.empty()) throw ArgumentError("line graph of an edgeless graph");
  GraphBuilder b(es.size());
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      const auto [a, c] = es[i];
      const auto [x, y] = es[j];
      if (a == x || a == y || c == x || c == y) b.add_edge(i, j);
    }
  return std::move(b).build();
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  GraphBuilder out(a.order() + b.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(a.order() + u, a.order() + v);
  return std::move(out).build();
}

// BFS distances from `source`; unreachable vertices get nullopt.
inline std::vector<std::optional<std::size_t>> distances_from(const Graph& g, std::size_t source) {
  std::vector<std::optional<std::size_t>> dist(g.order());
  VertexSet seen;
  seen.insert(source);
  VertexSet frontier = seen;
  std::size_t d = 0;
  while (!frontier.empty()) {
    VertexSet next;
    frontier.for_each([&](std::size_t u) {
      dist[u] = d;
      next |= g.neighbors(u);
    });
    next -= seen;
    seen |= next;
    frontier = next;
    ++d;
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto dist = distances_from(g, 0);
  for (const auto& d : dist)
    if (!d) return false;
  return true;
}

/// Largest BFS distance over all vertex pairs; nullopt means infinite
/// (disconnected graph).
inline std::optional<std::size_t> diameter(const Graph& g) {
  std::size_t best = 0;
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (const auto& d : distances_from(g, u)) {
      if (!d) return std::nullopt;
      if (*d > best) best = *d;
    }
  }
  return best;
}

// Vertex sets of the connected components, ordered by smallest member.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    const std::size_t s = unseen.first();
    VertexSet comp;
    const auto dist = distances_from(g, s);
    for (std::size_t v = 0; v < g.order(); ++v)
      if (dist[v]) comp.insert(v);
    unseen -= comp;
    out.push_back(comp);
  }
  return out;
}

}  // namespace neumaier
