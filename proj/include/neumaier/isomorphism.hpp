#pragma once

// Backtracking isomorphism test for small graphs. Vertices of the first graph
// are placed in BFS order so each new vertex has a mapped neighbour, which
// keeps the search short on the symmetric graphs it is used for.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "neumaier/graph.hpp"

namespace neumaier {

namespace detail {

inline std::vector<std::size_t> bfs_order(const Graph& g) {
  std::vector<std::size_t> order;
  VertexSet seen;
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (seen.contains(s)) continue;
    seen.insert(s);
    std::size_t head = order.size();
    order.push_back(s);
    while (head < order.size()) {
      const std::size_t u = order[head++];
      (g.neighbors(u) - seen).for_each([&](std::size_t w) {
        seen.insert(w);
        order.push_back(w);
      });
    }
  }
  return order;
}

inline bool extend_isomorphism(const Graph& a, const Graph& b, const std::vector<std::size_t>& order,
                               std::size_t depth, std::vector<std::size_t>& map, VertexSet& used) {
  if (depth == order.size()) return true;
  const std::size_t u = order[depth];
  for (std::size_t c = 0; c < b.order(); ++c) {
    if (used.contains(c) || b.degree(c) != a.degree(u)) continue;
    bool ok = true;
    for (std::size_t i = 0; i < depth && ok; ++i) ok = a.adjacent(u, order[i]) == b.adjacent(c, map[order[i]]);
    if (!ok) continue;
    map[u] = c;
    used.insert(c);
    if (extend_isomorphism(a, b, order, depth + 1, map, used)) return true;
    used.erase(c);
  }
  return false;
}

}  // namespace detail

// A vertex map a -> b preserving adjacency, if one exists.
inline std::optional<std::vector<std::size_t>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return std::nullopt;
  std::vector<std::size_t> da, db;
  for (std::size_t u = 0; u < a.order(); ++u) {
    da.push_back(a.degree(u));
    db.push_back(b.degree(u));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return std::nullopt;
  std::vector<std::size_t> map(a.order());
  VertexSet used;
  if (!detail::extend_isomorphism(a, b, detail::bfs_order(a), 0, map, used)) return std::nullopt;
  return map;
}

inline bool are_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace neumaier
