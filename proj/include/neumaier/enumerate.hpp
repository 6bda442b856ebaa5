#pragma once

// Exhaustive enumeration of labeled graphs on n <= 8 vertices.
//
// Graph number `mask` has edge number b present iff bit b of `mask` is set,
// with edges numbered in graph6 order: (0,1), (0,2), (1,2), (0,3), ...
// Disjoint mask ranges can be enumerated independently.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "neumaier/errors.hpp"
#include "neumaier/graph.hpp"

namespace neumaier {

inline constexpr std::size_t kMaxEnumerationOrder = 8;

struct EnumerationOptions {
  // Visit only graphs whose degree sequence is non-increasing in vertex
  // order. Every isomorphism class still has a representative.
  bool monotone_degrees = false;
};

inline std::uint64_t labeled_graph_count(std::size_t n) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw ArgumentError("enumeration order must be in 1..8, got " + std::to_string(n));
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

inline std::vector<std::pair<std::size_t, std::size_t>> graph6_edge_order(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) out.emplace_back(i, j);
  return out;
}

inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  GraphBuilder b(n);
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++bit)
      if ((mask >> bit) & 1U) b.add_edge(i, j);
  return std::move(b).build();
}

// Visits masks in [lo, hi) in increasing order; `visit(mask, graph)`.
// Returns the number of graphs visited.
template <class Visitor>
std::uint64_t enumerate_graph_range(std::size_t n, std::uint64_t lo, std::uint64_t hi,
                                    Visitor&& visit, EnumerationOptions opts = {}) {
  const std::uint64_t total = labeled_graph_count(n);
  if (hi > total) hi = total;
  const auto order = graph6_edge_order(n);
  std::uint64_t visited = 0;
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    if (opts.monotone_degrees) {
      std::size_t deg[kMaxEnumerationOrder] = {};
      for (std::size_t b = 0; b < order.size(); ++b)
        if ((mask >> b) & 1U) {
          ++deg[order[b].first];
          ++deg[order[b].second];
        }
      bool ok = true;
      for (std::size_t v = 1; v < n && ok; ++v) ok = deg[v - 1] >= deg[v];
      if (!ok) continue;
    }
    const Graph g = graph_from_mask(n, mask);
    visit(mask, g);
    ++visited;
  }
  return visited;
}

template <class Visitor>
std::uint64_t enumerate_all_graphs(std::size_t n, Visitor&& visit, EnumerationOptions opts = {}) {
  return enumerate_graph_range(
      n, 0, labeled_graph_count(n), [&](std::uint64_t, const Graph& g) { visit(g); }, opts);
}

}  // namespace neumaier
