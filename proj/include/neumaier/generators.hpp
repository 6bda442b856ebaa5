#pragma once

#include <cstddef>
#include <string>
#include <variant>

#include "neumaier/errors.hpp"
#include "neumaier/graph.hpp"

namespace neumaier {

namespace family {
struct CompleteMultipartite {
  std::size_t parts;
  std::size_t part_size;
};
struct Rook {
  std::size_t side;
};
struct Johnson2 {
  std::size_t n;
};
struct Complete {
  std::size_t n;
};
struct Cycle {
  std::size_t n;
};
struct Petersen {};
}  // namespace family

using GraphFamily = std::variant<family::CompleteMultipartite, family::Rook, family::Johnson2,
                                 family::Complete, family::Cycle, family::Petersen>;

namespace detail {

// Index of the 2-subset {a, b}, a < b, of an n-set in lexicographic order.
inline std::size_t pair_index(std::size_t n, std::size_t a, std::size_t b) {
  return a * n - a * (a + 1) / 2 + (b - a - 1);
}

// Graph on the 2-subsets of an n-set; `intersecting` picks J(n,2) (true) or
// the Kneser graph K(n,2) (false).
inline Graph pair_graph(std::size_t n, bool intersecting) {
  GraphBuilder g(n * (n - 1) / 2);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = a; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          const std::size_t x = pair_index(n, a, b), y = pair_index(n, c, d);
          if (x >= y) continue;
          const bool meet = a == c || a == d || b == c || b == d;
          if (meet == intersecting) g.add_edge(x, y);
        }
  return std::move(g).build();
}

}  // namespace detail

inline Graph empty_graph(std::size_t n) { return GraphBuilder(n).build(); }

inline Graph complete_graph(std::size_t n) {
  GraphBuilder g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return std::move(g).build();
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw ArgumentError("cycle needs at least 3 vertices");
  GraphBuilder g(n);
  for (std::size_t u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return std::move(g).build();
}

inline Graph path_graph(std::size_t n) {
  GraphBuilder g(n);
  for (std::size_t u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return std::move(g).build();
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  GraphBuilder g(a + b);
  for (std::size_t u = 0; u < a; ++u)
    for (std::size_t v = 0; v < b; ++v) g.add_edge(u, a + v);
  return std::move(g).build();
}

// Vertex i lies in part i / m.
inline Graph complete_multipartite(std::size_t p, std::size_t m) {
  if (p < 2 || m < 1) throw ArgumentError("complete multipartite needs p >= 2 parts of size m >= 1");
  GraphBuilder g(p * m);
  for (std::size_t u = 0; u < p * m; ++u)
    for (std::size_t v = u + 1; v < p * m; ++v)
      if (u / m != v / m) g.add_edge(u, v);
  return std::move(g).build();
}

// Cell (r, c) is vertex r * side + c; same row or column means adjacent.
inline Graph rook_graph(std::size_t side) {
  if (side < 2) throw ArgumentError("rook graph needs side >= 2");
  const std::size_t n = side * side;
  GraphBuilder g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (u / side == v / side || u % side == v % side) g.add_edge(u, v);
  return std::move(g).build();
}

inline Graph johnson2_graph(std::size_t n) {
  if (n < 4) throw ArgumentError("J(n,2) needs n >= 4");
  return detail::pair_graph(n, true);
}

inline Graph petersen_graph() { return detail::pair_graph(5, false); }

inline Graph generate(const GraphFamily& f) {
  struct Visitor {
    Graph operator()(const family::CompleteMultipartite& x) const {
      return complete_multipartite(x.parts, x.part_size);
    }
    Graph operator()(const family::Rook& x) const { return rook_graph(x.side); }
    Graph operator()(const family::Johnson2& x) const { return johnson2_graph(x.n); }
    Graph operator()(const family::Complete& x) const {
      if (x.n < 1) throw ArgumentError("complete graph needs n >= 1");
      return complete_graph(x.n);
    }
    Graph operator()(const family::Cycle& x) const { return cycle_graph(x.n); }
    Graph operator()(const family::Petersen&) const { return petersen_graph(); }
  };
  return std::visit(Visitor{}, f);
}

}  // namespace neumaier
