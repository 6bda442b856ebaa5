#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "neumaier/errors.hpp"
#include "neumaier/graph.hpp"
#include "neumaier/regularity.hpp"

namespace neumaier {

namespace detail {

template <class Emit>
void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x, Emit& emit) {
  if (p.empty()) {
    if (x.empty()) emit(static_cast<const VertexSet&>(r));
    return;
  }
  // Tomita pivot: the vertex of P u X with most neighbours in P.
  std::size_t pivot = 0, best = 0;
  bool first = true;
  (p | x).for_each([&](std::size_t u) {
    const std::size_t c = intersection_size(p, g.neighbors(u));
    if (first || c > best) {
      pivot = u;
      best = c;
      first = false;
    }
  });
  (p - g.neighbors(pivot)).for_each([&](std::size_t v) {
    VertexSet r2 = r;
    r2.insert(v);
    bron_kerbosch(g, r2, p & g.neighbors(v), x & g.neighbors(v), emit);
    p.erase(v);
    x.insert(v);
  });
}

template <class Emit>
void cliques_within(const Graph& g, VertexSet current, VertexSet candidates, std::size_t remaining, Emit& emit) {
  if (remaining == 0) {
    emit(static_cast<const VertexSet&>(current));
    return;
  }
  candidates.for_each([&](std::size_t v) {
    if (candidates.size() < remaining) return;
    candidates.erase(v);
    VertexSet next = current;
    next.insert(v);
    cliques_within(g, next, candidates & g.neighbors(v), remaining - 1, emit);
  });
}

inline std::size_t count_cliques_within(const Graph& g, VertexSet candidates, std::size_t remaining) {
  if (remaining == 0) return 1;
  std::size_t total = 0;
  candidates.for_each([&](std::size_t v) {
    if (candidates.size() < remaining) return;
    candidates.erase(v);
    total += count_cliques_within(g, candidates & g.neighbors(v), remaining - 1);
  });
  return total;
}

}  // namespace detail

/// Calls `emit(const VertexSet&)` once per maximal clique (Bron-Kerbosch with
/// pivoting). Order is deterministic for a given vertex numbering.
template <class Emit>
void for_each_maximal_clique(const Graph& g, Emit&& emit) {
  if (g.order() == 0) return;
  detail::bron_kerbosch(g, VertexSet{}, g.vertices(), VertexSet{}, emit);
}

inline std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  for_each_maximal_clique(g, [&](const VertexSet& c) { out.push_back(c); });
  return out;
}

// All cliques with exactly t vertices, in lexicographic order of member lists.
template <class Emit>
void for_each_clique_of_order(const Graph& g, std::size_t t, Emit&& emit) {
  if (t == 0) throw ArgumentError("clique order must be at least 1");
  detail::cliques_within(g, VertexSet{}, g.vertices(), t, emit);
}

inline std::vector<VertexSet> cliques_of_order(const Graph& g, std::size_t t) {
  std::vector<VertexSet> out;
  for_each_clique_of_order(g, t, [&](const VertexSet& c) { out.push_back(c); });
  return out;
}

inline std::size_t clique_number(const Graph& g) {
  std::size_t best = 0;
  for_each_maximal_clique(g, [&](const VertexSet& c) { best = std::max(best, c.size()); });
  return best;
}

inline bool is_clique(const Graph& g, const VertexSet& c) {
  bool ok = true;
  c.for_each([&](std::size_t u) { ok = ok && (c - g.neighbors(u)).size() == 1; });
  return ok;
}

struct CliqueReport {
  VertexSet members;
  std::size_t order = 0;
  bool is_maximal = false;
  bool is_regular = false;
  std::optional<std::size_t> nexus;     // the constant e when regular
  std::vector<std::size_t> outside_counts;  // e_x for each x outside, by vertex id
};

inline CliqueReport describe_clique(const Graph& g, const VertexSet& c) {
  if (!is_clique(g, c)) throw ArgumentError("vertex set is not a clique");
  CliqueReport r;
  r.members = c;
  r.order = c.size();
  const VertexSet outside = g.vertices() - c;
  bool constant = true;
  outside.for_each([&](std::size_t x) {
    const std::size_t ex = intersection_size(g.neighbors(x), c);
    if (!r.outside_counts.empty() && ex != r.outside_counts.front()) constant = false;
    r.outside_counts.push_back(ex);
  });
  r.is_maximal = std::none_of(r.outside_counts.begin(), r.outside_counts.end(),
                              [&](std::size_t ex) { return ex == r.order; });
  if (constant && !r.outside_counts.empty() && r.outside_counts.front() > 0) {
    r.is_regular = true;
    r.nexus = r.outside_counts.front();
  }
  return r;
}

/// Maximal cliques C for which every vertex outside C has the same positive
/// number of neighbours in C. Only maximal cliques are searched: a regular
/// clique of an edge-regular graph has order s+1 and is therefore maximum.
/// In an edge-regular graph all regular cliques share one order.
inline std::vector<CliqueReport> regular_cliques(const Graph& g) {
  if (g.is_complete()) throw ArgumentError("regular cliques are not defined for complete graphs");
  std::vector<CliqueReport> out;
  for_each_maximal_clique(g, [&](const VertexSet& c) {
    auto r = describe_clique(g, c);
    if (r.is_regular) out.push_back(std::move(r));
  });
  if (out.size() > 1 && g.edge_count() > 0 && edge_regular_params(g)) {
    for (const auto& r : out)
      if (r.order != out.front().order)
        throw ConsistencyError("regular cliques of different orders in an edge-regular graph");
  }
  return out;
}

struct EquitableBipartition {
  bool equitable = false;
  // Row i: neighbours of a vertex of part i inside C, then outside C. Part 0 is C.
  std::array<std::array<std::size_t, 2>, 2> quotient{};
  std::pair<double, double> eigenvalues{};  // larger first
};

/// Whether {C, V \ C} is an equitable partition; if so, its quotient matrix
/// and that matrix's eigenvalues (closed form).
inline EquitableBipartition is_equitable_bipartition(const Graph& g, const VertexSet& c) {
  const VertexSet all = g.vertices();
  if (c.empty() || !c.is_subset_of(all) || c == all)
    throw ArgumentError("bipartition needs a proper nonempty vertex subset");
  const VertexSet rest = all - c;
  EquitableBipartition out;
  bool ok = true;
  auto check = [&](const VertexSet& part, std::size_t row) {
    bool first = true;
    part.for_each([&](std::size_t u) {
      const std::array<std::size_t, 2> counts{intersection_size(g.neighbors(u), c),
                                              intersection_size(g.neighbors(u), rest)};
      if (first) {
        out.quotient[row] = counts;
        first = false;
      } else if (counts != out.quotient[row]) {
        ok = false;
      }
    });
  };
  check(c, 0);
  check(rest, 1);
  if (!ok) return EquitableBipartition{};
  out.equitable = true;
  const double a = static_cast<double>(out.quotient[0][0]), b = static_cast<double>(out.quotient[0][1]);
  const double cc = static_cast<double>(out.quotient[1][0]), d = static_cast<double>(out.quotient[1][1]);
  const double tr = a + d, det = a * d - b * cc;
  const double disc = std::sqrt(std::max(0.0, tr * tr - 4 * det));
  out.eigenvalues = {(tr + disc) / 2, (tr - disc) / 2};
  return out;
}

struct ExtensionReport {
  bool holds = false;
  std::optional<VertexSet> witness;  // first (e+1)-clique with no (s+1)-clique over it
  bool unique_extension = false;     // each (e+1)-clique lies in exactly one (s+1)-clique
  bool every_clique_extends = false; // every maximal clique has order s+1
  bool per_edge_constant = false;    // number of (s+1)-cliques through an edge
  bool per_vertex_constant = false;  // number of (s+1)-cliques through a vertex
  std::size_t top_clique_count = 0;
};

/// Checks whether every (e+1)-clique of a Neumaier graph with parameters
/// (s, e) lies in an (s+1)-clique, together with the consequences that
/// hypothesis is known to force.
inline ExtensionReport extension_hypothesis_holds(const Graph& g, std::size_t e, std::size_t s) {
  if (g.edge_count() == 0 || g.is_complete() || !edge_regular_params(g))
    throw ArgumentError("extension check needs a non-complete edge-regular graph");
  if (e < 1 || s < e) throw ArgumentError("extension check needs 1 <= e <= s");
  const auto regular = regular_cliques(g);
  const bool matches = std::any_of(regular.begin(), regular.end(), [&](const CliqueReport& r) {
    return r.order == s + 1 && r.nexus == e;
  });
  if (!matches) throw ArgumentError("graph has no regular clique of order s+1 with nexus e");

  ExtensionReport out;
  out.holds = true;
  out.unique_extension = true;
  for_each_clique_of_order(g, e + 1, [&](const VertexSet& h) {
    if (!out.holds) return;
    VertexSet common = g.vertices();
    h.for_each([&](std::size_t u) { common &= g.neighbors(u); });
    const std::size_t extensions = detail::count_cliques_within(g, common, s - e);
    if (extensions == 0) {
      out.holds = false;
      out.witness = h;
    } else if (extensions > 1) {
      out.unique_extension = false;
    }
  });
  if (!out.holds) {
    out.unique_extension = false;
    return out;
  }

  out.every_clique_extends = true;
  for_each_maximal_clique(g, [&](const VertexSet& c) { out.every_clique_extends &= c.size() == s + 1; });

  std::vector<std::size_t> per_vertex(g.order(), 0);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> per_edge;
  for (auto uv : g.edges()) per_edge[uv] = 0;
  for_each_clique_of_order(g, s + 1, [&](const VertexSet& c) {
    ++out.top_clique_count;
    const auto members = c.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i) {
      ++per_vertex[members[i]];
      for (std::size_t j = i + 1; j < members.size(); ++j) ++per_edge[{members[i], members[j]}];
    }
  });
  out.per_vertex_constant = std::all_of(per_vertex.begin(), per_vertex.end(),
                                        [&](std::size_t x) { return x == per_vertex.front(); });
  out.per_edge_constant = std::all_of(per_edge.begin(), per_edge.end(), [&](const auto& kv) {
    return kv.second == per_edge.begin()->second;
  });
  return out;
}

}  // namespace neumaier
