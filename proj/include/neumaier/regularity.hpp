#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "neumaier/errors.hpp"
#include "neumaier/graph.hpp"
#include "neumaier/spectra.hpp"

namespace neumaier {

using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}
inline double rational_to_double(const Rational& r) { return r.convert_to<double>(); }

namespace detail {
inline bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}
}  // namespace detail

struct DegreeProfile {
  std::size_t min = 0;
  std::size_t max = 0;
  Rational average;
  double average_real() const { return rational_to_double(average); }
};

inline DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile d;
  if (g.order() == 0) return d;
  d.min = g.degree(0);
  std::size_t total = 0;
  for (std::size_t u = 0; u < g.order(); ++u) {
    d.min = std::min(d.min, g.degree(u));
    d.max = std::max(d.max, g.degree(u));
    total += g.degree(u);
  }
  d.average = Rational(static_cast<long long>(total), static_cast<long long>(g.order()));
  return d;
}

// Total number of triangles.
inline std::size_t triangle_count(const Graph& g) {
  std::size_t through_edges = 0;
  for (auto [u, v] : g.edges()) through_edges += g.common_neighbors(u, v);
  return through_edges / 3;
}

struct ErgParams {
  std::size_t v;
  std::size_t k;
  std::size_t lambda;
  friend bool operator==(const ErgParams&, const ErgParams&) = default;
};

struct SrgParams {
  std::size_t v;
  std::size_t k;
  std::size_t lambda;
  std::size_t mu;
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

/// (v, k, lambda) if g is regular and every edge lies in the same number of
/// triangles; nullopt otherwise.
inline std::optional<ErgParams> edge_regular_params(const Graph& g) {
  if (g.edge_count() == 0) throw ArgumentError("edge regularity needs at least one edge");
  if (!is_regular(g)) return std::nullopt;
  std::optional<std::size_t> lambda;
  for (std::size_t u = 0; u < g.order(); ++u) {
    bool ok = true;
    g.neighbors(u).for_each([&](std::size_t v) {
      if (v < u || !ok) return;
      const std::size_t c = g.common_neighbors(u, v);
      if (!lambda) lambda = c;
      ok = *lambda == c;
    });
    if (!ok) return std::nullopt;
  }
  return ErgParams{g.order(), g.degree(0), *lambda};
}

/// (v, k, lambda, mu) if g is edge-regular and every non-adjacent pair has mu
/// common neighbours. Disjoint unions of equal complete graphs qualify with
/// mu = 0.
inline std::optional<SrgParams> srg_params(const Graph& g) {
  if (g.is_complete()) throw ArgumentError("strong regularity is not defined here for complete graphs");
  const auto erg = edge_regular_params(g);
  if (!erg) return std::nullopt;
  std::optional<std::size_t> mu;
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v)) continue;
      const std::size_t c = g.common_neighbors(u, v);
      if (!mu) mu = c;
      if (*mu != c) return std::nullopt;
    }
  return SrgParams{erg->v, erg->k, erg->lambda, *mu};
}

// Connected with 0 < mu < k.
inline bool is_primitive_srg(const Graph& g, const SrgParams& p) {
  return p.mu > 0 && p.mu < p.k && is_connected(g);
}

struct MultipartiteStructure {
  bool is_complete_multipartite = false;
  std::vector<std::size_t> part_sizes;  // ascending; empty unless complete multipartite
  std::vector<VertexSet> parts;
};

/// Complete multipartite means non-adjacency (with equality) is an
/// equivalence relation, i.e. the complement is a disjoint union of cliques.
/// Edgeless and complete graphs count (one part, resp. singleton parts).
inline MultipartiteStructure is_complete_multipartite(const Graph& g) {
  MultipartiteStructure out;
  const VertexSet all = g.vertices();
  VertexSet unseen = all;
  while (!unseen.empty()) {
    const std::size_t u = unseen.first();
    const VertexSet cls = all - g.neighbors(u);
    bool ok = true;
    cls.for_each([&](std::size_t w) { ok = ok && (all - g.neighbors(w)) == cls; });
    if (!ok) return MultipartiteStructure{};
    out.parts.push_back(cls);
    out.part_sizes.push_back(cls.size());
    unseen -= cls;
  }
  out.is_complete_multipartite = true;
  std::sort(out.part_sizes.begin(), out.part_sizes.end());
  return out;
}

namespace detail {

// Positive root of a x^2 + b x + c with a > 0 > c, in a cancellation-free form.
inline double positive_root(double a, double b, double c) {
  const double disc = std::sqrt(b * b - 4 * a * c);
  return b <= 0 ? (-b + disc) / (2 * a) : (-2 * c) / (b + disc);
}

inline double relative_residual(double a, double b, double c, double x) {
  const double scale = std::abs(a) * x * x + std::abs(b) * std::abs(x) + std::abs(c);
  return std::abs(a * x * x + b * x + c) / (scale > 0 ? scale : 1.0);
}

}  // namespace detail

/// Clique-order bound s: the positive root of
/// (v+l-2k) s^2 + (k^2-k+l-vl) s - k(v-k-1) = 0. Requires v+l-2k > 0; for
/// complete multipartite graphs s+1 is the number of parts instead.
inline double clique_bound_s(const ErgParams& p) {
  const double v = static_cast<double>(p.v), k = static_cast<double>(p.k), l = static_cast<double>(p.lambda);
  const double a = v + l - 2 * k;
  if (!(a > 0))
    throw ArgumentError("v + lambda - 2k = 0: complete multipartite, s + 1 is the number of parts");
  const double b = k * k - k + l - v * l;
  const double c = -k * (v - k - 1);
  const double s = detail::positive_root(a, b, c);
  if (!(s > 0) || detail::relative_residual(a, b, c, s) > 1e-9)
    throw ConsistencyError("clique bound s failed its quadratic residual check");
  return s;
}

// Number of clique vertices each outside vertex sees: (s+1)(k-s)/(v-(s+1)).
inline double nexus_e(double v, double k, double s) {
  if (v == s + 1) throw ArgumentError("nexus e undefined when v = s + 1");
  return (s + 1) * (k - s) / (v - (s + 1));
}

/// Averaged parameters of an arbitrary graph on v >= 3 vertices that has
/// edges and is not complete multipartite. kbar, lambdabar and mubar are
/// exact; the rest follow from the quadratic for sbar.
struct AvgParams {
  std::size_t v = 0;
  std::size_t triangles = 0;
  Rational kbar, lambdabar, mubar;
  double kbar_r = 0, lambdabar_r = 0, mubar_r = 0;
  double sbar = 0, ebar = 0, theta_m = 0, theta_M = 0;
};

inline AvgParams avg_params(const Graph& g, std::size_t triangles) {
  const std::size_t v = g.order();
  const std::size_t edges = g.edge_count();
  if (v < 3) throw ArgumentError("averaged parameters need at least 3 vertices");
  if (edges == 0) throw ArgumentError("averaged parameters need at least one edge");
  if (is_complete_multipartite(g).is_complete_multipartite)
    throw ArgumentError("averaged parameters are not defined for complete multipartite graphs");

  AvgParams a;
  a.v = v;
  a.triangles = triangles;
  const Rational vr(static_cast<long long>(v));
  a.kbar = Rational(static_cast<long long>(2 * edges), static_cast<long long>(v));
  a.lambdabar = Rational(static_cast<long long>(3 * triangles), static_cast<long long>(edges));
  if (!(vr > a.kbar + 1)) throw ConsistencyError("v > kbar + 1 violated");
  if (!(vr + a.lambdabar - 2 * a.kbar > 0)) throw ConsistencyError("v + lambdabar - 2 kbar > 0 violated");
  a.mubar = a.kbar * (a.kbar - a.lambdabar - 1) / (vr - a.kbar - 1);
  a.kbar_r = rational_to_double(a.kbar);
  a.lambdabar_r = rational_to_double(a.lambdabar);
  a.mubar_r = rational_to_double(a.mubar);

  const double qa = rational_to_double(vr + a.lambdabar - 2 * a.kbar);
  const double qb = rational_to_double(a.kbar * a.kbar - a.kbar + a.lambdabar - a.lambdabar * vr);
  const double qc = -rational_to_double(a.kbar * (vr - a.kbar - 1));
  a.sbar = detail::positive_root(qa, qb, qc);
  const double vd = static_cast<double>(v);
  a.ebar = nexus_e(vd, a.kbar_r, a.sbar);
  a.theta_m = -a.kbar_r / a.sbar;
  a.theta_M = (a.kbar_r - a.mubar_r) * a.sbar / a.kbar_r;

  if (!(a.sbar > 0) || detail::relative_residual(qa, qb, qc, a.sbar) > 1e-9)
    throw ConsistencyError("sbar failed its quadratic residual check");
  if (!(a.theta_m < 0 && a.theta_M > 0)) throw ConsistencyError("theta_m < 0 < theta_M violated");
  if (!detail::close(a.theta_M, a.sbar - a.ebar, 1e-9)) throw ConsistencyError("theta_M = sbar - ebar violated");
  if (!detail::close(a.theta_m + a.theta_M, a.lambdabar_r - a.mubar_r, 1e-9) ||
      !detail::close(a.theta_m * a.theta_M, a.mubar_r - a.kbar_r, 1e-9))
    throw ConsistencyError("(X - theta_m)(X - theta_M) = X^2 + (mubar - lambdabar) X + (mubar - kbar) violated");
  return a;
}

inline AvgParams avg_params(const Graph& g) { return avg_params(g, triangle_count(g)); }

enum class MuTrichotomy { kGreater, kEqual, kLess };

inline const char* to_string(MuTrichotomy t) {
  switch (t) {
    case MuTrichotomy::kGreater: return "kGreater";
    case MuTrichotomy::kEqual: return "kEqual";
    case MuTrichotomy::kLess: return "kLess";
  }
  return "?";
}

/// Compares kbar with theta_M; the answer must match the sign of mubar.
inline MuTrichotomy mu_trichotomy(const AvgParams& a) {
  const int mu_sign = a.mubar > 0 ? 1 : (a.mubar < 0 ? -1 : 0);
  const double diff = a.kbar_r - a.theta_M;
  const int k_sign = detail::close(a.kbar_r, a.theta_M, 1e-9) ? 0 : (diff > 0 ? 1 : -1);
  if (mu_sign != k_sign) throw ConsistencyError("sign of kbar - theta_M disagrees with sign of mubar");
  return mu_sign > 0 ? MuTrichotomy::kGreater : (mu_sign == 0 ? MuTrichotomy::kEqual : MuTrichotomy::kLess);
}

}  // namespace neumaier
