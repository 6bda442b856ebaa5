#pragma once

// Taxonomy classification and per-theorem certificates for a single graph.
//
// analyze() gathers the structural and spectral data once; each check_*()
// turns one characterization theorem into a pass/fail certificate on that
// data. classify() runs both.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "neumaier/cliques.hpp"
#include "neumaier/errors.hpp"
#include "neumaier/exact.hpp"
#include "neumaier/graph.hpp"
#include "neumaier/regularity.hpp"
#include "neumaier/spectra.hpp"

namespace neumaier {

// Absolute tolerance for eigenvalue equality decisions.
inline constexpr double kEigenEqualityTolerance = 1e-8;

enum class Taxonomy {
  NotRegular,
  RegularNotEdgeRegular,
  EdgeRegularNoRegularClique,
  NeumaierSRG,
  StrictlyNeumaier,
  CompleteExcluded,
};

inline const char* to_string(Taxonomy t) {
  switch (t) {
    case Taxonomy::NotRegular: return "NotRegular";
    case Taxonomy::RegularNotEdgeRegular: return "RegularNotEdgeRegular";
    case Taxonomy::EdgeRegularNoRegularClique: return "EdgeRegularNoRegularClique";
    case Taxonomy::NeumaierSRG: return "NeumaierSRG";
    case Taxonomy::StrictlyNeumaier: return "StrictlyNeumaier";
    case Taxonomy::CompleteExcluded: return "CompleteExcluded";
  }
  return "?";
}

inline constexpr Taxonomy kAllTaxonomies[] = {
    Taxonomy::NotRegular,  Taxonomy::RegularNotEdgeRegular, Taxonomy::EdgeRegularNoRegularClique,
    Taxonomy::NeumaierSRG, Taxonomy::StrictlyNeumaier,      Taxonomy::CompleteExcluded};

enum class Verdict { Holds, Violated, Skipped };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

struct TheoremOutcome {
  Verdict verdict = Verdict::Skipped;
  bool equality_case = false;
  std::string detail;
  std::optional<std::string> witness;

  static TheoremOutcome skipped(std::string why) { return {Verdict::Skipped, false, std::move(why), {}}; }
  static TheoremOutcome holds(bool equality, std::string d) { return {Verdict::Holds, equality, std::move(d), {}}; }
  static TheoremOutcome violated(std::string d, std::optional<std::string> w = {}) {
    return {Verdict::Violated, false, std::move(d), std::move(w)};
  }
};

// Theorem identifiers accepted by classify() and the sweep.
namespace theorem {
inline constexpr const char* kSpectralIdentities = "spectral-identities";
inline constexpr const char* kAvgIdentities = "avg-identities";
inline constexpr const char* kMultipartiteGap = "multipartite-gap";
inline constexpr const char* kCliqueBound = "clique-bound";
inline constexpr const char* kSandwich = "sandwich";
inline constexpr const char* kHoffman = "hoffman";
inline constexpr const char* kDelsarte = "delsarte";
inline constexpr const char* kWalkRegular = "walk-regular";
inline constexpr const char* kMinusTwo = "minus-two";
inline constexpr const char* kExtension = "extension";
inline constexpr const char* kFourEigenvalues = "four-eigenvalues";
inline constexpr const char* kEqualityTransfer = "equality-transfer";
inline constexpr const char* kQuotientEigenvalues = "quotient-eigenvalues";

inline const std::vector<std::string>& all() {
  static const std::vector<std::string> ids = {
      kSpectralIdentities, kAvgIdentities, kMultipartiteGap,           kCliqueBound,     kSandwich,
      kHoffman,            kDelsarte,      kWalkRegular,    kMinusTwo,        kExtension,
      kFourEigenvalues,    kEqualityTransfer, kQuotientEigenvalues};
  return ids;
}
}  // namespace theorem

struct ClassifyOptions {
  double cluster_tolerance = kDefaultClusterTolerance;
  std::set<std::string> theorems{theorem::all().begin(), theorem::all().end()};
};

struct ClassReport {
  Taxonomy taxonomy = Taxonomy::NotRegular;
  std::size_t order = 0;
  std::size_t edges = 0;
  std::size_t triangles = 0;
  bool connected = true;
  bool regular = false;
  std::optional<std::size_t> diameter;
  DegreeProfile degrees;
  MultipartiteStructure multipartite;
  Spectrum spectrum;

  std::optional<ErgParams> erg;
  std::optional<SrgParams> srg;
  bool primitive_srg = false;
  std::optional<double> s;  // clique bound (part count - 1 for complete multipartite)
  std::optional<double> e;  // nexus
  std::optional<AvgParams> avg;
  std::optional<std::string> avg_error;  // why averaged parameters were rejected, if they were

  // Populated for edge-regular graphs with edges.
  std::vector<VertexSet> maximal_cliques;
  std::size_t clique_number = 0;
  std::vector<CliqueReport> regular_cliques;

  std::optional<bool> one_walk_regular;  // nullopt unless connected and regular
  std::optional<ExtensionReport> extension;

  std::map<std::string, TheoremOutcome> theorems;

  bool is_neumaier() const {
    return taxonomy == Taxonomy::NeumaierSRG || taxonomy == Taxonomy::StrictlyNeumaier;
  }
};

namespace detail {

inline std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

inline std::string vertex_list(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t v) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  });
  return out + "}";
}

template <class Int>
bool walk_counts_depend_on_distance(const Graph& g, std::size_t powers) {
  const std::size_t n = g.order();
  std::vector<Int> p(n * n, Int(0)), next(n * n);
  for (std::size_t i = 0; i < n; ++i) p[i * n + i] = Int(1);
  for (std::size_t l = 0; l < powers; ++l) {
    const Int diag = p[0];
    std::optional<Int> adj;
    for (std::size_t u = 0; u < n; ++u) {
      if (!(p[u * n + u] == diag)) return false;
      bool ok = true;
      g.neighbors(u).for_each([&](std::size_t v) {
        if (!adj) adj = p[u * n + v];
        ok = ok && p[u * n + v] == *adj;
      });
      if (!ok) return false;
    }
    if (l + 1 == powers) break;
    for (std::size_t u = 0; u < n; ++u) {
      Int* row = &next[u * n];
      for (std::size_t j = 0; j < n; ++j) row[j] = Int(0);
      g.neighbors(u).for_each([&](std::size_t w) {
        const Int* src = &p[w * n];
        for (std::size_t j = 0; j < n; ++j) row[j] += src[j];
      });
    }
    p.swap(next);
  }
  return true;
}

}  // namespace detail

/// 1-walk-regularity: for l = 0 .. d-1 (d = number of distinct eigenvalues,
/// so these powers span the adjacency algebra) the entries of A^l are
/// constant on the diagonal and constant over adjacent pairs. Exact integer
/// walk counts. nullopt when the graph is disconnected or irregular.
inline std::optional<bool> is_one_walk_regular(const Graph& g, std::size_t distinct_count) {
  if (g.order() == 0 || !is_connected(g) || !is_regular(g)) return std::nullopt;
  return with_overflow_fallback(
      [&]<class Int>() { return detail::walk_counts_depend_on_distance<Int>(g, distinct_count); });
}

inline std::optional<bool> is_one_walk_regular(const Graph& g) {
  if (g.order() == 0 || !is_connected(g) || !is_regular(g)) return std::nullopt;
  return is_one_walk_regular(g, distinct_eigenvalue_count(charpoly(g)));
}

/// Structural and spectral data for one graph, with the taxonomy verdict but
/// no theorem outcomes.
inline ClassReport analyze(const Graph& g, double cluster_tolerance = kDefaultClusterTolerance) {
  ClassReport r;
  r.order = g.order();
  r.edges = g.edge_count();
  r.degrees = degree_profile(g);
  r.regular = is_regular(g);
  r.connected = is_connected(g);
  r.diameter = diameter(g);
  r.triangles = triangle_count(g);
  r.spectrum = spectrum(g, cluster_tolerance);
  r.multipartite = is_complete_multipartite(g);

  if (r.order >= 3 && r.edges > 0 && !r.multipartite.is_complete_multipartite) {
    try {
      r.avg = avg_params(g, r.triangles);
    } catch (const ConsistencyError& err) {
      r.avg_error = err.what();
    }
  }
  if (r.regular && r.connected) r.one_walk_regular = is_one_walk_regular(g, r.spectrum.distinct_count);

  if (g.is_complete()) {
    r.taxonomy = Taxonomy::CompleteExcluded;
    return r;
  }
  if (!r.regular) {
    r.taxonomy = Taxonomy::NotRegular;
    return r;
  }
  if (r.edges == 0) {
    // Vacuously edge-regular; no clique has a positive nexus.
    r.taxonomy = Taxonomy::EdgeRegularNoRegularClique;
    return r;
  }
  r.erg = edge_regular_params(g);
  if (!r.erg) {
    r.taxonomy = Taxonomy::RegularNotEdgeRegular;
    return r;
  }
  r.srg = srg_params(g);
  r.primitive_srg = r.srg && is_primitive_srg(g, *r.srg);

  if (r.multipartite.is_complete_multipartite) {
    r.s = static_cast<double>(r.multipartite.parts.size()) - 1;
    r.e = nexus_e(static_cast<double>(r.erg->v), static_cast<double>(r.erg->k), *r.s);
  } else {
    r.s = clique_bound_s(*r.erg);
    r.e = nexus_e(static_cast<double>(r.erg->v), static_cast<double>(r.erg->k), *r.s);
  }

  r.maximal_cliques = neumaier::maximal_cliques(g);
  for (const auto& c : r.maximal_cliques) {
    r.clique_number = std::max(r.clique_number, c.size());
    auto rep = describe_clique(g, c);
    if (rep.is_regular) r.regular_cliques.push_back(std::move(rep));
  }

  if (r.regular_cliques.empty()) {
    r.taxonomy = Taxonomy::EdgeRegularNoRegularClique;
    return r;
  }
  r.taxonomy = r.srg ? Taxonomy::NeumaierSRG : Taxonomy::StrictlyNeumaier;

  for (const auto& c : r.regular_cliques) {
    if (std::abs(static_cast<double>(c.order) - (*r.s + 1)) > 1e-9 ||
        std::abs(static_cast<double>(*c.nexus) - *r.e) > 1e-9)
      throw ConsistencyError("regular clique " + detail::vertex_list(c.members) + " does not have order s+1 = " +
                             detail::fmt(*r.s + 1) + " and nexus e = " + detail::fmt(*r.e));
  }
  // For a Neumaier graph s and e are integers; snap them.
  r.s = static_cast<double>(r.regular_cliques.front().order - 1);
  r.e = static_cast<double>(*r.regular_cliques.front().nexus);
  r.extension = extension_hypothesis_holds(g, static_cast<std::size_t>(*r.e), static_cast<std::size_t>(*r.s));
  return r;
}

// ---- individual certificates --------------------------------------------

/// Trace identities of the spectrum, largest eigenvalue versus average
/// degree, and the few-eigenvalue classification.
inline TheoremOutcome check_spectral_identities(const Graph& g, const ClassReport& r) {
  if (r.order == 0) return TheoremOutcome::skipped("empty graph");
  const auto& sp = r.spectrum;
  const auto& cp = sp.charpoly;
  const std::size_t n = r.order;
  if (n >= 2 && !cp.coefficient_of_power(n - 1).is_zero()) return TheoremOutcome::violated("trace is nonzero");
  if (n >= 2 && cp.coefficient_of_power(n - 2) != -BigInt(r.edges))
    return TheoremOutcome::violated("x^(n-2) coefficient is not -|E|");
  if (n >= 3 && cp.coefficient_of_power(n - 3) != -2 * BigInt(r.triangles))
    return TheoremOutcome::violated("x^(n-3) coefficient is not -2 * #triangles");

  const double v = static_cast<double>(n);
  const double kbar = r.degrees.average_real();
  const double lambdabar = r.edges ? 3.0 * static_cast<double>(r.triangles) / static_cast<double>(r.edges) : 0.0;
  if (std::abs(sp.power_sum(1)) > 1e-6 * v) return TheoremOutcome::violated("sum of eigenvalues is not 0");
  if (std::abs(sp.power_sum(2) - v * kbar) > 1e-6 * v)
    return TheoremOutcome::violated("sum of squared eigenvalues is not v*kbar");
  if (std::abs(sp.power_sum(3) - v * kbar * lambdabar) > 1e-6 * v * (kbar + 1))
    return TheoremOutcome::violated("sum of cubed eigenvalues is not v*kbar*lambdabar");

  bool equality = false;
  if (r.edges > 0) {
    if (sp.max() < kbar - 1e-9) return TheoremOutcome::violated("largest eigenvalue below average degree");
    equality = std::abs(sp.max() - kbar) <= 1e-9;
    if (equality != r.regular)
      return TheoremOutcome::violated("largest eigenvalue equals average degree iff regular fails: theta_max=" +
                                      detail::fmt(sp.max()) + " kbar=" + detail::fmt(kbar));
  }
  try {
    const auto cls = classify_by_eigenvalue_count(g, sp);
    if (cls.kind == EigenvalueCountClass::SRGCandidate && !r.srg)
      return TheoremOutcome::violated("connected regular graph with three eigenvalues is not strongly regular");
  } catch (const ConsistencyError& err) {
    return TheoremOutcome::violated(err.what());
  }
  return TheoremOutcome::holds(equality, "distinct=" + std::to_string(sp.distinct_count));
}

/// Averaged-parameter identities and the mu trichotomy.
inline TheoremOutcome check_avg_identities(const ClassReport& r) {
  if (r.avg_error) return TheoremOutcome::violated(*r.avg_error);
  if (!r.avg) return TheoremOutcome::skipped("averaged parameters need v >= 3, edges, not complete multipartite");
  try {
    const auto t = mu_trichotomy(*r.avg);
    if (r.regular && t == MuTrichotomy::kLess) return TheoremOutcome::violated("regular graph with kbar < lambdabar + 1");
    return TheoremOutcome::holds(t == MuTrichotomy::kEqual, to_string(t));
  } catch (const ConsistencyError& err) {
    return TheoremOutcome::violated(err.what());
  }
}

/// v + lambda - 2k >= 0 with equality iff complete multipartite.
inline TheoremOutcome check_multipartite_gap(const ClassReport& r) {
  if (!r.erg) return TheoremOutcome::skipped("not edge-regular with edges");
  const long long slack = static_cast<long long>(r.erg->v + r.erg->lambda) - 2 * static_cast<long long>(r.erg->k);
  if (slack < 0) return TheoremOutcome::violated("v + lambda - 2k < 0");
  if ((slack == 0) != r.multipartite.is_complete_multipartite)
    return TheoremOutcome::violated("v + lambda - 2k = " + std::to_string(slack) +
                                    " disagrees with complete multipartite detection");
  return TheoremOutcome::holds(slack == 0, "v+lambda-2k=" + std::to_string(slack));
}

/// Every clique has order at most s+1, attained exactly by the regular ones.
inline TheoremOutcome check_clique_bound(const ClassReport& r) {
  if (!r.erg) return TheoremOutcome::skipped("not edge-regular with edges");
  const double s = *r.s;
  if (r.multipartite.is_complete_multipartite) {
    std::size_t transversals = 1;
    for (auto sz : r.multipartite.part_sizes) transversals *= sz;
    if (r.regular_cliques.size() != transversals)
      return TheoremOutcome::violated("regular cliques are not exactly the transversals");
    for (const auto& c : r.regular_cliques)
      if (static_cast<double>(c.order) != s + 1 || static_cast<double>(*c.nexus) != s)
        return TheoremOutcome::violated("transversal clique without order s+1 and nexus s");
    return TheoremOutcome::holds(true, "complete multipartite, s+1=" + detail::fmt(s + 1));
  }
  if (std::abs(*r.e) <= 1e-9) {
    // Disjoint equal cliques: the components attain s+1 = k+1 with outside count 0.
    for (const auto& c : r.maximal_cliques)
      if (std::abs(static_cast<double>(c.size()) - (s + 1)) > 1e-9)
        return TheoremOutcome::violated("nexus 0 but a maximal clique is not of order s+1", detail::vertex_list(c));
    return TheoremOutcome::holds(true, "disjoint equal cliques, nexus 0, s+1=" + detail::fmt(s + 1));
  }
  const double bound = std::floor(s + 1e-9) + 1;
  if (static_cast<double>(r.clique_number) > bound)
    return TheoremOutcome::violated("clique of order " + std::to_string(r.clique_number) + " exceeds s+1=" +
                                    detail::fmt(s + 1));
  bool attained = false;
  for (const auto& c : r.maximal_cliques) {
    const bool at_bound = std::abs(static_cast<double>(c.size()) - (s + 1)) <= 1e-9;
    const bool regular = std::any_of(r.regular_cliques.begin(), r.regular_cliques.end(),
                                     [&](const CliqueReport& x) { return x.members == c; });
    attained = attained || at_bound;
    if (at_bound != regular)
      return TheoremOutcome::violated("clique order s+1 iff regular fails", detail::vertex_list(c));
  }
  return TheoremOutcome::holds(attained, "omega=" + std::to_string(r.clique_number) + " s+1=" + detail::fmt(s + 1));
}

/// theta_min <= theta_m and theta_Max2 >= theta_M for connected regular
/// graphs that are not complete multipartite, with equality iff strongly
/// regular. Non-equality must be strict by more than the equality tolerance.
inline TheoremOutcome check_sandwich(const ClassReport& r) {
  if (!r.connected || !r.regular || r.edges == 0 || r.multipartite.is_complete_multipartite)
    return TheoremOutcome::skipped("needs a connected regular graph that is not complete multipartite");
  if (!r.avg) return TheoremOutcome::violated(r.avg_error.value_or("averaged parameters unavailable"));
  const auto named = named_eigenvalues(r.spectrum);
  const double tm = r.avg->theta_m, tM = r.avg->theta_M;
  const bool eq_min = std::abs(named.min - tm) <= kEigenEqualityTolerance;
  const bool eq_max = std::abs(named.second_max - tM) <= kEigenEqualityTolerance;
  const std::string d = "theta_min=" + detail::fmt(named.min) + " theta_m=" + detail::fmt(tm) +
                        " theta_Max2=" + detail::fmt(named.second_max) + " theta_M=" + detail::fmt(tM);
  if (r.srg) {
    if (eq_min && eq_max) return TheoremOutcome::holds(true, d);
    return TheoremOutcome::violated("strongly regular but bounds not attained: " + d);
  }
  if (eq_min || eq_max) return TheoremOutcome::violated("bound attained by a non-strongly-regular graph: " + d);
  if (!(named.min < tm) || !(named.second_max > tM)) return TheoremOutcome::violated("inequality fails: " + d);
  return TheoremOutcome::holds(false, d);
}

struct CliqueBoundValue {
  double value = 0;
  std::optional<Rational> exact;  // when the eigenvalue involved is an integer
};

/// Ratio bound for cocliques of the complement, i.e. cliques of g:
/// v / (1 + (v-k-1)/(theta_Max2 + 1)). Needs a regular graph with two or more
/// distinct eigenvalues.
inline CliqueBoundValue hoffman_clique_bound(const ClassReport& r) {
  if (!r.regular || r.spectrum.distinct_count < 2) throw ArgumentError("Hoffman bound needs a regular graph with edges");
  const double v = static_cast<double>(r.order), k = static_cast<double>(r.degrees.max);
  const double t = named_eigenvalues(r.spectrum).second_max;
  CliqueBoundValue out;
  out.value = v / (1 + (v - k - 1) / (t + 1));
  if (const auto ti = exact_integer_eigenvalue(r.spectrum.charpoly, t)) {
    const long long vv = static_cast<long long>(r.order), kk = static_cast<long long>(r.degrees.max);
    out.exact = Rational(vv * (*ti + 1)) / Rational(*ti + vv - kk);
  }
  return out;
}

/// Delsarte clique bound 1 - k/theta_min.
inline CliqueBoundValue delsarte_clique_bound(const ClassReport& r) {
  if (!r.regular || r.spectrum.distinct_count < 2) throw ArgumentError("Delsarte bound needs a regular graph with edges");
  const double k = static_cast<double>(r.degrees.max);
  const double t = r.spectrum.min();
  CliqueBoundValue out;
  out.value = 1 - k / t;
  if (const auto ti = exact_integer_eigenvalue(r.spectrum.charpoly, t))
    out.exact = Rational(*ti - static_cast<long long>(r.degrees.max)) / Rational(*ti);
  return out;
}

namespace detail {
inline bool bound_attained(std::size_t omega, const CliqueBoundValue& b) {
  if (b.exact) return Rational(static_cast<long long>(omega)) == *b.exact;
  return std::abs(static_cast<double>(omega) - b.value) <= kEigenEqualityTolerance;
}
inline std::string bound_string(const CliqueBoundValue& b) {
  return b.exact ? rational_string(*b.exact) : fmt(b.value);
}
}  // namespace detail

/// For connected non-complete edge-regular graphs: some clique attains the
/// complement's Hoffman coclique bound iff the graph is a strongly regular
/// Neumaier graph.
inline TheoremOutcome check_hoffman(const ClassReport& r) {
  if (!r.erg || !r.connected) return TheoremOutcome::skipped("needs a connected non-complete edge-regular graph");
  const auto b = hoffman_clique_bound(r);
  if (static_cast<double>(r.clique_number) > b.value + kEigenEqualityTolerance)
    return TheoremOutcome::violated("clique number exceeds the ratio bound " + detail::bound_string(b));
  const bool attained = detail::bound_attained(r.clique_number, b);
  const bool srg_neumaier = r.taxonomy == Taxonomy::NeumaierSRG;
  const std::string d = "bound=" + detail::bound_string(b) + " omega=" + std::to_string(r.clique_number);
  if (attained != srg_neumaier)
    return TheoremOutcome::violated((attained ? "bound attained but not a strongly regular Neumaier graph: "
                                              : "strongly regular Neumaier graph but bound not attained: ") + d);
  return TheoremOutcome::holds(attained, d);
}

/// For Neumaier graphs: the Delsarte clique bound holds iff strongly regular,
/// and for strongly regular ones it equals s+1.
inline TheoremOutcome check_delsarte(const ClassReport& r) {
  if (!r.is_neumaier()) return TheoremOutcome::skipped("not a Neumaier graph");
  const auto b = delsarte_clique_bound(r);
  const bool within = static_cast<double>(r.clique_number) <= b.value + kEigenEqualityTolerance;
  const std::string d = "bound=" + detail::bound_string(b) + " omega=" + std::to_string(r.clique_number);
  if (within != r.srg.has_value())
    return TheoremOutcome::violated((within ? "Delsarte bound holds for a strictly Neumaier graph: "
                                            : "Delsarte bound fails for a strongly regular Neumaier graph: ") + d);
  if (r.srg && std::abs(b.value - (*r.s + 1)) > kEigenEqualityTolerance)
    return TheoremOutcome::violated("Delsarte bound differs from s+1: " + d);
  return TheoremOutcome::holds(r.srg.has_value(), d);
}

/// A 1-walk-regular graph with a regular clique is strongly regular.
inline TheoremOutcome check_walk_regular(const ClassReport& r) {
  if (!r.one_walk_regular) return TheoremOutcome::skipped("needs a connected regular graph");
  if (r.taxonomy == Taxonomy::CompleteExcluded) return TheoremOutcome::skipped("complete graph");
  if (!*r.one_walk_regular) return TheoremOutcome::holds(false, "not 1-walk-regular (vacuous)");
  if (r.edges > 0 && !r.erg) return TheoremOutcome::violated("1-walk-regular but not edge-regular");
  if (r.regular_cliques.empty()) return TheoremOutcome::holds(false, "no regular clique (vacuous)");
  if (r.taxonomy != Taxonomy::NeumaierSRG)
    return TheoremOutcome::violated("1-walk-regular graph with a regular clique is not strongly regular");
  return TheoremOutcome::holds(true, "1-walk-regular with a regular clique, strongly regular");
}

/// A Neumaier graph with smallest eigenvalue -2 (or larger) is strongly regular.
inline TheoremOutcome check_minus_two(const ClassReport& r) {
  if (!r.is_neumaier()) return TheoremOutcome::skipped("not a Neumaier graph");
  const double tmin = r.spectrum.min();
  if (tmin < -2 - kEigenEqualityTolerance) return TheoremOutcome::holds(false, "theta_min=" + detail::fmt(tmin) + " (vacuous)");
  if (!r.srg) return TheoremOutcome::violated("Neumaier graph with theta_min >= -2 is not strongly regular");
  return TheoremOutcome::holds(true, "theta_min=" + detail::fmt(tmin));
}

/// If every (e+1)-clique lies in an (s+1)-clique, the graph is strongly
/// regular; the intermediate consequences are checked too.
inline TheoremOutcome check_extension(const ClassReport& r) {
  if (!r.is_neumaier() || !r.extension) return TheoremOutcome::skipped("not a Neumaier graph");
  const auto& x = *r.extension;
  if (!x.holds)
    return TheoremOutcome::holds(false, "hypothesis fails at " + detail::vertex_list(*x.witness) + " (vacuous)");
  if (!x.unique_extension) return TheoremOutcome::violated("an (e+1)-clique lies in two (s+1)-cliques");
  if (!x.every_clique_extends) return TheoremOutcome::violated("a maximal clique is not an (s+1)-clique");
  if (!r.diameter || *r.diameter != 2) return TheoremOutcome::violated("diameter is not 2");
  if (!x.per_edge_constant) return TheoremOutcome::violated("(s+1)-cliques through an edge not constant");
  if (!x.per_vertex_constant) return TheoremOutcome::violated("(s+1)-cliques through a vertex not constant");
  if (!r.srg) return TheoremOutcome::violated("extension hypothesis holds but graph is not strongly regular");
  return TheoremOutcome::holds(true, std::to_string(x.top_clique_count) + " (s+1)-cliques");
}

/// No Neumaier graph has exactly four distinct eigenvalues.
inline TheoremOutcome check_four_eigenvalues(const ClassReport& r) {
  if (!r.is_neumaier()) return TheoremOutcome::skipped("not a Neumaier graph");
  const std::size_t d = r.spectrum.distinct_count;
  if (d == 4) return TheoremOutcome::violated("Neumaier graph with exactly four distinct eigenvalues");
  return TheoremOutcome::holds(false, "distinct=" + std::to_string(d));
}

/// theta_Max2 = s - e iff strongly regular; strongly regular Neumaier graphs
/// have spectrum {k, s-e, -k/s}.
inline TheoremOutcome check_equality_transfer(const ClassReport& r) {
  if (!r.is_neumaier()) return TheoremOutcome::skipped("not a Neumaier graph");
  const double s = *r.s, e = *r.e, k = static_cast<double>(r.erg->k);
  const auto named = named_eigenvalues(r.spectrum);
  const bool eq = std::abs(named.second_max - (s - e)) <= kEigenEqualityTolerance;
  if (eq != r.srg.has_value())
    return TheoremOutcome::violated("theta_Max2 = s-e iff strongly regular fails: theta_Max2=" +
                                    detail::fmt(named.second_max) + " s-e=" + detail::fmt(s - e));
  if (r.srg) {
    const double expected[3] = {k, s - e, -k / s};
    if (r.spectrum.distinct_count != 3) return TheoremOutcome::violated("strongly regular but not three eigenvalues");
    for (std::size_t i = 0; i < 3; ++i)
      if (std::abs(r.spectrum.eigs[i].value - expected[i]) > kEigenEqualityTolerance)
        return TheoremOutcome::violated("spectrum differs from {k, s-e, -k/s}");
  }
  return TheoremOutcome::holds(eq, "theta_Max2=" + detail::fmt(named.second_max) + " s-e=" + detail::fmt(s - e));
}

/// Each regular clique C gives an equitable partition {C, V\C} whose quotient
/// [[s, k-s], [e, k-e]] has eigenvalues k and s-e, both in the spectrum; and a
/// maximal clique is regular iff that partition is equitable with e > 0.
inline TheoremOutcome check_quotient_eigenvalues(const Graph& g, const ClassReport& r) {
  if (!r.erg || r.maximal_cliques.empty()) return TheoremOutcome::skipped("not edge-regular with edges");
  const std::size_t k = r.erg->k;
  for (const auto& c : r.maximal_cliques) {
    if (c == g.vertices()) continue;
    const auto eq = is_equitable_bipartition(g, c);
    const bool regular = std::any_of(r.regular_cliques.begin(), r.regular_cliques.end(),
                                     [&](const CliqueReport& x) { return x.members == c; });
    if (regular != (eq.equitable && eq.quotient[1][0] > 0))
      return TheoremOutcome::violated("regular clique iff equitable with positive nexus fails", detail::vertex_list(c));
    if (!regular) continue;
    const std::size_t s = c.size() - 1, e = eq.quotient[1][0];
    if (eq.quotient[0][0] != s || eq.quotient[0][1] != k - s || eq.quotient[1][1] != k - e)
      return TheoremOutcome::violated("quotient matrix is not [[s,k-s],[e,k-e]]", detail::vertex_list(c));
    const double se = static_cast<double>(s) - static_cast<double>(e);
    if (std::abs(eq.eigenvalues.first - static_cast<double>(k)) > 1e-12 || std::abs(eq.eigenvalues.second - se) > 1e-12)
      return TheoremOutcome::violated("quotient eigenvalues are not {k, s-e}", detail::vertex_list(c));
    if (!r.spectrum.contains(static_cast<double>(k), kEigenEqualityTolerance) ||
        !r.spectrum.contains(se, kEigenEqualityTolerance))
      return TheoremOutcome::violated("quotient eigenvalue missing from the spectrum", detail::vertex_list(c));
  }
  return TheoremOutcome::holds(!r.regular_cliques.empty(), std::to_string(r.regular_cliques.size()) + " regular cliques");
}

/// Full pipeline: analyze() then every selected certificate.
inline ClassReport classify(const Graph& g, const ClassifyOptions& opts = {}) {
  ClassReport r = analyze(g, opts.cluster_tolerance);
  auto run = [&](const char* id, auto&& f) {
    if (!opts.theorems.count(id)) return;
    try {
      r.theorems[id] = f();
    } catch (const ConsistencyError& err) {
      r.theorems[id] = TheoremOutcome::violated(err.what());
    }
  };
  run(theorem::kSpectralIdentities, [&] { return check_spectral_identities(g, r); });
  run(theorem::kAvgIdentities, [&] { return check_avg_identities(r); });
  run(theorem::kMultipartiteGap, [&] { return check_multipartite_gap(r); });
  run(theorem::kCliqueBound, [&] { return check_clique_bound(r); });
  run(theorem::kSandwich, [&] { return check_sandwich(r); });
  run(theorem::kHoffman, [&] { return check_hoffman(r); });
  run(theorem::kDelsarte, [&] { return check_delsarte(r); });
  run(theorem::kWalkRegular, [&] { return check_walk_regular(r); });
  run(theorem::kMinusTwo, [&] { return check_minus_two(r); });
  run(theorem::kExtension, [&] { return check_extension(r); });
  run(theorem::kFourEigenvalues, [&] { return check_four_eigenvalues(r); });
  run(theorem::kEqualityTransfer, [&] { return check_equality_transfer(r); });
  run(theorem::kQuotientEigenvalues, [&] { return check_quotient_eigenvalues(g, r); });
  return r;
}

// Single-theorem entry points.
inline TheoremOutcome verify_eigenvalue_sandwich(const Graph& g) { return check_sandwich(analyze(g)); }
inline TheoremOutcome verify_hoffman_equivalence(const Graph& g) { return check_hoffman(analyze(g)); }
inline TheoremOutcome verify_delsarte_equivalence(const Graph& g) { return check_delsarte(analyze(g)); }
inline TheoremOutcome verify_walk_regular_theorem(const Graph& g) { return check_walk_regular(analyze(g)); }
inline TheoremOutcome verify_minus_two_corollary(const Graph& g) { return check_minus_two(analyze(g)); }

}  // namespace neumaier
