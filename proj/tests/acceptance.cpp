// Acceptance harness: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "eigen_oracle.hpp"
#include "neumaier/neumaier.hpp"
#include "oracles.hpp"

using namespace neumaier;

namespace {

struct Check {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (notes.size() < 8) notes.push_back(what);
  }
};

// Sorted-descending distinct values of the closed-form spectrum must match the
// Eigen spectrum and the library spectrum.
void expect_spectrum(Check& c, const std::string& label, const Graph& g, std::vector<double> expected) {
  std::sort(expected.begin(), expected.end(), std::greater<>());
  const auto oracle_values = oracle::distinct_values(oracle::eigen_eigenvalues(g), 1e-6);
  c.require(oracle_values.size() == expected.size(), label + ": oracle distinct count");
  for (std::size_t i = 0; i < std::min(expected.size(), oracle_values.size()); ++i)
    c.require(std::abs(oracle_values[i] - expected[i]) <= 1e-8, label + ": oracle eigenvalue");
  const Spectrum s = spectrum(g);
  c.require(s.eigs.size() == expected.size(), label + ": library distinct count");
  for (std::size_t i = 0; i < std::min(expected.size(), s.eigs.size()); ++i)
    c.require(std::abs(s.eigs[i].value - expected[i]) <= 1e-8, label + ": library eigenvalue");
}

// theta_min = -k/s and theta_Max2 = s - e as exact rationals.
void expect_exact_extremes(Check& c, const std::string& label, const ClassReport& r) {
  const auto named = named_eigenvalues(r.spectrum);
  const auto tmin = exact_integer_eigenvalue(r.spectrum.charpoly, named.min);
  const auto tmax2 = exact_integer_eigenvalue(r.spectrum.charpoly, named.second_max);
  c.require(tmin && tmax2, label + ": extreme eigenvalues not exact integers");
  if (!tmin || !tmax2 || !r.erg || !r.s || !r.e) return;
  const auto s = static_cast<long long>(std::llround(*r.s));
  const auto e = static_cast<long long>(std::llround(*r.e));
  c.require(Rational(*tmin) == Rational(-static_cast<long long>(r.erg->k)) / Rational(s), label + ": theta_min != -k/s");
  c.require(Rational(*tmax2) == Rational(s - e), label + ": theta_Max2 != s-e");
}

Check criterion_families() {
  Check c;
  auto family = [&](const std::string& label, const Graph& g, double s, double e, std::vector<double> eigs) {
    const auto r = classify(g);
    c.require(r.taxonomy == Taxonomy::NeumaierSRG, label + ": taxonomy " + to_string(r.taxonomy));
    c.require(r.s && *r.s == s, label + ": s");
    c.require(r.e && *r.e == e, label + ": e");
    expect_spectrum(c, label, g, std::move(eigs));
    expect_exact_extremes(c, label, r);
  };
  for (std::size_t n = 2; n <= 6; ++n) {
    const double m = static_cast<double>(n);
    family("Rook(" + std::to_string(n) + ")", rook_graph(n), m - 1, 1, {2 * (m - 1), m - 2, -2});
  }
  for (std::size_t n = 4; n <= 8; ++n) {
    const double m = static_cast<double>(n);
    family("Johnson2(" + std::to_string(n) + ")", johnson2_graph(n), m - 2, 2, {2 * (m - 2), m - 4, -2});
  }
  for (std::size_t p = 2; p <= 4; ++p)
    for (std::size_t m = 2; m <= 4; ++m) {
      const double pd = static_cast<double>(p), md = static_cast<double>(m);
      family("CM(" + std::to_string(p) + "," + std::to_string(m) + ")", complete_multipartite(p, m), pd - 1, pd - 1,
             {(pd - 1) * md, 0, -md});
    }
  return c;
}

struct SweepTotals {
  std::vector<SweepReport> by_order;  // index n, n = 1..7
};

Check criterion_sweep(const SweepTotals& t) {
  Check c;
  for (std::size_t n = 1; n < t.by_order.size(); ++n) {
    const SweepReport& rep = t.by_order[n];
    const std::string tag = "n=" + std::to_string(n);
    c.require(rep.graphs == labeled_graph_count(n), tag + ": graph count");
    c.require(rep.neumaier_four_distinct == 0, tag + ": Neumaier graph with four distinct eigenvalues");
    c.require(rep.strictly_neumaier == 0, tag + ": Neumaier graph that is not strongly regular");
    c.require(rep.internal_errors == 0, tag + ": internal errors");
    for (const char* id : {theorem::kMultipartiteGap, theorem::kSandwich}) {
      const auto it = rep.theorems.find(id);
      c.require(it != rep.theorems.end() && it->second.violated == 0, tag + ": " + id + " violated");
    }
    for (const auto& w : rep.witnesses) c.require(false, tag + " witness " + w.graph6 + ": " + w.reason);
  }
  return c;
}

Check criterion_hoffman_delsarte() {
  Check c;
  std::uint64_t examined = 0, hoffman_held = 0, delsarte_held = 0;
  for (std::size_t n = 2; n <= 6; ++n)
    enumerate_all_graphs(n, [&](const Graph& g) {
      if (g.is_complete() || !is_connected(g) || !oracle::is_edge_regular(g)) return;
      ++examined;
      const ClassReport r = analyze(g);
      const auto h = check_hoffman(r);
      const auto d = check_delsarte(r);
      hoffman_held += h.verdict == Verdict::Holds;
      delsarte_held += d.verdict == Verdict::Holds;
      c.require(h.verdict != Verdict::Violated, "hoffman " + oracle::graph6(g) + ": " + h.detail);
      c.require(d.verdict != Verdict::Violated, "delsarte " + oracle::graph6(g) + ": " + d.detail);
    });
  c.require(examined > 0 && hoffman_held > 0 && delsarte_held > 0, "nothing examined");
  std::printf("    %llu graphs, Hoffman held on %llu, Delsarte held on %llu (others outside its hypotheses)\n",
              static_cast<unsigned long long>(examined), static_cast<unsigned long long>(hoffman_held),
              static_cast<unsigned long long>(delsarte_held));
  auto exact = [](const CliqueBoundValue& b) { return b.exact.value_or(Rational(-1)); };
  c.require(exact(hoffman_clique_bound(analyze(rook_graph(3)))) == Rational(3), "Rook(3) bound != 3");
  c.require(exact(hoffman_clique_bound(analyze(johnson2_graph(5)))) == Rational(4), "Johnson2(5) bound != 4");
  c.require(exact(hoffman_clique_bound(analyze(petersen_graph()))) == Rational(5) / Rational(2), "Petersen bound != 5/2");
  c.require(exact(delsarte_clique_bound(analyze(rook_graph(3)))) == Rational(3), "Rook(3) Delsarte != 3");
  c.require(exact(delsarte_clique_bound(analyze(johnson2_graph(5)))) == Rational(4), "Johnson2(5) Delsarte != 4");
  return c;
}

Check criterion_refuter() {
  Check c;
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> unit(0, 1);
  std::size_t points = 0;
  // 10 x 10 x 10 x 10 lattice over (k, theta/k, e, slack below -k/(theta+e)).
  for (int ik = 0; ik < 10; ++ik)
    for (int it = 0; it < 10; ++it)
      for (int ie = 0; ie < 10; ++ie)
        for (int ig = 0; ig < 10; ++ig) {
          const double k = 1 + ik * 7 + unit(rng);
          const double theta = k * (it + 0.5 * unit(rng)) / 10.0;
          const double e = 1 + ie * 1.5 + unit(rng);
          const double theta2 = -k / (theta + e) - (0.01 + ig * 2.0 + unit(rng));
          ++points;
          try {
            const auto r = refute_four_eigenvalues(k, theta, theta2, e);
            c.require(r.contradiction, "no contradiction at k=" + std::to_string(k));
            c.require(r.vertex_residual < 1e-9, "vertex residual " + std::to_string(r.vertex_residual));
            c.require(r.triangle_residual < 1e-9, "triangle residual " + std::to_string(r.triangle_residual));
            c.require(std::abs(r.theta1 - r.theta1_closed) <= 1e-9 * std::max(1.0, std::abs(r.theta1_closed)),
                      "theta1 disagrees with -k/(e+theta)");
          } catch (const std::exception& err) {
            c.require(false, std::string("precondition rejected a grid point: ") + err.what());
          }
        }
  c.require(points == 10000, "grid size");
  return c;
}

Check criterion_line_graphs() {
  Check c;
  auto neumaier_line = [&](const std::string& label, const LineGraphClassification& cls) {
    const ClassReport& r = cls.line_report;
    c.require(r.srg.has_value(), label + ": line graph not strongly regular");
    c.require(std::abs(r.spectrum.min() + 2) <= 1e-8, label + ": theta_min != -2");
  };
  for (std::size_t n = 2; n <= 5; ++n) {
    const std::string label = "K_{" + std::to_string(n) + "," + std::to_string(n) + "}";
    const auto cls = classify_line_graph_neumaier(complete_bipartite(n, n));
    c.require(cls.has(LineGraphCaseKind::RookCase), label + ": not RookCase");
    neumaier_line(label, cls);
  }
  for (std::size_t n = 4; n <= 7; ++n) {
    const std::string label = "K_" + std::to_string(n);
    const auto cls = classify_line_graph_neumaier(complete_graph(n));
    c.require(cls.has(LineGraphCaseKind::JohnsonCase), label + ": not JohnsonCase");
    neumaier_line(label, cls);
  }
  const auto k4 = classify_line_graph_neumaier(complete_graph(4));
  c.require(k4.has(LineGraphCaseKind::Octahedron), "K_4: Octahedron case missing");
  const auto pet = classify_line_graph_neumaier(petersen_graph());
  c.require(pet.cases.size() == 1 && pet.cases[0].kind == LineGraphCaseKind::NotNeumaier, "Petersen: not NotNeumaier");
  // theta_min = -2 cross-checked by the Eigen oracle on every line graph above.
  for (const Graph& root : {complete_bipartite(5, 5), complete_graph(7), complete_graph(4), petersen_graph()}) {
    const auto values = oracle::eigen_eigenvalues(line_graph(root));
    c.require(std::abs(values.back() + 2) <= 1e-8, "oracle theta_min != -2");
  }
  return c;
}

Check criterion_exactness(const SweepTotals& t) {
  Check c;
  // graph6 round trip over every labeled graph on 7 vertices.
  std::uint64_t round_trips = 0;
  enumerate_all_graphs(7, [&](const Graph& g) {
    const std::string enc = encode_graph6(g);
    if (round_trips % 65536 == 0) c.require(enc == oracle::graph6(g), "encoder disagrees with reference at " + enc);
    c.require(decode_graph6(enc) == g, "round trip failed for " + enc);
    ++round_trips;
  });
  c.require(round_trips == (std::uint64_t{1} << 21), "round-trip count");

  // Cluster count equals the exact distinct count at the default tolerance.
  for (std::size_t n = 1; n < t.by_order.size(); ++n) {
    c.require(t.by_order[n].cluster_retuned == 0,
              "n=" + std::to_string(n) + ": " + std::to_string(t.by_order[n].cluster_retuned) + " graphs needed retuning");
    c.require(t.by_order[n].internal_errors == 0, "n=" + std::to_string(n) + ": cluster/exact mismatch errors");
  }

  // Low-order charpoly coefficients on random graphs.
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 3 + rng() % 22;
    const Graph g = oracle::random_graph(n, 0.1 + 0.8 * static_cast<double>(rng() % 1000) / 1000.0, rng);
    const CharPoly p = charpoly(g);
    c.require(p.coeffs[2] == BigInt(-static_cast<long long>(g.edge_count())), "x^(n-2) coefficient");
    c.require(p.coeffs[3] == BigInt(-2 * static_cast<long long>(oracle::triangles(g))), "x^(n-3) coefficient");
  }
  return c;
}

Check criterion_walk_regular() {
  Check c;
  std::vector<std::pair<std::string, Graph>> corpus;
  for (std::size_t n = 2; n <= 6; ++n) corpus.emplace_back("Rook(" + std::to_string(n) + ")", rook_graph(n));
  for (std::size_t n = 4; n <= 8; ++n) corpus.emplace_back("Johnson2(" + std::to_string(n) + ")", johnson2_graph(n));
  corpus.emplace_back("Petersen", petersen_graph());
  for (std::size_t n = 3; n <= 12; ++n) corpus.emplace_back("C_" + std::to_string(n), cycle_graph(n));
  corpus.emplace_back("octahedron", complete_multipartite(3, 2));
  for (const auto& [label, g] : corpus) {
    const auto r = classify(g);
    c.require(is_one_walk_regular(g) == std::optional<bool>(true), label + ": not 1-walk-regular");
    if (!r.regular_cliques.empty() || r.taxonomy == Taxonomy::CompleteExcluded)
      c.require(r.taxonomy == Taxonomy::CompleteExcluded || r.srg.has_value(), label + ": regular clique but not SRG");
    const auto w = r.theorems.at(theorem::kWalkRegular);
    c.require(w.verdict != Verdict::Violated, label + ": " + w.detail);
  }
  return c;
}

bool report(int id, const char* name, const Check& c, double seconds) {
  std::printf("%s criterion %d: %s (%.1f s)\n", c.ok ? "PASS" : "FAIL", id, name, seconds);
  for (const auto& n : c.notes) std::printf("    %s\n", n.c_str());
  std::fflush(stdout);
  return c.ok;
}

template <class F>
bool timed(int id, const char* name, F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  const Check c = f();
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report(id, name, c, dt);
}

}  // namespace

int main() {
  bool ok = true;
  ok &= timed(1, "family golden suite", criterion_families);

  SweepTotals sweeps;
  SweepOptions opts;
  opts.workers = std::max(1u, std::thread::hardware_concurrency());
  ok &= timed(2, "exhaustive sweep n <= 7", [&] {
    sweeps.by_order.resize(8);
    for (std::size_t n = 1; n <= 7; ++n) sweeps.by_order[n] = sweep_enumerated(n, opts);
    return criterion_sweep(sweeps);
  });
  ok &= timed(3, "Hoffman and Delsarte equivalences", criterion_hoffman_delsarte);
  ok &= timed(4, "four-eigenvalue refuter grid", criterion_refuter);
  ok &= timed(5, "line-graph suite", criterion_line_graphs);
  ok &= timed(6, "exactness infrastructure", [&] { return criterion_exactness(sweeps); });
  ok &= timed(7, "walk-regular corpus", criterion_walk_regular);
  return ok ? 0 : 1;
}
