#pragma once

// Multi-threaded verification sweeps over an exhaustive enumeration or a
// supplied corpus. Workers pull fixed-size chunks; each chunk keeps its own
// counters and the chunks are merged in index order, so the aggregate does
// not depend on scheduling.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "neumaier/characterize.hpp"
#include "neumaier/enumerate.hpp"
#include "neumaier/graph6.hpp"

namespace neumaier {

struct SweepOptions {
  std::size_t workers = 1;
  double cluster_tolerance = kDefaultClusterTolerance;
  std::set<std::string> theorems{theorem::all().begin(), theorem::all().end()};
  // A StrictlyNeumaier verdict counts as a failure. None exist on few vertices.
  bool strict_is_failure = true;
  std::size_t max_witnesses = 20;
  std::size_t chunk_size = 4096;
};

struct TheoremTally {
  std::uint64_t holds = 0, violated = 0, skipped = 0, equality = 0;

  TheoremTally& operator+=(const TheoremTally& o) {
    holds += o.holds;
    violated += o.violated;
    skipped += o.skipped;
    equality += o.equality;
    return *this;
  }
  friend bool operator==(const TheoremTally&, const TheoremTally&) = default;
};

struct SweepWitness {
  std::uint64_t index = 0;
  std::string graph6;
  std::string reason;
  friend bool operator==(const SweepWitness&, const SweepWitness&) = default;
};

struct SweepReport {
  std::uint64_t graphs = 0;
  std::map<Taxonomy, std::uint64_t> buckets;
  std::map<std::string, TheoremTally> theorems;
  std::uint64_t neumaier_four_distinct = 0;
  std::uint64_t strictly_neumaier = 0;
  std::uint64_t cluster_retuned = 0;  // default tolerance disagreed with the exact distinct count
  std::uint64_t internal_errors = 0;
  std::uint64_t failures = 0;  // graphs with at least one failed assertion
  std::vector<SweepWitness> witnesses;

  bool ok() const { return failures == 0; }

  void merge(const SweepReport& o, std::size_t max_witnesses) {
    graphs += o.graphs;
    for (const auto& [t, c] : o.buckets) buckets[t] += c;
    for (const auto& [id, t] : o.theorems) theorems[id] += t;
    neumaier_four_distinct += o.neumaier_four_distinct;
    strictly_neumaier += o.strictly_neumaier;
    cluster_retuned += o.cluster_retuned;
    internal_errors += o.internal_errors;
    failures += o.failures;
    for (const auto& w : o.witnesses)
      if (witnesses.size() < max_witnesses) witnesses.push_back(w);
  }
};

namespace detail {

inline void sweep_one(const Graph& g, std::uint64_t index, const SweepOptions& opts, SweepReport& rep) {
  ++rep.graphs;
  std::vector<std::string> failures;
  try {
    ClassifyOptions copts;
    copts.cluster_tolerance = opts.cluster_tolerance;
    copts.theorems = opts.theorems;
    const ClassReport r = classify(g, copts);
    ++rep.buckets[r.taxonomy];
    if (r.spectrum.tolerance != opts.cluster_tolerance && g.order() > 0) ++rep.cluster_retuned;
    for (const auto& [id, out] : r.theorems) {
      auto& t = rep.theorems[id];
      switch (out.verdict) {
        case Verdict::Holds: ++t.holds; break;
        case Verdict::Violated:
          ++t.violated;
          failures.push_back(id + ": " + out.detail);
          break;
        case Verdict::Skipped: ++t.skipped; break;
      }
      if (out.equality_case) ++t.equality;
    }
    if (r.is_neumaier() && r.spectrum.distinct_count == 4) {
      ++rep.neumaier_four_distinct;
      failures.push_back("Neumaier graph with four distinct eigenvalues");
    }
    if (r.taxonomy == Taxonomy::StrictlyNeumaier) {
      ++rep.strictly_neumaier;
      if (opts.strict_is_failure) failures.push_back("strictly Neumaier graph");
    }
  } catch (const std::exception& err) {
    ++rep.internal_errors;
    failures.push_back(std::string("internal: ") + err.what());
  }
  if (failures.empty()) return;
  ++rep.failures;
  if (rep.witnesses.size() < opts.max_witnesses) {
    std::string reason;
    for (const auto& f : failures) reason += (reason.empty() ? "" : "; ") + f;
    rep.witnesses.push_back({index, g.order() <= kGraph6MaxOrder ? encode_graph6(g) : std::string{}, reason});
  }
}

// Runs `work(chunk, report)` for chunk = 0..chunks-1 on `workers` threads and
// merges the per-chunk reports in chunk order.
template <class Work>
SweepReport run_chunks(std::uint64_t chunks, const SweepOptions& opts, Work&& work) {
  if (opts.workers < 1) throw ArgumentError("worker count must be at least 1");
  std::vector<SweepReport> parts(chunks);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr fatal;
  std::atomic<bool> stop{false};
  auto body = [&] {
    for (;;) {
      if (stop.load()) return;
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      try {
        work(c, parts[c]);
      } catch (...) {
        stop = true;
        fatal = std::current_exception();
        return;
      }
    }
  };
  const std::size_t n = std::min<std::uint64_t>(opts.workers, std::max<std::uint64_t>(chunks, 1));
  if (n <= 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < n; ++i) pool.emplace_back(body);
    for (auto& t : pool) t.join();
  }
  if (fatal) std::rethrow_exception(fatal);
  SweepReport total;
  for (const auto& p : parts) total.merge(p, opts.max_witnesses);
  return total;
}

}  // namespace detail

/// Classifies every labeled graph on n vertices (n <= 8) and aggregates the
/// theorem outcomes. Witness index = the graph's edge mask.
inline SweepReport sweep_enumerated(std::size_t n, const SweepOptions& opts = {},
                                    EnumerationOptions enum_opts = {}) {
  const std::uint64_t total = labeled_graph_count(n);
  const std::uint64_t chunk = std::max<std::size_t>(opts.chunk_size, 1);
  const std::uint64_t chunks = (total + chunk - 1) / chunk;
  return detail::run_chunks(chunks, opts, [&](std::uint64_t c, SweepReport& rep) {
    enumerate_graph_range(
        n, c * chunk, (c + 1) * chunk,
        [&](std::uint64_t mask, const Graph& g) { detail::sweep_one(g, mask, opts, rep); }, enum_opts);
  });
}

/// Same aggregation over an explicit corpus. Witness index = position.
inline SweepReport sweep_corpus(const std::vector<Graph>& graphs, const SweepOptions& opts = {}) {
  const std::uint64_t chunk = std::max<std::size_t>(std::min<std::size_t>(opts.chunk_size, 16), 1);
  const std::uint64_t chunks = (graphs.size() + chunk - 1) / chunk;
  return detail::run_chunks(chunks, opts, [&](std::uint64_t c, SweepReport& rep) {
    const std::uint64_t hi = std::min<std::uint64_t>((c + 1) * chunk, graphs.size());
    for (std::uint64_t i = c * chunk; i < hi; ++i) detail::sweep_one(graphs[i], i, opts, rep);
  });
}

}  // namespace neumaier
