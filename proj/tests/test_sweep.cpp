#include <gtest/gtest.h>

#include "neumaier/generators.hpp"
#include "neumaier/sweep.hpp"
#include "oracles.hpp"

using namespace neumaier;

TEST(Sweep, FiveVertexGraphs) {
  const auto rep = sweep_enumerated(5);
  EXPECT_EQ(rep.graphs, 1024u);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.neumaier_four_distinct, 0u);
  EXPECT_EQ(rep.strictly_neumaier, 0u);
  std::uint64_t total = 0;
  for (const auto& [t, c] : rep.buckets) total += c;
  EXPECT_EQ(total, rep.graphs);
  EXPECT_EQ(rep.buckets.at(Taxonomy::CompleteExcluded), 1u);
}

TEST(Sweep, SixVertexGraphs) {
  const auto rep = sweep_enumerated(6);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.graphs, 32768u);
  EXPECT_EQ(rep.strictly_neumaier, 0u);
  EXPECT_GT(rep.buckets.at(Taxonomy::NeumaierSRG), 0u);
  for (const auto& [id, t] : rep.theorems) EXPECT_EQ(t.violated, 0u) << id;
}

TEST(Sweep, DeterministicAcrossWorkerCounts) {
  SweepOptions one, four;
  one.workers = 1;
  four.workers = 4;
  one.chunk_size = four.chunk_size = 97;
  const auto a = sweep_enumerated(5, one);
  const auto b = sweep_enumerated(5, four);
  EXPECT_EQ(a.graphs, b.graphs);
  EXPECT_EQ(a.buckets, b.buckets);
  EXPECT_EQ(a.theorems, b.theorems);
  EXPECT_EQ(a.witnesses, b.witnesses);
}

TEST(Sweep, FamilyCorpusAllNeumaierSRG) {
  std::vector<Graph> corpus;
  for (std::size_t n = 2; n <= 6; ++n) corpus.push_back(rook_graph(n));
  for (std::size_t n = 4; n <= 8; ++n) corpus.push_back(johnson2_graph(n));
  for (std::size_t p = 2; p <= 4; ++p)
    for (std::size_t m = 2; m <= 4; ++m) corpus.push_back(complete_multipartite(p, m));
  SweepOptions opts;
  opts.workers = 3;
  const auto rep = sweep_corpus(corpus, opts);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.buckets.at(Taxonomy::NeumaierSRG), corpus.size());
}

TEST(Sweep, StrictlyNeumaierIsFlaggedWhenRequested) {
  const std::vector<Graph> corpus = {oracle::strictly_neumaier_16(), petersen_graph()};
  SweepOptions opts;
  opts.strict_is_failure = true;
  const auto flagged = sweep_corpus(corpus, opts);
  EXPECT_FALSE(flagged.ok());
  ASSERT_EQ(flagged.witnesses.size(), 1u);
  EXPECT_EQ(flagged.witnesses[0].index, 0u);
  EXPECT_EQ(flagged.witnesses[0].graph6, oracle::graph6(corpus[0]));
  opts.strict_is_failure = false;
  const auto accepted = sweep_corpus(corpus, opts);
  EXPECT_TRUE(accepted.ok());
  EXPECT_EQ(accepted.strictly_neumaier, 1u);
}

TEST(Sweep, RejectsZeroWorkers) {
  SweepOptions opts;
  opts.workers = 0;
  EXPECT_THROW(sweep_enumerated(3, opts), ArgumentError);
}
