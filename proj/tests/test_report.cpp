#include <gtest/gtest.h>

#include "neumaier/generators.hpp"
#include "neumaier/report.hpp"

using namespace neumaier;

TEST(Report, JsonRecordForRook3) {
  const Graph g = rook_graph(3);
  const Json j = to_json(classify(g), encode_graph6(g));
  EXPECT_EQ(j["taxonomy"], "NeumaierSRG");
  EXPECT_EQ(j["params"]["k"], 4);
  EXPECT_EQ(j["params"]["lambda"], 1);
  EXPECT_EQ(j["params"]["mu"], 2);
  EXPECT_EQ(j["params"]["s"], 2.0);
  EXPECT_EQ(j["params"]["e"], 1.0);
  EXPECT_EQ(j["params"]["kbar"], "4/1");
  EXPECT_EQ(j["spectrum"]["distinct"], 3);
  EXPECT_EQ(j["spectrum"]["charpoly"][0], "1");
  EXPECT_EQ(j["regular_cliques"].size(), 6u);
  EXPECT_EQ(j["theorems"]["hoffman"]["verdict"], "holds");
  EXPECT_EQ(decode_graph6(j["graph6"].get<std::string>()), g);
}

TEST(Report, CsvRow) {
  EXPECT_EQ(csv_header(), "taxonomy,v,k,lambda,s,e,distinct,theta_min,theta_max2");
  EXPECT_EQ(csv_row(classify(rook_graph(3))), "NeumaierSRG,9,4,1,2,1,3,-2,1");
  EXPECT_EQ(csv_row(classify(complete_graph(3))), "CompleteExcluded,3,,,,,2,-1,-1");
}

TEST(Report, HumanAndSweepSerialisation) {
  const std::string text = human_report(classify(petersen_graph()), "IheA@GUAo");
  EXPECT_NE(text.find("EdgeRegularNoRegularClique"), std::string::npos);
  EXPECT_NE(text.find("sandwich"), std::string::npos);
  SweepReport rep = sweep_enumerated(4);
  const Json j = to_json(rep);
  EXPECT_EQ(j["graphs"], 64);
  EXPECT_EQ(j["ok"], true);
  EXPECT_EQ(j["buckets"].size(), 6u);
  EXPECT_NE(human_report(rep).find("theorem"), std::string::npos);
}

TEST(Report, RefutationJson) {
  const Json j = to_json(refute_four_eigenvalues(9, 1, -4, 2));
  EXPECT_EQ(j["v"], 16.0);
  EXPECT_EQ(j["theta1"], -3.0);
  EXPECT_EQ(j["contradiction"], true);
}
