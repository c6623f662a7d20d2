#include <gtest/gtest.h>

#include <fstream>
#include <string>
#include <vector>

#include "cli_commands.hpp"

using namespace edgeideal;
using edgeideal::cli::CommandResult;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + "/" + name;
  std::ofstream(path) << text;
  return path;
}

CommandResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "edgeideal");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return cli::run(static_cast<int>(argv.size()), argv.data());
}

const char* kExampleSpec = R"({"base": {"n": 2, "edges": [[0, 1]]}, "cliques": [[2, 3], [1, 2]]})";
const char* kC5 = R"({"n": 5, "edges": [[0, 1], [1, 2], [2, 3], [3, 4], [4, 0]]})";

}  // namespace

TEST(Cli, ConstructTransformOfExample) {
  const auto r = run({"construct", "transform", write_temp("spec.json", kExampleSpec)});
  ASSERT_EQ(r.code, 0) << r.err;
  const Graph g = graph_from_json(json::parse(r.out));
  EXPECT_EQ(g.vertex_count(), 14);
  EXPECT_EQ(g.label(3), "z_{1_1,0}");
  const auto c = run({"construct", "multi-clique-corona", write_temp("spec.json", kExampleSpec)});
  EXPECT_EQ(graph_from_json(json::parse(c.out)).vertex_count(), 10);
}

TEST(Cli, ConstructCoronaOfPoint) {
  const auto r = run({"construct", "corona", write_temp("k1.json", R"({"base": {"n": 1, "edges": []}, "attached": [{"n": 1, "edges": []}]})")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(is_isomorphic(graph_from_json(json::parse(r.out)), complete_graph(2)));
}

TEST(Cli, ConstructMultiWhiskerAndRootedProduct) {
  const auto w = run({"construct", "multi-whisker", write_temp("w.json", R"({"base": {"n": 2, "edges": [[0, 1]]}, "whiskers": [2, 1]})")});
  ASSERT_EQ(w.code, 0) << w.err;
  EXPECT_EQ(graph_from_json(json::parse(w.out)).vertex_count(), 5);
  const auto rp = run({"construct", "rooted-product",
                       write_temp("rp.json", R"({"base": {"n": 2, "edges": []}, "attached": [{"n": 2, "edges": [[0, 1]]},
                         {"n": 1, "edges": []}], "roots": [0, 0], "star_condition": true})")});
  ASSERT_EQ(rp.code, 0) << rp.err;
  EXPECT_EQ(graph_from_json(json::parse(rp.out)).edge_count(), 1);
}

TEST(Cli, StarConditionViolationExitsThree) {
  const auto r = run({"construct", "rooted-product",
                      write_temp("bad_rp.json", R"({"base": {"n": 2, "edges": []}, "attached": [{"n": 1, "edges": []},
                        {"n": 1, "edges": []}], "roots": [0, 0], "star_condition": true})")});
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, ParseErrorsExitTwo) {
  EXPECT_EQ(run({"props", write_temp("bad.json", "{not json")}).code, 2);
  EXPECT_EQ(run({"props", write_temp("bad2.json", R"({"n": 2})")}).code, 2);
  EXPECT_EQ(run({"props", ::testing::TempDir() + "/missing.json"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"construct", "nonsense", "x.json"}).code, 2);
  const auto r = run({"props", write_temp("bad3.json", "[")});
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, ValidationErrorsExitThree) {
  EXPECT_EQ(run({"--field", "gf:4", "props", write_temp("c5.json", kC5)}).code, 3);
  EXPECT_EQ(run({"props", write_temp("c5.json", kC5), "--vertex", "9"}).code, 3);
  EXPECT_EQ(run({"verify", "unknown_claim"}).code, 3);
  EXPECT_EQ(run({"construct", "transform", write_temp("badspec.json", R"({"base": {"n": 2, "edges": []}, "cliques": [[1]]})")}).code, 3);
}

TEST(Cli, PropsOfC5) {
  const auto r = run({"props", write_temp("c5.json", kC5), "--vertex", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["cm"], true);
  EXPECT_EQ(j["serre_index"], 2);
  EXPECT_EQ(j["vd"], true);
  EXPECT_EQ(j["alpha"], 2);
  EXPECT_EQ(j["m"], 2);
  EXPECT_EQ(j["im"], 1);
  EXPECT_EQ(j["at_vertex"]["two_pure"], true);
  EXPECT_EQ(j["homology"]["1"], 1);
}

TEST(Cli, PropsOfWitnessAndPath) {
  const auto w = run({"--field", "q", "props", write_temp("g1.json", to_json(u_shed_witness_1()).dump())});
  ASSERT_EQ(w.code, 0) << w.err;
  const json j = json::parse(w.out);
  EXPECT_EQ(j["cm"], true);
  EXPECT_NE(j["U"], j["Shed"]);
  const auto p = run({"props", write_temp("p3.json", R"({"n": 3, "edges": [[0, 1], [1, 2]]})")});
  const json k = json::parse(p.out);
  EXPECT_EQ(k["well_covered"], false);
  EXPECT_EQ(k["seq_cm"], true);
}

TEST(Cli, PropsBudgetExitsFour) {
  const auto r = run({"--max-vertices", "4", "props", write_temp("c5.json", kC5)});
  EXPECT_EQ(r.code, 4);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, BettiOfTriangle) {
  const auto r = run({"betti", write_temp("k3.json", R"({"n": 3, "edges": [[0, 1], [1, 2], [0, 2]]})")});
  ASSERT_EQ(r.code, 0) << r.err;
  const BettiTable t = betti_from_json(json::parse(r.out));
  EXPECT_EQ(t.at(1, 2), 3);
  EXPECT_EQ(t.at(2, 3), 2);
  const auto pretty = run({"betti", write_temp("k3.json", R"({"n": 3, "edges": [[0, 1], [1, 2], [0, 2]]})"), "--format", "pretty"});
  EXPECT_NE(pretty.out.find("total:"), std::string::npos);
  EXPECT_EQ(run({"betti", write_temp("c5.json", kC5), "--budget-subsets", "16"}).code, 4);
}

TEST(Cli, CensusMaxFour) {
  const auto r = run({"census", "--max-n", "4", "--fields", "gf2"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::size_t lines = 0;
  for (char c : r.out) lines += c == '\n';
  EXPECT_EQ(lines, 13u);
  EXPECT_EQ(run({"census", "--max-n", "4", "--fields", "gf2"}).out, r.out);
  EXPECT_EQ(run({"census", "--max-n", "8"}).code, 4);
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run({"verify", "thm_betti_transfer"}).code, 0);
  EXPECT_EQ(run({"verify", "cor_reg"}).code, 1);
  EXPECT_EQ(run({"verify", "prop_wellcovered", "--budget", "3"}).code, 5);
  const auto list = run({"verify", "--list"});
  EXPECT_NE(list.out.find("thm_mcc_vd"), std::string::npos);
}

TEST(Cli, JsonOutputRoundTrips) {
  const auto r = run({"construct", "transform", write_temp("spec.json", kExampleSpec)});
  const json j = json::parse(r.out);
  EXPECT_EQ(to_json(graph_from_json(j)), j);
}
