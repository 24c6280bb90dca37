#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "qpnet/cli.hpp"
#include "qpnet/network.hpp"
#include "qpnet/oracle.hpp"

namespace qpnet {
namespace {

using testing::data_path;

struct CliRun {
  int status;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  return testing::read_text(data_path("../golden/" + name));
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "qpnet_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

TEST(CliGolden, ShowTwoPaths) {
  CliRun r = run({"show", "--net", data_path("two_paths.json"), "--node", "F", "--expanded"});
  EXPECT_EQ(r.status, cli::kOk) << r.err;
  EXPECT_EQ(r.out, golden("show_two_paths_F.txt"));
}

TEST(CliGolden, InferConditional) {
  CliRun r = run({"infer", "--net", data_path("two_paths.json"), "--val",
               data_path("half.json"), "--query", "B | F", "--symbolic"});
  EXPECT_EQ(r.status, cli::kOk) << r.err;
  EXPECT_EQ(r.out, golden("infer_two_paths_B_given_F.txt"));
}

TEST(CliGolden, InferOracle) {
  CliRun r = run({"infer", "--net", data_path("two_paths.json"), "--val",
               data_path("half.json"), "--query", "F", "--engine", "oracle"});
  EXPECT_EQ(r.status, cli::kOk) << r.err;
  EXPECT_EQ(r.out, golden("infer_oracle_two_paths_F.txt"));
}

TEST(CliGolden, Sat) {
  CliRun r = run({"sat", data_path("six_clauses.cnf")});
  EXPECT_EQ(r.status, cli::kSat) << r.err;
  EXPECT_EQ(r.out, golden("sat_six_clauses.txt"));
}

TEST(Cli, ShowVariants) {
  CliRun e = run({"show", "--net", data_path("sibling_and.json"), "--node", "E", "--expanded"});
  EXPECT_EQ(e.status, cli::kOk);
  EXPECT_NE(e.out.find("expanded: pqrs\n"), std::string::npos) << e.out;
  CliRun root = run({"show", "--net", data_path("two_paths.json"), "--node", "A"});
  EXPECT_EQ(root.out, "raw: 1\ndecomposed: 1\n");
  CliRun cond = run({"show", "--net", data_path("two_paths.json"), "--query", "B | F"});
  EXPECT_EQ(cond.out,
            "raw: p*(1-(1-p*q*r*s)*(1-q*t*u))\n"
            "numerator: p[1-(1-rs)(1-tu)]\n"
            "denominator: 1-(1-prs)(1-tu)\n");
  EXPECT_EQ(run({"show", "--net", data_path("two_paths.json"), "--node", "Z"}).status,
            cli::kInputError);
  EXPECT_EQ(run({"show", "--net", data_path("two_paths.json")}).status, cli::kInputError);
}

TEST(Cli, InferJsonAndPulse) {
  CliRun j = run({"infer", "--net", data_path("two_paths.json"), "--val",
               data_path("half.json"), "--query", "B | F", "--format", "json"});
  EXPECT_EQ(j.status, cli::kOk);
  EXPECT_EQ(j.out.rfind("{\"query\":\"B | F\",\"engine\":\"exact\",\"value\":0.6363636", 0), 0u)
      << j.out;
  CliRun p = run({"infer", "--net", data_path("two_paths.json"), "--val",
               data_path("half.json"), "--query", "F", "--engine", "pulse",
               "--periods", "2000", "--repeats", "3"});
  EXPECT_EQ(p.status, cli::kOk) << p.err;
  EXPECT_NE(p.out.find("stddev: "), std::string::npos);
  EXPECT_NE(p.out.find("exact: 0.171875"), std::string::npos);
  double est = std::stod(p.out);
  EXPECT_NEAR(est, 0.171875, 0.05);
}

TEST(Cli, InferBoost) {
  CliRun r = run({"infer", "--net", data_path("two_paths.json"), "--val",
               data_path("half.json"), "--query", "B | F", "--boost", "p"});
  EXPECT_EQ(r.status, cli::kOk) << r.err;
  EXPECT_EQ(r.out, "0.636364\n");
}

TEST(Cli, EngineKnobsAreChecked) {
  std::vector<std::string> base{"infer", "--net", data_path("two_paths.json"), "--val",
                                data_path("half.json"), "--query", "F"};
  auto with = [&](std::vector<std::string> extra) {
    auto args = base;
    args.insert(args.end(), extra.begin(), extra.end());
    return run(args).status;
  };
  EXPECT_EQ(with({"--periods", "10"}), cli::kInputError);
  EXPECT_EQ(with({"--engine", "oracle", "--symbolic"}), cli::kInputError);
  EXPECT_EQ(with({"--engine", "pulse", "--boost", "p"}), cli::kInputError);
  EXPECT_EQ(with({"--engine", "magic"}), cli::kInputError);
}

TEST(Cli, ErrorStatuses) {
  CliRun zero = run({"infer", "--net", data_path("two_paths.json"), "--val",
                  data_path("zero_evidence.json"), "--query", "B | F"});
  EXPECT_EQ(zero.status, cli::kZeroEvidence);
  EXPECT_NE(zero.err.find("zero-probability evidence"), std::string::npos);
  EXPECT_EQ(run({"infer", "--net", data_path("two_paths.json"), "--val",
                 data_path("zero_evidence.json"), "--query", "B | F", "--engine",
                 "pulse", "--periods", "100"})
                .status,
            cli::kZeroEvidence);
  EXPECT_EQ(run({"infer", "--net", data_path("missing.json"), "--val",
                 data_path("half.json"), "--query", "F"})
                .status,
            cli::kInputError);
  EXPECT_EQ(run({"show", "--net", data_path("two_paths.json"), "--node", "F", "--expanded",
                 "--budget", "1"})
                .status,
            cli::kBudgetError);
  EXPECT_EQ(run({"sat", data_path("bad.cnf")}).status, cli::kInputError);
  EXPECT_EQ(run({"sat", data_path("six_clauses_unsat.cnf")}).status, cli::kUnsat);
  EXPECT_EQ(run({}).status, cli::kInputError);
}

TEST(Cli, InvalidNetworkIsAValidationError) {
  auto path = scratch("cyclic.json");
  {
    std::ofstream f(path);
    f << R"({"nodes": [{"id": "A", "kind": "or", "links": [{"from": "B", "label": "p"}]},
                      {"id": "B", "kind": "or", "links": [{"from": "A", "label": "q"}]}]})";
  }
  EXPECT_EQ(run({"show", "--net", path.string(), "--node", "A"}).status,
            cli::kValidationError);
}

TEST(Cli, SatCount) {
  CliRun r = run({"sat", "--count", data_path("six_clauses.cnf")});
  EXPECT_EQ(r.status, cli::kOk);
  EXPECT_EQ(r.out, "c models 2\n");
  EXPECT_EQ(run({"sat", data_path("six_clauses_unsat.cnf")}).out, "s UNSATISFIABLE\n");
}

TEST(Cli, ConvertThenInfer) {
  auto net = scratch("wet.json"), val = scratch("wet_val.json");
  CliRun r = run({"convert", "--cpt", data_path("two_parent.cpt.json"), "--out-net",
               net.string(), "--out-val", val.string()});
  ASSERT_EQ(r.status, cli::kOk) << r.err;
  EXPECT_EQ(r.out, "nodes 9\nsymbols 6\n");
  Network converted = read_network(testing::read_text(net.string()));
  int ands = 0;
  for (const NodeSpec& n : converted.nodes()) ands += n.kind == NodeKind::And;
  EXPECT_EQ(ands, 4);
  EXPECT_EQ(converted.node("Wet").kind, NodeKind::Or);

  CptNetwork cpt = read_cpt(testing::read_text(data_path("two_parent.cpt.json")));
  double wet = cpt_joint_probability(cpt, {{"Wet", true}});
  double rain_wet = cpt_joint_probability(cpt, {{"Wet", true}, {"Rain", true}});
  CliRun p = run({"infer", "--net", net.string(), "--val", val.string(), "--query", "Rain | Wet",
               "--format", "json"});
  ASSERT_EQ(p.status, cli::kOk) << p.err;
  auto pos = p.out.find("\"value\":");
  EXPECT_NEAR(std::stod(p.out.substr(pos + 8)), rain_wet / wet, 1e-12);

  CliRun det = run({"convert", "--cpt", data_path("deterministic_or.cpt.json"), "--out-net",
                 net.string(), "--out-val", val.string()});
  EXPECT_NE(det.out.find("symbols 0\n"), std::string::npos);
  EXPECT_EQ(run({"convert", "--cpt", data_path("bad_table.cpt.json"), "--out-net",
                 net.string(), "--out-val", val.string()})
                .status,
            cli::kInputError);
}

// The installed binary reports the same statuses to the shell.
TEST(CliProcess, ExitStatuses) {
  auto status = [](const std::string& args) {
    std::string cmd = std::string(QPNET_CLI) + " " + args + " >/dev/null 2>&1";
    int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status("sat " + data_path("six_clauses.cnf")), 10);
  EXPECT_EQ(status("sat " + data_path("six_clauses_unsat.cnf")), 20);
  EXPECT_EQ(status("sat " + data_path("bad.cnf")), 1);
  EXPECT_EQ(status("infer --net " + data_path("two_paths.json") + " --val " +
                   data_path("zero_evidence.json") + " --query 'B | F'"),
            4);
  EXPECT_EQ(status("show --net " + data_path("two_paths.json") + " --node F"), 0);
}

}  // namespace
}  // namespace qpnet
