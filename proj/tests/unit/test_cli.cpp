#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "lincomb/cli.hpp"

using namespace lincomb;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "lincomb");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(Cli, ConstructCertificate) {
  const Outcome o = invoke({"construct", "--k", "1", "--n", "21"});
  EXPECT_EQ(o.code, 0);
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_NEAR(j["value"].get<double>(), 21.5692, 1e-4);
  EXPECT_EQ(j["witness_graph6"].get<std::string>().front(), 'T');
  const auto header = nlohmann::json::parse(o.err.substr(0, o.err.find('\n')));
  EXPECT_EQ(header["command"], "construct");
  EXPECT_EQ(header["seed"], 0);
  EXPECT_TRUE(header.contains("tolerances"));
  EXPECT_TRUE(header.contains("version"));
}

TEST(Cli, SpectrumText) {
  const std::string k3 = temp_file("cli_k3.edgelist", "3\n0 1\n1 2\n0 2\n");
  const Outcome o = invoke({"spectrum", "--in", k3, "--output", "text"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "[2, -1, -1]\n");
  EXPECT_EQ(format_spectrum_text({1.4142135623730951, -0.0, -1e-17}), "[1.414213562, 0, -1e-17]");
}

TEST(Cli, VerifySummary) {
  const Outcome o = invoke({"verify", "--suite", "interlacing", "--seed", "7", "--trials", "10"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("PASS 20/20"), std::string::npos);
  const Outcome again = invoke({"verify", "--suite", "interlacing", "--seed", "7", "--trials", "10"});
  EXPECT_EQ(o.out, again.out);
  EXPECT_EQ(o.err, again.err);
}

TEST(Cli, SearchAndPhi) {
  const Outcome s = invoke({"search", "--n", "5", "--preset", "mu1+mu2"});
  EXPECT_EQ(s.code, 0);
  EXPECT_NEAR(nlohmann::json::parse(s.out)["value"].get<double>(), 3.6813306436, 1e-9);

  const Outcome p = invoke({"phi", "--n-min", "2", "--n-max", "5", "--preset", "mu1", "--output", "csv"});
  EXPECT_EQ(p.code, 0);
  EXPECT_EQ(p.out.substr(0, p.out.find('\n')), "n,value,phi,method,seed,witness_graph6");
  const auto row = p.out.find("\n4,");
  ASSERT_NE(row, std::string::npos);
  EXPECT_NEAR(std::stod(p.out.substr(row + 3)), 3.0, 1e-12);
  EXPECT_NE(p.out.find(",exhaustive,0,C~\n", row), std::string::npos);

  const Outcome inl = invoke({"search", "--n", "4", "--alpha", "1", "--beta=-1"});
  EXPECT_EQ(inl.code, 0);
  // max mu1 - mun on 4 vertices, numpy brute force over all 64 graphs
  EXPECT_NEAR(nlohmann::json::parse(inl.out)["value"].get<double>(), std::sqrt(17.0), 1e-9);
}

TEST(Cli, FormFile) {
  const std::string f = temp_file("cli_form.txt", "# Nosal\nalpha = 1\ngamma = 1\n");
  const Outcome o = invoke({"search", "--n", "5", "--form-file", f});
  EXPECT_EQ(o.code, 0);
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["form"]["gamma"][0], 1.0);
}

TEST(Cli, Amplify) {
  const std::string k3 = temp_file("cli_amp.g6", "Bw\n");
  const Outcome o = invoke({"amplify", "--in", k3, "--N", "7", "--preset", "mu1"});
  EXPECT_EQ(o.code, 0);
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["t"], 2);
  EXPECT_TRUE(j["passed"].get<bool>());
}

TEST(Cli, UsageErrorsExitTwo) {
  const std::string bad = temp_file("cli_bad.edgelist", "3\n0 1\n2 2\n");
  const Outcome parse = invoke({"spectrum", "--in", bad});
  EXPECT_EQ(parse.code, 2);
  EXPECT_NE(parse.err.find("line 3"), std::string::npos);

  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"spectrum"}).code, 2);
  EXPECT_EQ(invoke({"construct", "--k", "1", "--n", "30", "--solver-budget", "25"}).code, 2);
  EXPECT_EQ(invoke({"search", "--n", "8", "--method", "exhaustive"}).code, 2);
  EXPECT_EQ(invoke({"search", "--n", "4", "--preset", "mu1", "--alpha", "1"}).code, 2);
  EXPECT_EQ(invoke({"search", "--n", "4", "--family", "planar"}).code, 2);
  EXPECT_EQ(invoke({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(invoke({"verify", "--output", "yaml"}).code, 2);
  EXPECT_EQ(invoke({"search", "--n", "4", "--exhaustive-cap", "0"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, ArtifactsDirectory) {
  const std::string dir = ::testing::TempDir() + "lincomb_artifacts";
  std::filesystem::remove_all(dir);
  const Outcome o = invoke({"phi", "--n-min", "3", "--n-max", "4", "--out", dir});
  EXPECT_EQ(o.code, 0);
  for (const char* f : {"header.json", "phi.csv", "phi.jsonl"}) {
    EXPECT_TRUE(std::filesystem::exists(std::filesystem::path(dir) / f)) << f;
  }
  std::filesystem::remove_all(dir);
}
