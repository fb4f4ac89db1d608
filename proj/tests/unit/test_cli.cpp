// Runs the command line tool as a subprocess and checks output and exit codes.

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(RANDNILP_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("randnilp_cli_" + name);
  std::ofstream(path) << content;
  return path;
}

std::string strip_last_column(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + "\n";
  return out;
}

}  // namespace

TEST(Cli, KCoefficient) {
  EXPECT_EQ(run("kcoeff 10 01").out, "-1\n");
  EXPECT_EQ(run("kcoeff 1110 1101").out, "-3\n");
  EXPECT_EQ(run("kcoeff 11 11").out, "0\n");
  EXPECT_EQ(run("kcoeff 10 01").code, 0);
  EXPECT_EQ(run("kcoeff 1x 01").code, 2);
  EXPECT_EQ(run("kcoeff 10 011").code, 2);
  EXPECT_EQ(run("kcoeff 10").code, 2);
}

TEST(Cli, BadInput) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("nosuchcommand").code, 2);
  EXPECT_EQ(run("fullstep --n 1 --ell 3").code, 2);
  EXPECT_EQ(run("sweep --config /nonexistent.json").code, 2);
  EXPECT_EQ(run("kcoeff 10 01 --format xml").code, 2);
}

TEST(Cli, FullStepExitCodes) {
  const auto e = temp_file("e12.json", R"({"n":3,"entries":[[1,2,"1"]]})");
  const auto f = temp_file("e23.json", R"({"n":3,"entries":[[2,3,"1"]]})");
  const auto full = run("fullstep --json --matrix-json " + e.string() + " " + f.string());
  EXPECT_EQ(full.code, 0);
  const auto j = nlohmann::json::parse(full.out);
  EXPECT_EQ(j["verdict"], "full");
  EXPECT_NE(j["certificate"], "0");

  EXPECT_EQ(run("fullstep --matrix-json " + e.string() + " " + e.string()).code, 1);

  const auto big = temp_file("big.json", R"({"n":20,"entries":[[3,4,"1"],[7,8,"-2"]]})");
  EXPECT_EQ(run("fullstep --exhaustive-cap 8 --random-words 4 --matrix-json " + big.string() + " " + big.string()).code,
            3);
  const auto bad = temp_file("bad.json", R"({"n":3,"entries":[[2,1,"1"]]})");
  EXPECT_EQ(run("fullstep --matrix-json " + bad.string() + " " + e.string()).code, 2);
}

TEST(Cli, FullStepFromSeed) {
  const auto a = run("fullstep --n 20 --ell 8000 --seed 3 --json");
  const auto b = run("fullstep --n 20 --ell 8000 --seed 3 --json");
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, b.code);
  EXPECT_TRUE(a.code == 0 || a.code == 1 || a.code == 3);
}

TEST(Cli, CommutatorModesAgree) {
  const auto oracle = nlohmann::json::parse(run("commutator --word 10110 --n 8 --ell 50 --seed 4 --mode oracle").out);
  const auto band = nlohmann::json::parse(run("commutator --word 10110 --n 8 --ell 50 --seed 4 --mode band").out);
  const auto poly = nlohmann::json::parse(run("commutator --word 10110 --n 8 --ell 50 --seed 4 --mode poly").out);
  EXPECT_EQ(oracle["band"], band["band"]);
  EXPECT_EQ(band["band"], poly["band"]);
  EXPECT_EQ(band["band"].size(), 3u);
  EXPECT_TRUE(oracle.contains("matrix"));
  EXPECT_EQ(run("commutator --word 10110 --n 5 --ell 50").code, 2);
}

TEST(Cli, GenAndStep) {
  const auto walk = nlohmann::json::parse(run("gen --n 6 --ell 9 --seed 2 --format json").out);
  EXPECT_EQ(walk["n"], 6);
  EXPECT_EQ(walk["steps"].size(), 9u);
  const auto row = run("gen --n 6 --ell 9 --seed 2");
  EXPECT_EQ(row.out.rfind("6,9,2,", 0), 0u);
  const auto e = temp_file("e12s.json", R"({"n":3,"entries":[[1,2,"1"]]})");
  const auto f = temp_file("e23s.json", R"({"n":3,"entries":[[2,3,"1"]]})");
  EXPECT_EQ(run("step --matrix-json " + e.string() + " " + f.string()).out, "2\n");
}

TEST(Cli, Verify) {
  const auto r = run("verify --max-length 7");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("OK"), std::string::npos);
}

TEST(Cli, SweepDeterministic) {
  const std::string args = "sweep --n-grid 6,8 --c 1/4,4 --trials 10 --seed 9";
  const auto a = run(args);
  const auto b = run(args + " --threads 2");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(strip_last_column(a.out), strip_last_column(b.out));
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 5);
  const auto j = nlohmann::json::parse(run(args + " --format json").out);
  EXPECT_EQ(j.size(), 4u);

  const auto cfg = temp_file("cfg.json", R"({"n_grid":[6],"ell":{"values":[36]},"trials":8,"seed":5})");
  const auto out = std::filesystem::temp_directory_path() / "randnilp_cli_sweep.csv";
  EXPECT_EQ(run("sweep --config " + cfg.string() + " --out " + out.string()).code, 0);
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header.rfind("n,ell,trials,full_count", 0), 0u);
}

TEST(Cli, Stats) {
  const auto counts = run("stats --kind counts --n 6");
  EXPECT_EQ(counts.code, 0);
  EXPECT_NE(counts.out.find("6,2,4,4,1,2,2,1,1"), std::string::npos);
  EXPECT_EQ(run("stats --kind lemma4 --n 20 --ell 4000 --trials 500").code, 0);
  EXPECT_EQ(run("stats --kind lemma4 --n 20 --ell 4000 --positions 1").code, 2);
  EXPECT_EQ(run("stats --kind lemma5 --n 20 --ell 4000 --trials 200").code, 0);
  EXPECT_EQ(run("stats --kind marginal --n 10 --ell 400 --trials 200").code, 0);
  EXPECT_EQ(run("stats --kind abelian --n 50 --ell 3 --trials 50").code, 0);
  EXPECT_EQ(run("stats --kind bogus").code, 2);
}
