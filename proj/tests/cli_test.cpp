#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

std::string const cli = TIGHTREP_CLI;
fs::path const samples = TIGHTREP_SAMPLES_DIR;
fs::path const golden = TIGHTREP_GOLDEN_DIR;

std::string slurp(fs::path const& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    auto const* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("tightrep_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path tmp(std::string const& name) const { return dir_ / name; }

  // Runs from the samples directory so paths in arguments stay short.
  Outcome run(std::string const& args) const {
    auto out = tmp("stdout"), err = tmp("stderr");
    std::string cmd = "cd '" + samples.string() + "' && '" + cli + "' " + args + " >'" + out.string() + "' 2>'" +
                      err.string() + "'";
    int raw = std::system(cmd.c_str());
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out), slurp(err)};
  }

  void expect_golden(std::string const& args, std::string const& file, int status = 0) const {
    auto first = run(args);
    EXPECT_EQ(first.status, status) << args << "\n" << first.err;
    EXPECT_EQ(first.out, slurp(golden / file)) << args;
    auto second = run(args);
    EXPECT_EQ(second.out, first.out) << "not byte-stable: " << args;
  }

 private:
  fs::path dir_;
};

}  // namespace

TEST_F(Cli, Validate) {
  expect_golden("validate counterexample.txt", "validate_counterexample.txt");
  for (auto f : {"identity.txt", "diamond.txt"}) EXPECT_EQ(run(std::string("validate ") + f).out, "ok: 3 structures\n");
  EXPECT_EQ(run("validate i2.txt").out, "ok: 4 structures\n");
}

TEST_F(Cli, ValidateErrors) {
  std::ofstream(tmp("empty.txt")).close();
  auto empty = run("validate '" + tmp("empty.txt").string() + "'");
  EXPECT_EQ(empty.status, 1);
  EXPECT_EQ(empty.err, "error: no structures\n");

  std::ofstream(tmp("assoc.txt")) << "@inverse_semigroup S\nelements: 0 a b\nzero: 0\nmul:\n0 0 0\n0 b a\n0 a a\n";
  auto assoc = run("validate '" + tmp("assoc.txt").string() + "'");
  EXPECT_EQ(assoc.status, 1);
  EXPECT_NE(assoc.err.find("not associative at (a,a,b)"), std::string::npos) << assoc.err;

  auto missing = run("validate absent.txt");
  EXPECT_EQ(missing.status, 1);
  EXPECT_EQ(missing.err, "error: cannot open 'absent.txt'\n");
}

TEST_F(Cli, Check) {
  expect_golden("check counterexample.txt --rep pi --view full", "check_counterexample_full.txt");
  expect_golden("check counterexample.txt --rep pi --view tightened", "check_counterexample_tightened.txt");
  expect_golden("check counterexample.txt --rep pi --view generated-ideal", "check_counterexample_generated_ideal.txt");
  expect_golden("check identity.txt --rep id --view full", "check_identity_full.txt");
  expect_golden("check diamond.txt --rep pi --view full", "check_diamond_full.txt");
  expect_golden("check i2.txt --rep phi --view full", "check_i2_phi_full.txt");
}

TEST_F(Cli, CheckErrors) {
  auto unknown = run("check counterexample.txt --rep nope --view full");
  EXPECT_EQ(unknown.status, 1);
  EXPECT_EQ(unknown.err, "error: unknown representation 'nope'\n");

  auto view = run("check counterexample.txt --rep pi --view sideways");
  EXPECT_EQ(view.status, 1);
  EXPECT_NE(view.err.find("sideways"), std::string::npos) << view.err;

  auto not_ctj = run("check diamond.txt --rep pi --view tightened");
  EXPECT_EQ(not_ctj.status, 1);
  EXPECT_NE(not_ctj.out.find("witness_Z: {a, b}"), std::string::npos);
}

TEST_F(Cli, TightenCounterexample) {
  auto out = tmp("tight.txt").string();
  expect_golden("tighten counterexample.txt --rep pi --out '" + out + "'", "tighten_counterexample.txt");
  EXPECT_EQ(slurp(out), slurp(golden / "tighten_counterexample.structure"));
  auto again = run("check '" + out + "' --rep pi_tight --view full");
  EXPECT_EQ(again.status, 0);
  EXPECT_NE(again.out.find("tight: pass"), std::string::npos) << again.out;
}

TEST_F(Cli, TightenIdentityIsUnchanged) {
  auto out = tmp("id.txt").string();
  auto r = run("tighten identity.txt --rep id --out '" + out + "'");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "unit: 12\ncorner: {0, 1, 2, 12}\n");
  auto rename = [](std::string s, std::string const& from, std::string const& to) {
    for (auto p = s.find(from); p != std::string::npos; p = s.find(from, p + to.size())) s.replace(p, from.size(), to);
    return s;
  };
  auto original = slurp(samples / "identity.txt");
  original.erase(0, original.find('@'));
  EXPECT_EQ(rename(rename(slurp(out), "B_tight", "B"), "id_tight", "id"), original);
}

TEST_F(Cli, TightenHomomorphism) {
  auto out = tmp("i2.txt").string();
  expect_golden("tighten i2.txt --rep phi --out '" + out + "'", "tighten_i2_phi.txt");
  EXPECT_EQ(slurp(out), slurp(golden / "tighten_i2_phi.structure"));
}

TEST_F(Cli, TightenRejectsNonCoverToJoin) {
  auto out = tmp("never.txt");
  expect_golden("tighten diamond.txt --rep pi --out '" + out.string() + "'", "tighten_diamond.txt", 1);
  EXPECT_FALSE(fs::exists(out));
  EXPECT_EQ(run("tighten diamond.txt --rep pi --out '" + out.string() + "'").err,
            "error: representation 'pi' is not cover-to-join\n");
}

TEST_F(Cli, Enumerate) {
  expect_golden("enumerate --size 3", "enumerate_3.txt");
  expect_golden("enumerate --size 4 --up-to-iso", "enumerate_4_iso.txt");
  EXPECT_EQ(run("enumerate --size 2").out, "@semilattice L1\nelements: 0 1\nzero: 0\nmeet:\n0 0\n0 1\n# count: 1\n");
  EXPECT_EQ(run("enumerate --size 7").status, 1);
}

TEST_F(Cli, SearchGap) {
  expect_golden("search-gap --max-e 2 --atoms 2", "search_gap_2_2.txt");
  EXPECT_EQ(run("search-gap --max-e 3 --atoms 0").out, "# gaps: 0\n");
  EXPECT_EQ(run("search-gap --max-e 2 --atoms 7").status, 1);
}

TEST_F(Cli, Verify) {
  expect_golden("verify --max-e 3 --atoms 2", "verify_3_2.txt");
  auto multi = run("verify --max-e 3 --atoms 0,1 --atoms 2 --up-to-iso");
  EXPECT_EQ(multi.status, 0);
  EXPECT_NE(multi.out.find("violations: 0\n"), std::string::npos);
  EXPECT_EQ(run("verify --max-e 0 --atoms 1").status, 1);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 1);
  EXPECT_EQ(run("check counterexample.txt").status, 1);
  EXPECT_EQ(run("--help").status, 0);
}
