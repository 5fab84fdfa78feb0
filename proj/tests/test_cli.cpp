// End-to-end checks of the command-line tool: frozen output rows, exit
// codes, and byte-stable reports.  The binary path comes in through
// QES_CLI_PATH, set by the build.

#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef QES_CLI_PATH
#error "QES_CLI_PATH must point at the built command-line tool"
#endif

#ifdef __unix__
#include <sys/wait.h>
#endif

namespace {

namespace fs = std::filesystem;

int run_cli(const std::string& args) {
  const std::string command =
      std::string("\"") + QES_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(command.c_str());
#ifdef __unix__
  if (WIFEXITED(status)) return WEXITSTATUS(status);
  return -1;
#else
  return status;
#endif
}

int run_cli_with_env(const std::string& env, const std::string& args) {
  const std::string command = env + " \"" + QES_CLI_PATH + "\" " + args +
                              " >/dev/null 2>&1";
  const int status = std::system(command.c_str());
#ifdef __unix__
  if (WIFEXITED(status)) return WEXITSTATUS(status);
  return -1;
#else
  return status;
#endif
}

std::string slurp(const fs::path& path) {
  std::ifstream file(path, std::ios::binary);
  std::ostringstream out;
  out << file.rdbuf();
  return out.str();
}

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("qes_cli_" + name);
}

class CliTest : public ::testing::Test {
 protected:
  void remember(const fs::path& p) { files_.push_back(p); }
  void TearDown() override {
    for (const auto& p : files_) {
      std::error_code ec;
      fs::remove(p, ec);
    }
  }
  std::vector<fs::path> files_;
};

TEST_F(CliTest, SpectrumFrozenRows) {
  const fs::path out = temp_file("spectrum.csv");
  remember(out);
  ASSERT_EQ(run_cli("spectrum --n-max 1 --out " + out.string()), 0);
  const std::string text = slurp(out);
  EXPECT_NE(text.find("n,energy,sector,solvable,residual\n"
                      "0,-1/2,even,true,0\n"
                      "1,-5/2,even,true,0\n"),
            std::string::npos)
      << text;
}

TEST_F(CliTest, SpectrumJsonKeepsExactText) {
  const fs::path out = temp_file("spectrum.json");
  remember(out);
  ASSERT_EQ(run_cli("spectrum --n-max 2 --format json --out " + out.string()), 0);
  const auto j = nlohmann::json::parse(slurp(out));
  ASSERT_EQ(j.at("levels").size(), 3u);
  EXPECT_EQ(j.at("levels")[0].at("energy").get<std::string>(), "-1/2");
  EXPECT_EQ(j.at("levels")[1].at("energy").get<std::string>(), "-5/2");
  // The published coincidence E2 = E0 at mu = 0 is reported as computed.
  EXPECT_EQ(j.at("levels")[2].at("energy").get<std::string>(), "-1/2");
  EXPECT_TRUE(j.at("levels")[0].at("solvable").get<bool>());
}

TEST_F(CliTest, SpectrumFlagsOddObstruction) {
  const fs::path out = temp_file("spectrum_odd.json");
  remember(out);
  ASSERT_EQ(run_cli("spectrum --n-max 1 --mu 1/2 --sector odd --format json "
                    "--out " +
                    out.string()),
            0);
  const auto j = nlohmann::json::parse(slurp(out));
  ASSERT_EQ(j.at("levels").size(), 2u);
  EXPECT_FALSE(j.at("levels")[1].at("solvable").get<bool>());
  EXPECT_NE(j.at("levels")[1].at("residual").get<std::string>(), "0");
}

TEST_F(CliTest, WavefunctionSingleSampleRow) {
  const fs::path out = temp_file("wave.csv");
  remember(out);
  ASSERT_EQ(run_cli("wavefunction --n 1 --x-min 2 --x-max 2 --samples 1 --out " +
                    out.string()),
            0);
  const std::string text = slurp(out);
  EXPECT_NE(text.find("x,re_psi,im_psi\n2,3,0\n"), std::string::npos) << text;
  EXPECT_NE(text.find("coefficients=1, -1"), std::string::npos) << text;
  EXPECT_NE(text.find("energy=-5/2"), std::string::npos) << text;
}

TEST_F(CliTest, WavefunctionOddSectorCarriesPrefactor) {
  const fs::path out = temp_file("wave_odd.csv");
  remember(out);
  ASSERT_EQ(run_cli("wavefunction --n 0 --mu 1/2 --sector odd --x-min 2 "
                    "--x-max 2 --samples 1 --out " +
                    out.string()),
            0);
  const std::string text = slurp(out);
  EXPECT_NE(text.find("x,re_psi,im_psi\n2,-2,0\n"), std::string::npos) << text;
}

TEST_F(CliTest, AuditReportIsByteIdenticalAcrossRuns) {
  const fs::path first = temp_file("audit_a.json");
  const fs::path second = temp_file("audit_b.json");
  remember(first);
  remember(second);
  const std::string args =
      "audit --mu 1/4 --n-max 2 --grid-N 100 --out ";
  ASSERT_EQ(run_cli(args + first.string()), 0);
  ASSERT_EQ(run_cli(args + second.string()), 0);
  const std::string a = slurp(first);
  const std::string b = slurp(second);
  ASSERT_FALSE(a.empty());
  EXPECT_EQ(a, b);

  const auto j = nlohmann::json::parse(a);
  EXPECT_EQ(j.at("summary").at("fail").get<int>(), 0);
  EXPECT_GT(j.at("summary").at("informational").get<int>(), 0);
  EXPECT_EQ(j.at("params").at("mu").get<std::string>(), "1/4");
  EXPECT_EQ(j.at("params").at("grid_N").get<int>(), 100);
}

TEST_F(CliTest, AuditRejectsCsvFormat) {
  EXPECT_EQ(run_cli("audit --format csv"), 2);
}

TEST_F(CliTest, InvalidConfigurationExitsTwo) {
  EXPECT_EQ(run_cli("spectrum --format xml"), 2);
  EXPECT_EQ(run_cli("spectrum --mu abc"), 2);
  EXPECT_EQ(run_cli("spectrum --mu -1"), 2);   // below the -1/2 bound
  EXPECT_EQ(run_cli("spectrum --a 0"), 2);     // width must be positive
  EXPECT_EQ(run_cli("spectrum --n-max -3"), 2);
  EXPECT_EQ(run_cli(""), 2);  // a subcommand is required
}

TEST_F(CliTest, HelpExitsZero) {
  EXPECT_EQ(run_cli("--help"), 0);
  EXPECT_EQ(run_cli("spectrum --help"), 0);
}

TEST_F(CliTest, ReservedSeedVariableIsRejected) {
  EXPECT_EQ(run_cli_with_env("QES_SEED_NONE=1", "spectrum --n-max 1"), 2);
}

TEST_F(CliTest, UndefinedStateExitsThree) {
  // a1 + a3 = 0 at these parameters: the first recursion denominator is zero.
  EXPECT_EQ(run_cli("wavefunction --mu -3/8 --a 2 --m0 1/2 --n 1"), 3);
}

}  // namespace
