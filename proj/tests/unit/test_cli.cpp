#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "realspin_cli/cli.hpp"

using namespace realspin::cli;
using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_args(std::vector<std::string> args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const char* kTorus = R"({"genus": 1, "real_components": 1, "separating": false})";

json torus_spec(const std::string& automorphism) {
  return json::parse(std::string(R"({"curve": )") + kTorus +
                     R"(, "bundle": {"rank": 1, "degree": 0, "w1": [0]}, "automorphism": )" + automorphism + "}");
}

}  // namespace

TEST(CmdDetsign, Examples) {
  EXPECT_EQ(cmd_detsign(torus_spec(R"({"sign": 0, "f_exponents": [1]})"))["sign"], -1);
  EXPECT_EQ(cmd_detsign(torus_spec(R"({"sign": 0, "f_exponents": [0]})"))["sign"], 1);
  const json sphere = json::parse(R"({"curve": {"genus": 0, "real_components": 1, "separating": true},
    "bundle": {"rank": 1, "degree": 0, "w1": [0]}, "automorphism": {"sign": 1, "f_exponents": []}})");
  EXPECT_EQ(cmd_detsign(sphere)["sign"], -1);
}

TEST(CmdSpin, Examples) {
  const json en = json::parse(std::string(R"({"curve": )") + kTorus + R"(, "w1": [0]})");
  EXPECT_EQ(cmd_spin(en, "enumerate")["count"], 2);
  const json act = json::parse(std::string(R"({"curve": )") + kTorus +
                               R"(, "form": {"q_a": [1], "q_b": [0]}, "automorphism": {"sign": 0, "f_exponents": [0]}})");
  EXPECT_EQ(cmd_spin(act, "act")["form"], act["form"]);
  const json bordism = json::parse(
      R"({"curve": {"genus": 1, "real_components": 2, "separating": true}, "form": {"q_a": [0], "q_b": [0]}})");
  EXPECT_EQ(cmd_spin(bordism, "bordism"), json::parse(R"({"w1": [1, 1], "arf": 0})"));
}

TEST(CmdPicard, GenusOneExample) {
  const json spec = json::parse(R"({"curve": {"genus": 1, "real_components": 2, "separating": true}, "degree": 0, "w1": [0, 0]})");
  EXPECT_EQ(cmd_picard(spec)["functional_on_Fminus"], json::parse("[1]"));
}

TEST(CmdLoop, TrivialClutching) {
  const json spec = json::parse(R"({"curve": {"genus": 1, "real_components": 2, "separating": true},
    "bundle": {"rank": 2, "degree": 0, "w1": [0, 0]}, "clutching": [0, 0]})");
  EXPECT_EQ(cmd_loop(spec)["orientable"], true);
}

TEST(CmdVerify, SmallGenusPasses) {
  const VerifyOutcome v = cmd_verify(json::object(), 1, 2);
  EXPECT_EQ(v.exit_code, kSuccess);
  EXPECT_EQ(v.report["passed"], true);
}

TEST(Run, ExitCodes) {
  EXPECT_EQ(run_args({"detsign"}, torus_spec(R"({"sign": 0, "f_exponents": [1]})").dump()).code, kSuccess);
  const CliRun bad = run_args({"detsign"}, R"({"curve": {"genus": 2, "real_components": 2, "separating": true}})");
  EXPECT_EQ(bad.code, kInvalidInput);
  EXPECT_EQ(json::parse(bad.err)["error"]["code"], "InvalidTopology");
  EXPECT_TRUE(bad.out.empty());
  EXPECT_EQ(run_args({"detsign"}, "{not json").code, kInvalidInput);
  EXPECT_EQ(run_args({"nonsense"}, "{}").code, kInvalidInput);
  EXPECT_EQ(run_args({}, "{}").code, kInvalidInput);
  const CliRun parity = run_args({"spin", "enumerate"}, std::string(R"({"curve": )") + kTorus + R"(, "w1": [1]})");
  EXPECT_EQ(parity.code, kInvalidInput);
  EXPECT_EQ(json::parse(parity.err)["error"]["code"], "BadW1Parity");
  const CliRun notreal = run_args({"spin", "bordism"}, std::string(R"({"curve": )") + kTorus + R"(, "form": {"q_a": [0], "q_b": [0]}})");
  EXPECT_EQ(json::parse(notreal.err)["error"]["code"], "NotRealSpin");
}

TEST(Run, VerifyInvalidCurveExitsTwo) {
  const CliRun r = run_args({"verify", "--input", "-"}, R"({"curve": {"genus": 2, "real_components": 2, "separating": true}})");
  EXPECT_EQ(r.code, kInvalidInput);
  EXPECT_EQ(json::parse(r.out)["skipped"].size(), 1U);
}

TEST(Run, OutputRoundTripsAndIsDeterministic) {
  const std::string spec = std::string(R"({"curve": {"genus": 3, "real_components": 2, "separating": true}})");
  const CliRun a = run_args({"spin", "enumerate"}, spec);
  const CliRun b = run_args({"spin", "enumerate"}, spec);
  ASSERT_EQ(a.code, kSuccess);
  EXPECT_EQ(a.out, b.out);
  const json forms = json::parse(a.out)["forms"];
  EXPECT_EQ(forms.size(), 16U);
  for (const auto& f : forms) {
    json again = json::parse(std::string(R"({"curve": {"genus": 3, "real_components": 2, "separating": true}, "form": )") +
                             json{{"q_a", f["q_a"]}, {"q_b", f["q_b"]}}.dump() + "}");
    const json bordism = cmd_spin(again, "bordism");
    EXPECT_EQ(bordism["w1"], f["w1"]);
    EXPECT_EQ(bordism["arf"], f["arf"]);
  }
  const CliRun v1 = run_args({"verify", "--max-genus", "2", "--seed", "4"}, "");
  const CliRun v2 = run_args({"--seed", "4", "verify", "--max-genus", "2"}, "");
  EXPECT_EQ(v1.code, kSuccess);
  EXPECT_EQ(v1.out, v2.out);
}

TEST(Executable, DetsignFromFile) {
  const std::string path = ::testing::TempDir() + "realspin_cli_detsign.json";
  std::ofstream(path) << torus_spec(R"({"sign": 0, "f_exponents": [1]})").dump();
  const std::string cmd = std::string(REALSPIN_EXE) + " detsign --input " + path;
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string out;
  std::array<char, 256> buf{};
  while (fgets(buf.data(), static_cast<int>(buf.size()), pipe) != nullptr) out += buf.data();
  const int status = pclose(pipe);
  EXPECT_EQ(WEXITSTATUS(status), 0);
  EXPECT_EQ(json::parse(out)["sign"], -1);
}
