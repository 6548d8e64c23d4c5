#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "json_io.hpp"

namespace {

using invform::cli::json;

struct Result {
  int code;
  std::string text;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  const int code = invform::cli::run(args, out, in);
  return {code, out.str()};
}

const char* kJ2 = R"({"field": "Q", "matrix": [[1, 1], [0, 1]]})";
const char* kJ3 = R"({"field": "Q", "matrix": [[1, 1, 0], [0, 1, 1], [0, 0, 1]]})";

TEST(Cli, DecideSkewOnJ2) {
  const auto r = run({"decide", "--symmetry", "skew", "-"}, kJ2);
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(json::parse(r.text)["exists"].get<bool>());
}

TEST(Cli, DecideSymmetricOnJ2ReportsObstruction) {
  const auto r = run({"decide", "--symmetry", "symmetric", "-"}, kJ2);
  EXPECT_EQ(r.code, 0);
  const json j = json::parse(r.text);
  EXPECT_FALSE(j["exists"].get<bool>());
  EXPECT_EQ(j["obstructions"].size(), 1u);
}

TEST(Cli, VerifyJ3WithKnownGram) {
  const auto r = run({"verify", "-"}, R"({"field": "Q", "matrix": [[1, 1, 0], [0, 1, 1], [0, 0, 1]],
      "gram": [[0, 0, 1], [0, -1, "1/2"], [1, "1/2", 0]], "symmetry": "symmetric", "setting": "invariant"})");
  EXPECT_EQ(r.code, 0) << r.text;
  EXPECT_TRUE(json::parse(r.text)["valid"].get<bool>());
}

TEST(Cli, VerifyRejectsWrongGram) {
  const auto r = run({"verify", "--symmetry", "symmetric", "-"},
                     R"({"field": "Q", "matrix": [[1, 1], [0, 1]], "gram": [[1, 0], [0, 1]]})");
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(json::parse(r.text)["valid"].get<bool>());
}

TEST(Cli, LevelWithoutGramIsInputError) {
  const auto r = run({"level", "-"}, R"({"field": {"Fp": 101}, "matrix": [[1, 1], [0, 1]]})");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(json::parse(r.text)["error"]["detail"], "missing gram");
}

TEST(Cli, LevelOnJ3) {
  const auto c = run({"construct", "-"}, R"({"field": {"Fp": 101}, "matrix": [[1, 1, 0], [0, 1, 1], [0, 0, 1]]})");
  ASSERT_EQ(c.code, 0);
  const auto r = run({"level", "-"}, c.text);
  ASSERT_EQ(r.code, 0) << r.text;
  const json j = json::parse(r.text);
  EXPECT_EQ(j["level"], 3);
  EXPECT_EQ(j["witt_index"], 1);
  EXPECT_EQ(j["bound_case"], "general-odd");
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({"decide", "-"}, "not json").code, 2);
  EXPECT_EQ(run({"decide", "-"}, R"({"field": "Q", "matrix": [[1, 2]]})").code, 2);
  EXPECT_EQ(run({"decide", "-"}, R"({"field": "Q", "matrix": [[0, 0], [0, 0]]})").code, 2);
  EXPECT_EQ(run({"decide", "--symmetry", "hermitian", "-"}, kJ2).code, 2);
  EXPECT_EQ(run({"oracle", "-"}, kJ2).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, CapabilityErrors) {
  EXPECT_EQ(run({"level", "-"}, R"({"field": "Q", "matrix": [[1, 1], [0, 1]], "gram": [[0, 1], [-1, 0]]})").code, 3);
  EXPECT_EQ(run({"decide", "--symmetry", "skew", "-"}, R"({"field": {"Fp": 2}, "matrix": [[1, 1], [0, 1]]})").code, 3);
}

TEST(Cli, ConstructWithoutFormListsObstructions) {
  const auto r = run({"construct", "--symmetry", "symmetric", "-"}, kJ2);
  EXPECT_EQ(r.code, 0);
  EXPECT_FALSE(json::parse(r.text)["obstructions"].empty());
}

TEST(Cli, ConstructOutputVerifies) {
  const std::vector<std::string> inputs = {
      kJ2, kJ3,
      R"({"field": {"Fp": 101}, "matrix": [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 2, 0], [0, 0, 0, 51]]})",
      R"({"field": "Q", "matrix": [[0, -1], [1, 3]]})",
      R"({"field": {"Fp": 257}, "matrix": [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1], [0, 0, 0, 1]]})"};
  for (const auto& input : inputs) {
    for (const char* sym : {"symmetric", "skew"}) {
      for (const char* setting : {"invariant", "infinitesimal"}) {
        const auto c = run({"construct", "--symmetry", sym, "--setting", setting, "-"}, input);
        ASSERT_EQ(c.code, 0) << c.text;
        const json j = json::parse(c.text);
        if (!j.contains("gram")) continue;
        const auto v = run({"verify", "-"}, c.text);
        EXPECT_EQ(v.code, 0) << input << " " << sym << " " << setting;
      }
    }
  }
}

TEST(Cli, OracleRequiresSeedAndIsDeterministic) {
  const auto a = run({"oracle", "--seed", "7", "--symmetry", "skew", "-"}, kJ3);
  const auto b = run({"oracle", "--seed", "7", "--symmetry", "skew", "-"}, kJ3);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.text, b.text);
  EXPECT_FALSE(json::parse(a.text)["exists"].get<bool>());
  const auto c = run({"oracle", "--seed", "7", "--symmetry", "symmetric", "-"}, kJ3);
  EXPECT_TRUE(json::parse(c.text)["exists"].get<bool>());
}

TEST(Cli, DecomposeAndReal) {
  const auto c = run({"construct", "-"},
                     R"({"field": {"Fp": 101}, "matrix": [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1], [0, 0, 0, 1]]})");
  const auto d = run({"decompose", "-"}, c.text);
  ASSERT_EQ(d.code, 0) << d.text;
  const json j = json::parse(d.text);
  ASSERT_EQ(j["summands"].size(), 1u);
  EXPECT_EQ(j["summands"][0]["kind"], "standard-pair");
  const auto r = run({"real", "-"}, R"({"field": "Q", "matrix": [[2, 0], [0, 3]]})");
  EXPECT_EQ(r.code, 0);
  EXPECT_FALSE(json::parse(r.text)["is_real"].get<bool>());
}

TEST(Cli, SmallSelftestIsDeterministicAcrossJobs) {
  const auto a = run({"selftest", "--seed", "11", "--count", "20", "--jobs", "1"});
  const auto b = run({"selftest", "--seed", "11", "--count", "20", "--jobs", "4"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.text, b.text);
}

}  // namespace
