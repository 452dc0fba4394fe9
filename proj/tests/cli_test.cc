#include "cli.h"

#include <gtest/gtest.h>

#include <unistd.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "sepcode/io.h"
#include "support/fixtures.h"

namespace sepcode::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "sepcode");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("sepcode_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string save(const Code& code, const std::string& name) {
    const auto path = (dir_ / name).string();
    write_file(path, serialize(code, CodeFormat::kJson));
    return path;
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, ConstructCube) {
  const auto r = invoke({"construct", "phf-cube", "--r", "2"});
  ASSERT_EQ(r.code, kHolds) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j.at("construction"), "phf-cube");
  EXPECT_EQ(j.at("params").at("r"), 2);
  EXPECT_TRUE(j.at("field").is_null());
  EXPECT_EQ(j.at("m"), 8);
  EXPECT_EQ(code_from_json(j), phf_cube(2));
}

TEST_F(CliTest, ConstructDf) {
  const auto r = invoke({"construct", "df", "--q", "13", "--s", "0,1"});
  ASSERT_EQ(r.code, kHolds) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j.at("field").at("p"), 13);
  EXPECT_EQ(j.at("S"), Json::array({0, 1}));
  EXPECT_EQ(j.at("m"), 26);
}

TEST_F(CliTest, ConstructTextFormat) {
  const auto r = invoke({"--format", "text", "construct", "trivial-fpc",
                         "--n", "2", "--q", "3"});
  ASSERT_EQ(r.code, kHolds) << r.err;
  EXPECT_EQ(r.out.rfind("2 3 4\n", 0), 0u);
}

TEST_F(CliTest, VerifyHoldingAndFailing) {
  const auto good = save(testing::c4(), "c4.json");
  auto r = invoke({"verify", good, "--property", "sc-bar", "--t", "3",
                   "--method", "both", "--certify"});
  ASSERT_EQ(r.code, kHolds) << r.err;
  const Json both = r.json();
  ASSERT_TRUE(both.is_array());
  EXPECT_EQ(both.size(), 2u);
  EXPECT_TRUE(both[0].at("holds"));
  EXPECT_TRUE(both[0].at("certification").at("optimal"));

  const auto bad = save(testing::delta1_instance(), "d1.json");
  r = invoke({"verify", bad, "--property", "sc-bar", "--t", "3",
              "--method", "structural"});
  EXPECT_EQ(r.code, kViolated);
  EXPECT_EQ(r.json().at("witness").at("kind"), "DELTA1");
}

TEST_F(CliTest, VerifyOtherProperties) {
  const auto path = save(testing::nabla_instance(), "nabla.json");
  EXPECT_EQ(invoke({"verify", path, "--property", "phf", "--t", "3"}).code,
            kHolds);
  EXPECT_EQ(invoke({"verify", path, "--property", "fpc", "--t", "2"}).code,
            kHolds);
  EXPECT_EQ(invoke({"verify", path, "--property", "sc", "--t", "3"}).code,
            kViolated);
}

TEST_F(CliTest, BudgetExceededIsUsageError) {
  const auto path = save(phf_cube(3), "cube.json");
  const auto r = invoke({"--budget", "10", "verify", path, "--property",
                         "sc-bar", "--t", "3"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("budget"), std::string::npos);
}

TEST_F(CliTest, Bound) {
  const auto r = invoke({"bound", "--q", "4", "--n", "3", "--t", "3"});
  ASSERT_EQ(r.code, kHolds);
  const Json j = r.json();
  ASSERT_TRUE(j.is_array());
  bool saw = false;
  for (const auto& b : j) saw |= b.at("source") == "upper-3bar-len3" && b.at("value") == 12;
  EXPECT_TRUE(saw);
}

TEST_F(CliTest, SearchEmitsVerifiedCodes) {
  const auto r = invoke({"search", "df", "--q", "19", "--pattern", "all",
                         "--emit-codes", dir_.string()});
  ASSERT_TRUE(r.code == kHolds || r.code == kViolated) << r.err;
  std::istringstream lines(r.out);
  std::size_t count = 0;
  for (std::string line; std::getline(lines, line); ++count) {
    const Json rec = Json::parse(line);
    EXPECT_EQ(rec.at("q"), 19);
    if (!rec.at("admissible")) continue;
    EXPECT_TRUE(rec.at("verified"));
    const auto file = rec.at("code_file").get<std::string>();
    EXPECT_TRUE(std::filesystem::exists(file));
    EXPECT_EQ(code_from_json(Json::parse(read_file(file))).size(), 57u);
  }
  EXPECT_EQ(count, 1u);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"construct", "phf-extended", "--k", "3"}).code, kUsage);
  EXPECT_EQ(invoke({"search", "df", "--q", "8"}).code, kUsage);
  EXPECT_EQ(invoke({"verify", (dir_ / "missing.json").string(),
                    "--property", "sc-bar", "--t", "3"})
                .code,
            kUsage);
}

}  // namespace
}  // namespace sepcode::cli
