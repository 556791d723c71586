#include <gtest/gtest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qcongr/cli/app.hpp"
#include "qcongr/cli/disk_cache.hpp"
#include "qcongr/catalog.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using qcongr::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("qcongr_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

void expect_cell_schema(const json& c) {
  ASSERT_TRUE(c.is_object());
  EXPECT_TRUE(c.at("statement").is_string());
  EXPECT_TRUE(c.at("n").is_number_unsigned());
  EXPECT_TRUE(c.at("r").is_null() || c.at("r").is_number_integer());
  const std::string status = c.at("status");
  EXPECT_TRUE(status == "Holds" || status == "Fails" || status == "IllFormed" || status == "Skipped") << status;
  EXPECT_TRUE(c.at("detail").is_string());
  const bool has_witness = c.contains("factor");
  EXPECT_EQ(has_witness, status == "Fails" || status == "IllFormed");
  if (has_witness) {
    EXPECT_TRUE(c.at("factor").is_number_unsigned());
    for (const char* key : {"required", "found"}) {
      const json& v = c.at(key);
      EXPECT_TRUE(v.is_number_integer() || v == "inf");
    }
  }
}

void expect_report_schema(const json& j) {
  ASSERT_TRUE(j.contains("run"));
  EXPECT_TRUE(j["run"].at("command").is_string());
  EXPECT_TRUE(j["run"].at("config").is_object());
  ASSERT_TRUE(j.at("cells").is_array());
  std::size_t counts[4] = {0, 0, 0, 0};
  for (const auto& c : j["cells"]) {
    expect_cell_schema(c);
    const std::string s = c["status"];
    counts[s == "Holds" ? 0 : s == "Fails" ? 1 : s == "IllFormed" ? 2 : 3]++;
  }
  const json& sum = j.at("summary");
  EXPECT_EQ(sum.at("holds"), counts[0]);
  EXPECT_EQ(sum.at("fails"), counts[1]);
  EXPECT_EQ(sum.at("illformed"), counts[2]);
  EXPECT_EQ(sum.at("skipped"), counts[3]);
}

}  // namespace

TEST(CliShow, SpecExamples) {
  EXPECT_EQ(cli({"show", "cyclotomic", "6"}).out, "1,-1,1\n");
  EXPECT_EQ(cli({"show", "qbin", "4", "2"}).out, "1,1,2,1,1\n");
  EXPECT_EQ(cli({"show", "qint", "3"}).out, "1,1,1\n");
  EXPECT_EQ(cli({"show", "lhs", "2", "1"}).out, "0,1,2,3,3,1\n");
  EXPECT_EQ(cli({"show", "cyclotomic", "6"}).code, 0);
  const auto j = json::parse(cli({"show", "qbin", "4", "2", "--format", "json"}).out);
  EXPECT_EQ(j["run"]["command"], "show");
  EXPECT_EQ(j["result"], "1,1,2,1,1");
}

TEST(CliCheck, SpecExamples) {
  auto r = cli({"check", "sum(j,1,n-1,1/(1-q^j)^2) === -(n-1)*(n-5)/12 mod cyc(n)", "-b", "n=7"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("Holds"), std::string::npos);

  r = cli({"check", "q^2 === 0 mod cyc(2)", "--format", "json"});
  EXPECT_EQ(r.code, 1);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["verdict"]["status"], "Fails");
  EXPECT_EQ(j["verdict"]["factor"], 2);
  EXPECT_EQ(j["verdict"]["found"], 0);

  r = cli({"check", "1/(1+q) === 0 mod cyc(2)", "--format", "json"});
  EXPECT_EQ(r.code, 1);
  j = json::parse(r.out);
  EXPECT_EQ(j["verdict"]["status"], "IllFormed");
  EXPECT_EQ(j["verdict"]["factor"], 2);
}

TEST(CliCheck, CatalogNameAndErrors) {
  const std::string conj = *qcongr::suite::dsl_rendering(qcongr::suite::StatementKind::CONJ1);
  EXPECT_EQ(cli({"check", conj, "-b", "n=5", "-b", "r=2"}).code, 0);
  const auto bad = cli({"check", "q +* 1 === q mod cyc(2)"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("^"), std::string::npos);
  EXPECT_EQ(cli({"check", "q^n === q mod cyc(2)"}).code, 2);
}

TEST(CliExplore, SpecExamples) {
  const auto r = cli({"explore", "CONJ1", "--n", "1..3", "--r", "1", "--cap", "10", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  ASSERT_EQ(j["rows"].size(), 3u);
  EXPECT_EQ(j["rows"][0]["exponent"], "inf");
  EXPECT_EQ(j["rows"][1]["exponent"], 5);
  const auto t = cli({"explore", "GUGUO_OPEN", "--n", "2..6"});
  EXPECT_EQ(t.code, 0);
}

TEST(CliVerify, JsonSchemaAndExitCodes) {
  const auto r = cli({"verify-paper", "--n", "2..5", "--r", "1..2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  expect_report_schema(j);
  EXPECT_EQ(j["run"]["command"], "verify-paper");
  EXPECT_FALSE(j["run"]["config"].contains("jobs"));
  EXPECT_FALSE(j["cells"][0].contains("millis"));

  const auto timed = json::parse(cli({"verify-paper", "--only", "B4", "--n", "2..3", "--format", "json", "--timing"}).out);
  EXPECT_TRUE(timed["cells"][0].contains("millis"));

  const auto harmonic = cli({"verify-paper", "--only", "B4,B5", "--n", "2..40"});
  EXPECT_EQ(harmonic.code, 0);
}

TEST(CliVerify, NOneWithLargeRFails) {
  const auto r = cli({"verify-paper", "--n", "1..1", "--r", "5..5", "--format", "json"});
  EXPECT_EQ(r.code, 1);
  const auto j = json::parse(r.out);
  expect_report_schema(j);
  std::set<std::string> failing;
  for (const auto& c : j["cells"]) {
    if (c["status"] == "Fails") failing.insert(c["statement"]);
  }
  EXPECT_EQ(failing, (std::set<std::string>{"AA5", "B9", "B10_VS_B9"}));
}

TEST(CliVerify, TextAndJsonAgree) {
  const std::vector<std::string> base = {"verify-paper", "--n", "1..4", "--r", "-1..2", "--skip", "AA2"};
  auto text_args = base;
  auto json_args = base;
  json_args.insert(json_args.end(), {"--format", "json"});
  const auto t = cli(text_args);
  const auto jr = cli(json_args);
  EXPECT_EQ(t.code, jr.code);
  const auto j = json::parse(jr.out);
  std::istringstream lines(t.out);
  std::string line;
  std::size_t i = 0;
  while (std::getline(lines, line)) {
    if (line.rfind("summary:", 0) == 0) break;
    ASSERT_LT(i, j["cells"].size());
    const std::string status = j["cells"][i]["status"];
    EXPECT_EQ(line.substr(0, status.size()), status) << line;
    ++i;
  }
  EXPECT_EQ(i, j["cells"].size());
}

TEST(CliVerify, JobsDoNotChangeOutput) {
  const std::vector<std::string> base = {"verify-paper", "--n", "1..8", "--r", "1..3", "--format", "json"};
  auto one = base;
  one.insert(one.end(), {"--jobs", "1"});
  auto eight = base;
  eight.insert(eight.end(), {"--jobs", "8"});
  EXPECT_EQ(cli(one).out, cli(eight).out);
}

TEST(CliCache, WarmColdAndCorrupt) {
  const fs::path dir = fresh_dir("cache");
  const std::vector<std::string> args = {"verify-paper", "--only", "CONJ1,B4", "--n", "2..7", "--r", "1",
                                         "--format", "json", "--cache", dir.string()};
  const auto cold = cli(args);
  ASSERT_EQ(cold.code, 0) << cold.err;
  ASSERT_TRUE(fs::exists(dir / "cyclotomic_6.txt"));
  const auto warm = cli(args);
  EXPECT_EQ(cold.out, warm.out);

  { std::ofstream(dir / "cyclotomic_6.txt") << "1,1,1\n"; }
  { std::ofstream(dir / "cyclotomic_5.txt") << "not a polynomial\n"; }
  const auto corrupt = cli(args);
  EXPECT_EQ(cold.out, corrupt.out);
  std::ifstream in(dir / "cyclotomic_6.txt");
  std::string text;
  std::getline(in, text);
  EXPECT_EQ(text, "1,-1,1");
  fs::remove_all(dir);
}

TEST(CliCache, SyncStats) {
  const fs::path dir = fresh_dir("sync");
  {
    qcongr::QObjectCache cache;
    const auto s = qcongr::cli::sync_cyclotomic_cache(dir, 12, cache);
    EXPECT_EQ(s.loaded, 0u);
    EXPECT_EQ(s.written, 12u);
  }
  { std::ofstream(dir / "cyclotomic_4.txt") << "-1,0,1\n"; }
  {
    qcongr::QObjectCache cache;
    const auto s = qcongr::cli::sync_cyclotomic_cache(dir, 12, cache);
    EXPECT_EQ(s.loaded, 11u);
    EXPECT_EQ(s.rejected, 1u);
    EXPECT_EQ(s.written, 1u);
    EXPECT_EQ(cache.cyclotomic(4), qcongr::IntPoly({1, 0, 1}));
  }
  fs::remove_all(dir);
}

TEST(CliUsage, ErrorsExitTwo) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"verify-paper", "--n", "5..2"}).code, 2);
  EXPECT_EQ(cli({"verify-paper", "--n", "0..2"}).code, 2);
  EXPECT_EQ(cli({"verify-paper", "--jobs", "0"}).code, 2);
  EXPECT_EQ(cli({"verify-paper", "--only", "NOPE"}).code, 2);
  EXPECT_EQ(cli({"verify-paper", "--format", "xml"}).code, 2);
  EXPECT_EQ(cli({"explore", "CONJ1", "--cap", "0"}).code, 2);
  EXPECT_EQ(cli({"check", "q === q mod cyc(2)", "-b", "n"}).code, 2);
  EXPECT_EQ(cli({"show", "qbin", "4"}).code, 2);
  EXPECT_EQ(cli({"show", "cyclotomic", "0"}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
}
