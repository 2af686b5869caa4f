#include "sciento/cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "sciento/json.h"
#include "sciento/ranking.h"
#include "sciento/spamlab.h"

namespace sciento {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const std::string kFixtures = SCIENTO_FIXTURE_DIR;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("sciento-cli-" + std::to_string(std::random_device{}()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string operator/(const std::string& name) const {
    return (path_ / name).string();
  }

 private:
  fs::path path_;
};

TEST(CliScoreTest, Art3Json) {
  const CliResult r = run({"score", "--corpus", fixture("art3.jsonl"), "--article",
                     "ART-3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["penetration"]["f"], json({"3/7", "3/7", "1/7"}));
  EXPECT_EQ(j["penetration"]["nca"], 3);
  EXPECT_EQ(j["penetration"]["distinct_authors"], 7);
  EXPECT_EQ(j["scores"]["s1"], "16/7");
  EXPECT_EQ(j["penetration"].get<PenetrationVector>().coords,
            (std::vector<Rational>{Rational(3, 7), Rational(3, 7),
                                   Rational(1, 7)}));
}

TEST(CliScoreTest, Art3Tsv) {
  const CliResult r = run({"score", "--corpus", fixture("art3.jsonl"), "--article",
                     "ART-3", "--format", "tsv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("N_f(s1)\t2.28\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("f\t3/7, 3/7, 1/7\n"), std::string::npos) << r.out;
}

TEST(CliScoreTest, CsvInputMatchesJsonl) {
  const CliResult jsonl = run({"score", "--corpus", fixture("art3.jsonl"),
                         "--article", "ART-3"});
  const CliResult csv = run({"score", "--corpus", fixture("art3_csv"), "--article",
                       "ART-3"});
  ASSERT_EQ(csv.code, kExitOk) << csv.err;
  EXPECT_EQ(jsonl.out, csv.out);
}

TEST(CliScoreTest, UnknownArticle) {
  const CliResult r = run({"score", "--corpus", fixture("art3.jsonl"), "--article",
                     "nope"});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("nope"), std::string::npos);
}

TEST(CliProfileTest, Json) {
  const CliResult r = run({"profile", "--corpus", fixture("art12.jsonl"), "--author",
                     "b1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out).get<IndexProfile>(),
            (IndexProfile{AuthorId("b1"), 1, 1, 1, 1}));
}

TEST(CliRankTest, EmptyCorpus) {
  CliResult r = run({"rank", "--corpus", fixture("empty.jsonl"), "--index", "fs2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "rank\tauthor\tvalue\n");
  r = run({"rank", "--corpus", fixture("empty.jsonl"), "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "[]\n");
}

TEST(CliRankTest, JsonRoundTripsAndIsDeterministic) {
  const std::vector<std::string> args = {"rank", "--corpus",
                                         fixture("art12.jsonl"), "--index",
                                         "fs2", "--format", "json"};
  const CliResult a = run(args);
  const CliResult b = run(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const RankedTable t = parse_table_json(a.out, IndexKind::kFS2);
  EXPECT_EQ(t.rows.front(), (RankedRow{AuthorId("b1"), 1, 1}));
}

TEST(CliCompareTest, CorpusMode) {
  const CliResult r = run({"compare", "--corpus", fixture("art12.jsonl"), "--format",
                     "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const DeltaReport report = json::parse(r.out).get<DeltaReport>();
  EXPECT_TRUE(report.cohorts_match());
  EXPECT_EQ(report.base, IndexKind::kH);
  EXPECT_EQ(report.other, IndexKind::kFS2);
}

TEST(CliCompareTest, MismatchedTables) {
  const CliResult r = run({"compare", "--base-table", fixture("base_two.json"),
                     "--other-table", fixture("other_three.json")});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("only in other (fs2): carol"), std::string::npos)
      << r.err;
  // Shared authors are still reported.
  EXPECT_NE(r.out.find("alice\t1\t2\t-1"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("bob\t2\t1\t+1"), std::string::npos) << r.out;
}

TEST(CliCompareTest, UsageErrors) {
  EXPECT_EQ(run({"compare"}).code, kExitUsage);
  EXPECT_EQ(run({"compare", "--base-table", fixture("base_two.json")}).code,
            kExitUsage);
}

TEST(CliValidateTest, Dangling) {
  const CliResult r = run({"validate", "--corpus", fixture("dangling.jsonl")});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.out.find("error\tDanglingCitation\tP1->X"), std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find("error\tEmptyAuthorList\tP2"), std::string::npos);

  const CliResult j = run({"validate", "--corpus", fixture("dangling.jsonl"),
                     "--format", "json"});
  EXPECT_FALSE(json::parse(j.out)["ok"].get<bool>());
}

TEST(CliValidateTest, StrictCommandsRefuseBrokenCorpus) {
  const CliResult r = run({"rank", "--corpus", fixture("dangling.jsonl")});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("DanglingCitation"), std::string::npos);
}

TEST(CliValidateTest, CleanCorpus) {
  const CliResult r = run({"validate", "--corpus", fixture("art3.jsonl")});
  EXPECT_EQ(r.code, kExitOk) << r.out;
}

TEST(CliUsageTest, ExitCodes) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"rank"}).code, kExitUsage);
  EXPECT_EQ(run({"rank", "--corpus", fixture("art12.jsonl"), "--index", "g"})
                .code,
            kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
  EXPECT_EQ(run({"rank", "--corpus", "/no/such/file.jsonl"}).code,
            kExitFailure);
}

TEST(CliCaseFoldTest, EnvironmentToggle) {
  TempDir dir;
  {
    std::ofstream f(dir / "c.jsonl");
    f << R"({"id": "x", "authors": ["Ann Lee"], "cites": []})" << '\n'
      << R"({"id": "y", "authors": ["ANN LEE"], "cites": ["x"]})" << '\n';
  }
  const std::vector<std::string> args = {"rank", "--corpus", dir / "c.jsonl"};
  ::unsetenv("SCIENTO_CASEFOLD");
  const CliResult sensitive = run(args);
  ::setenv("SCIENTO_CASEFOLD", "1", 1);
  const CliResult folded = run(args);
  ::unsetenv("SCIENTO_CASEFOLD");
  EXPECT_EQ(sensitive.out, "rank\tauthor\tvalue\n1\tAnn Lee\t1\n2\tANN LEE\t0\n");
  EXPECT_EQ(folded.out, "rank\tauthor\tvalue\n1\tann lee\t1\n");
}

TEST(CliSynthTest, FlagsAndConfigAgree) {
  TempDir dir;
  {
    std::ofstream f(dir / "params.json");
    f << R"({"author_pool": 15, "papers": 40, "authors_per_paper": [1, 3],
             "citations_per_paper": [0, 4], "seed": 11})";
  }
  const CliResult flags = run({"synth", "--author-pool", "15", "--papers", "40",
                         "--authors-per-paper", "1", "3",
                         "--citations-per-paper", "0", "4", "--seed", "11"});
  const CliResult config = run({"synth", "--config", dir / "params.json"});
  ASSERT_EQ(flags.code, kExitOk) << flags.err;
  ASSERT_EQ(config.code, kExitOk) << config.err;
  EXPECT_EQ(flags.out, config.out);

  ASSERT_EQ(run({"synth", "--config", dir / "params.json", "--out",
                 dir / "csv", "--output-format", "csv"})
                .code,
            kExitOk);
  const CliResult from_csv = run({"rank", "--corpus", dir / "csv"});
  ASSERT_EQ(from_csv.code, kExitOk) << from_csv.err;
  ASSERT_EQ(run({"synth", "--config", dir / "params.json", "--out",
                 dir / "c.jsonl"})
                .code,
            kExitOk);
  EXPECT_EQ(from_csv.out, run({"rank", "--corpus", dir / "c.jsonl"}).out);
}

TEST(CliSynthTest, Infeasible) {
  const CliResult r = run({"synth", "--papers", "2", "--citations-per-paper", "0",
                     "2"});
  EXPECT_EQ(r.code, kExitFailure);
}

TEST(CliSpamTest, ReportAndDeterminism) {
  TempDir dir;
  {
    std::ofstream f(dir / "params.json");
    f << R"({"author_pool": 10, "papers": 30, "authors_per_paper": [1, 2],
             "citations_per_paper": [0, 3], "seed": 5})";
  }
  const std::vector<std::string> args = {
      "spam-experiment", "--config", dir / "params.json", "--target", "A01",
      "--spam-papers", "20", "--seed", "3"};
  std::vector<std::string> a = args, b = args;
  a.insert(a.end(), {"--out", dir / "a.jsonl"});
  b.insert(b.end(), {"--out", dir / "b.jsonl"});
  const CliResult ra = run(a);
  const CliResult rb = run(b);
  ASSERT_EQ(ra.code, kExitOk) << ra.err;
  EXPECT_EQ(ra.out, rb.out);
  EXPECT_EQ(slurp(dir / "a.jsonl"), slurp(dir / "b.jsonl"));

  const RobustnessReport report = json::parse(ra.out).get<RobustnessReport>();
  EXPECT_EQ(report.target, AuthorId("A01"));
  EXPECT_GE(report.shift(IndexKind::kH).inflation, 0);

  // The written corpus is a valid input for the other commands.
  EXPECT_EQ(run({"validate", "--corpus", dir / "a.jsonl"}).code, kExitOk);
}

TEST(CliSpamTest, ScenarioFileAndTsv) {
  TempDir dir;
  {
    std::ofstream f(dir / "s.json");
    f << R"({"variant": "single_citer", "target_author": "b3",
             "spam_papers": 4, "seed": 1})";
  }
  const CliResult r = run({"spam-experiment", "--corpus", fixture("art3.jsonl"),
                     "--scenario", dir / "s.json", "--format", "tsv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  // ART-3 goes from 3 to 7 citers; h stays 1 since b3 has one article.
  EXPECT_EQ(r.out,
            "index\tbefore\tafter\tinflation\n"
            "h\t1\t1\t0\n"
            "fs1\t1\t1\t0\n"
            "fs2\t1\t1\t0\n"
            "fs3\t1\t1\t0\n");
}

TEST(CliSpamTest, UsageAndTargetErrors) {
  EXPECT_EQ(run({"spam-experiment", "--target", "b3"}).code, kExitUsage);
  EXPECT_EQ(run({"spam-experiment", "--corpus", fixture("art3.jsonl")}).code,
            kExitUsage);
  EXPECT_EQ(run({"spam-experiment", "--corpus", fixture("art3.jsonl"),
                 "--target", "ghost"})
                .code,
            kExitFailure);
}

}  // namespace
}  // namespace sciento
