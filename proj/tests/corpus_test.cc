#include "sciento/corpus.h"

#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "testing/test_util.h"

namespace sciento {
namespace {

using testing::art12_corpus;
using testing::art3_corpus;
using testing::ids;

std::vector<std::string> article_ids(const std::vector<Article>& articles) {
  std::vector<std::string> out;
  for (const Article& a : articles) out.push_back(a.id);
  return out;
}

// ----------------------------------------------------------------------------
// normalize_author
// ----------------------------------------------------------------------------

TEST(NormalizeAuthorTest, CollapsesWhitespace) {
  EXPECT_EQ(normalize_author("  Jiawei  Han ").str(), "Jiawei Han");
  EXPECT_EQ(normalize_author("a1").str(), "a1");
  EXPECT_EQ(normalize_author("\tA\n B ").str(), "A B");
}

TEST(NormalizeAuthorTest, CaseFolding) {
  EXPECT_EQ(normalize_author("A1", CaseFolding::kFold).str(), "a1");
  EXPECT_EQ(normalize_author("A1").str(), "A1");
  EXPECT_NE(AuthorId("A1"), AuthorId("a1"));
  EXPECT_EQ(AuthorId("A1", CaseFolding::kFold), AuthorId("a1"));
}

TEST(NormalizeAuthorTest, ComposesToNfc) {
  // "e" + COMBINING ACUTE ACCENT composes to U+00E9.
  EXPECT_EQ(normalize_author("Jose\xCC\x81").str(), "Jos\xC3\xA9");
  EXPECT_EQ(AuthorId("Jose\xCC\x81"), AuthorId("Jos\xC3\xA9"));
}

TEST(NormalizeAuthorTest, EmptyIsAnError) {
  EXPECT_THROW(normalize_author(""), EmptyAuthorError);
  EXPECT_THROW(normalize_author("   \t "), EmptyAuthorError);
}

TEST(NormalizeAuthorTest, Idempotent) {
  const std::vector<std::string> pieces = {
      " ", "  ", "\t", "A", "b", "\xC3\x89", "e\xCC\x81", "\xC3\x9F", "Zh",
      "\xE3\x80\x80", "\xC4\xB0", "\xCC\x81", "-", "."};
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    std::string raw;
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    for (int i = 0; i < n; ++i) {
      raw += pieces[std::uniform_int_distribution<std::size_t>(
          0, pieces.size() - 1)(rng)];
    }
    for (CaseFolding f : {CaseFolding::kSensitive, CaseFolding::kFold}) {
      try {
        const AuthorId once(raw, f);
        EXPECT_EQ(AuthorId(once.str(), f), once) << raw;
      } catch (const EmptyAuthorError&) {
        // whitespace-only draw
      }
    }
  }
}

// ----------------------------------------------------------------------------
// load_jsonl / load_csv
// ----------------------------------------------------------------------------

TEST(LoadCorpusTest, TwoRecordsOneEdge) {
  std::istringstream in(
      R"({"id": "x", "authors": ["a"], "cites": ["y"]})"
      "\n"
      R"({"id": "y", "authors": ["b"]})"
      "\n");
  const CitationCorpus corpus = load_jsonl(in);
  EXPECT_EQ(corpus.size(), 2u);
  EXPECT_EQ(corpus.citations().size(), 1u);
}

TEST(LoadCorpusTest, DuplicateAuthorCollapses) {
  std::istringstream in(R"({"id": "x", "authors": ["a", " a ", "b", "a"]})");
  const CitationCorpus corpus = load_jsonl(in, {.strict = false});
  EXPECT_EQ(corpus.article("x").authors, ids({"a", "b"}));
}

TEST(LoadCorpusTest, RepeatedEdgeCollapses) {
  std::istringstream in(
      R"({"id": "x", "authors": ["a"], "cites": ["y", "y"]})"
      "\n"
      R"({"id": "y", "authors": ["b"]})");
  const CitationCorpus corpus = load_jsonl(in);
  EXPECT_EQ(corpus.citations().size(), 1u);

  std::istringstream articles("id,authors\nx,a\ny,b\n");
  std::istringstream citations("citing_id,cited_id\nx,y\nx,y\n");
  EXPECT_EQ(load_csv(articles, citations).citations().size(), 1u);
}

TEST(LoadCorpusTest, OrderIndependent) {
  std::istringstream a(
      R"({"id": "x", "authors": ["a"], "cites": ["y"]})"
      "\n"
      R"({"id": "y", "authors": ["b", "c"], "cites": ["x"]})");
  std::istringstream b(
      R"({"id": "y", "authors": ["b", "c"], "cites": ["x"]})"
      "\n\n"
      R"({"id": "x", "authors": ["a"], "cites": ["y"]})");
  EXPECT_EQ(load_jsonl(a), load_jsonl(b));
}

TEST(LoadCorpusTest, CaseFoldingOption) {
  std::istringstream in(R"({"id": "x", "authors": ["Alice", "ALICE"]})");
  const CitationCorpus corpus =
      load_jsonl(in, {CaseFolding::kFold, /*strict=*/false});
  EXPECT_EQ(corpus.article("x").authors, ids({"alice"}));
}

TEST(LoadCorpusTest, ParseErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      load_jsonl(in, {.strict = false});
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("{\"id\": \"x\", \"authors\": [\"a\"]}\n{oops"), 2u);
  EXPECT_EQ(line_of("{\"authors\": [\"a\"]}"), 1u);
  EXPECT_EQ(line_of("{\"id\": \"x\"}"), 1u);
  EXPECT_EQ(line_of("{\"id\": \"x\", \"authors\": [\"  \"]}"), 1u);
  EXPECT_EQ(line_of("{\"id\": \"x\", \"authors\": [1]}"), 1u);
  EXPECT_EQ(line_of("{\"id\": \"x\", \"authors\": [\"a\"]}\n\n"
                    "{\"id\": \"x\", \"authors\": [\"b\"]}"),
            3u);
  EXPECT_EQ(line_of("[1, 2]"), 1u);
}

TEST(LoadCorpusTest, CsvErrors) {
  std::istringstream bad_header("id;authors\nx,a\n");
  std::istringstream cites("citing_id,cited_id\n");
  EXPECT_THROW(load_csv(bad_header, cites), ParseError);

  std::istringstream articles("id,authors\nx,a,b\n");
  std::istringstream cites2("citing_id,cited_id\n");
  EXPECT_THROW(load_csv(articles, cites2), ParseError);

  std::istringstream quoted("id,authors\n\"x,1\",\"Doe, J.|Roe\"\n");
  std::istringstream cites3("citing_id,cited_id\n");
  const CitationCorpus corpus = load_csv(quoted, cites3, {.strict = false});
  EXPECT_EQ(corpus.article("x,1").authors, ids({"Doe, J.", "Roe"}));
}

TEST(LoadCorpusTest, StrictModeRejectsValidationErrors) {
  std::istringstream dangling(R"({"id": "x", "authors": ["a"], "cites": ["X"]})");
  try {
    load_jsonl(dangling);
    FAIL() << "expected CorpusValidationError";
  } catch (const CorpusValidationError& e) {
    ASSERT_EQ(e.report().errors.size(), 1u);
    EXPECT_EQ(e.report().errors[0].kind, IssueKind::kDanglingCitation);
  }
  std::istringstream again(R"({"id": "x", "authors": ["a"], "cites": ["X"]})");
  EXPECT_NO_THROW(load_jsonl(again, {.strict = false}));
}

TEST(LoadCorpusTest, FixtureFilesMatchProgrammaticFixtures) {
  const std::filesystem::path dir = SCIENTO_FIXTURE_DIR;
  EXPECT_EQ(load_corpus_file(dir / "art12.jsonl", std::nullopt), art12_corpus());
  EXPECT_EQ(load_corpus_file(dir / "art3.jsonl", std::nullopt), art3_corpus());
  EXPECT_EQ(load_corpus_file(dir / "art3_csv", std::nullopt), art3_corpus());
  EXPECT_EQ(load_corpus_file(dir / "art3_csv" / "articles.csv", std::nullopt),
            art3_corpus());
  EXPECT_THROW(load_corpus_file(dir / "missing.jsonl", std::nullopt), Error);
}

TEST(LoadCorpusTest, RoundTripBothFormats) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const CitationCorpus corpus = testing::random_corpus(rng, 30);
    std::stringstream jsonl;
    write_jsonl(corpus, jsonl);
    EXPECT_EQ(load_jsonl(jsonl, {.strict = false}), corpus);

    std::stringstream articles, citations;
    write_csv(corpus, articles, citations);
    EXPECT_EQ(load_csv(articles, citations, {.strict = false}), corpus);
  }
}

TEST(LoadCorpusTest, WriteJsonlIsCanonical) {
  std::ostringstream out;
  write_jsonl(art3_corpus(), out);
  EXPECT_EQ(out.str(),
            "{\"authors\":[\"b3\"],\"cites\":[],\"id\":\"ART-3\"}\n"
            "{\"authors\":[\"a1\",\"a2\",\"a3\",\"a5\",\"a6\",\"a7\"],"
            "\"cites\":[\"ART-3\"],\"id\":\"ART-3-C1\"}\n"
            "{\"authors\":[\"a1\",\"a2\",\"a3\",\"a4\"],\"cites\":[\"ART-3\"],"
            "\"id\":\"ART-3-C2\"}\n"
            "{\"authors\":[\"a3\",\"a4\"],\"cites\":[\"ART-3\"],"
            "\"id\":\"ART-3-C3\"}\n");
}

// ----------------------------------------------------------------------------
// CitationCorpus / validate
// ----------------------------------------------------------------------------

TEST(CitationCorpusTest, DuplicateIdRejected) {
  EXPECT_THROW(CitationCorpus({{"x", ids({"a"})}, {"x", ids({"b"})}}, {}),
               DuplicateArticleError);
}

TEST(ValidateTest, CleanFixture) {
  const ValidationReport report = validate(art3_corpus());
  EXPECT_TRUE(report.ok());
  EXPECT_TRUE(report.warnings.empty());
}

TEST(ValidateTest, DanglingEdge) {
  const CitationCorpus corpus({{"p", ids({"a"})}}, {{"p", "X"}});
  const ValidationReport report = validate(corpus);
  ASSERT_EQ(report.errors.size(), 1u);
  EXPECT_EQ(report.errors[0].kind, IssueKind::kDanglingCitation);
  EXPECT_EQ(report.errors[0].subject, "p->X");
}

TEST(ValidateTest, BothEndpointsDangling) {
  const CitationCorpus corpus({{"p", ids({"a"})}}, {{"Y", "X"}});
  EXPECT_EQ(validate(corpus).errors.size(), 2u);
}

TEST(ValidateTest, EmptyAuthorList) {
  const CitationCorpus corpus({{"p", {}}, {"q", ids({"a"})}}, {{"p", "q"}});
  const ValidationReport report = validate(corpus);
  ASSERT_EQ(report.errors.size(), 1u);
  EXPECT_EQ(report.errors[0].kind, IssueKind::kEmptyAuthorList);
  EXPECT_EQ(report.errors[0].subject, "p");
}

TEST(ValidateTest, SelfEdge) {
  const CitationCorpus corpus({{"p", ids({"a"})}}, {{"p", "p"}});
  const ValidationReport report = validate(corpus);
  ASSERT_EQ(report.errors.size(), 1u);
  EXPECT_EQ(report.errors[0].kind, IssueKind::kSelfCitation);
}

TEST(ValidateTest, IsolatedArticleWarns) {
  const CitationCorpus corpus(
      {{"p", ids({"a"})}, {"q", ids({"b"})}, {"r", ids({"c"})}}, {{"p", "q"}});
  const ValidationReport report = validate(corpus);
  EXPECT_TRUE(report.ok());
  ASSERT_EQ(report.warnings.size(), 1u);
  EXPECT_EQ(report.warnings[0].kind, IssueKind::kIsolatedArticle);
  EXPECT_EQ(report.warnings[0].subject, "r");
}

// ----------------------------------------------------------------------------
// citing_articles / author_articles
// ----------------------------------------------------------------------------

TEST(CitingArticlesTest, Art3) {
  EXPECT_EQ(article_ids(citing_articles(art3_corpus(), "ART-3")),
            (std::vector<std::string>{"ART-3-C1", "ART-3-C2", "ART-3-C3"}));
}

TEST(CitingArticlesTest, FullOverlapCiters) {
  const auto citers = citing_articles(art12_corpus(), "ART-2");
  ASSERT_EQ(citers.size(), 3u);
  for (const Article& a : citers) EXPECT_EQ(a.authors, ids({"a1"}));
}

TEST(CitingArticlesTest, UncitedAndUnknown) {
  EXPECT_TRUE(citing_articles(art3_corpus(), "ART-3-C1").empty());
  EXPECT_THROW(citing_articles(art3_corpus(), "nope"), UnknownArticleError);
}

TEST(AuthorArticlesTest, Art3) {
  const CitationCorpus corpus = art3_corpus();
  EXPECT_EQ(article_ids(author_articles(corpus, AuthorId("a3"))),
            (std::vector<std::string>{"ART-3-C1", "ART-3-C2", "ART-3-C3"}));
  EXPECT_EQ(author_articles(corpus, AuthorId("a5")).size(), 1u);
  EXPECT_TRUE(author_articles(corpus, AuthorId("nobody")).empty());
}

TEST(CitingArticlesTest, CitersSumToEdgeCount) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const CitationCorpus corpus = testing::random_corpus(rng);
    std::size_t total = 0;
    for (const auto& [id, article] : corpus.articles()) {
      total += citing_articles(corpus, id).size();
    }
    EXPECT_EQ(total, corpus.citations().size());
  }
}

}  // namespace
}  // namespace sciento
