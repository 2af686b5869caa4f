#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sciento/error.h"

namespace sciento {

enum class CaseFolding { kSensitive, kFold };

// Normalized author identity. Construction always normalizes: NFC, trimmed,
// internal whitespace runs collapsed to one space, optionally case-folded.
// Two ids are equal iff their normalized UTF-8 bytes are equal.
class AuthorId {
 public:
  explicit AuthorId(std::string_view raw,
                    CaseFolding folding = CaseFolding::kSensitive);

  const std::string& str() const noexcept { return value_; }

  friend bool operator==(const AuthorId&, const AuthorId&) = default;
  friend auto operator<=>(const AuthorId&, const AuthorId&) = default;

 private:
  std::string value_;
};

// Throws EmptyAuthorError when nothing is left after normalization.
AuthorId normalize_author(std::string_view raw,
                          CaseFolding folding = CaseFolding::kSensitive);

struct Article {
  std::string id;
  std::vector<AuthorId> authors;  // ordered, duplicate-free

  friend bool operator==(const Article&, const Article&) = default;
};

struct Citation {
  std::string citing;
  std::string cited;

  friend bool operator==(const Citation&, const Citation&) = default;
  friend auto operator<=>(const Citation&, const Citation&) = default;
};

// Immutable article set plus citation edge set.
//
// The constructor deduplicates author lists (first occurrence wins) and
// collapses repeated edges. It does not reject dangling edges, self-edges or
// empty author lists; those are reported by validate() so that a corpus read
// in lenient mode can still be inspected.
class CitationCorpus {
 public:
  CitationCorpus() = default;
  // Throws DuplicateArticleError when two articles share an id.
  CitationCorpus(std::vector<Article> articles,
                 std::vector<Citation> citations);

  const std::map<std::string, Article, std::less<>>& articles() const {
    return articles_;
  }
  const std::set<Citation>& citations() const { return citations_; }

  bool contains(std::string_view id) const;
  // Throws UnknownArticleError.
  const Article& article(std::string_view id) const;

  // Ascending ids of articles with an edge into `cited`. Empty for unknown ids.
  const std::vector<std::string>& citer_ids(std::string_view cited) const;
  // Ascending ids of articles listing `author`.
  const std::vector<std::string>& authored_ids(const AuthorId& author) const;
  // Ascending ids of articles `citing` points to.
  const std::vector<std::string>& cited_ids(std::string_view citing) const;

  // Every distinct author in the corpus, ascending.
  std::vector<AuthorId> authors() const;

  std::size_t size() const { return articles_.size(); }
  bool empty() const { return articles_.empty(); }

  friend bool operator==(const CitationCorpus& a, const CitationCorpus& b) {
    return a.articles_ == b.articles_ && a.citations_ == b.citations_;
  }

 private:
  std::map<std::string, Article, std::less<>> articles_;
  std::set<Citation> citations_;
  std::map<std::string, std::vector<std::string>, std::less<>> citers_;
  std::map<std::string, std::vector<std::string>, std::less<>> cites_;
  std::map<AuthorId, std::vector<std::string>> authored_;
};

// Articles citing `cited_id`, ascending id. Throws UnknownArticleError.
std::vector<Article> citing_articles(const CitationCorpus& corpus,
                                     std::string_view cited_id);

// Articles authored by `author`, ascending id; empty if the author is unknown.
std::vector<Article> author_articles(const CitationCorpus& corpus,
                                     const AuthorId& author);

enum class IssueKind {
  kDanglingCitation,
  kEmptyAuthorList,
  kSelfCitation,
  kIsolatedArticle,
};

std::string_view to_string(IssueKind kind);

struct Issue {
  IssueKind kind;
  std::string subject;  // article id, or "citing->cited" for edges
  std::string message;

  friend bool operator==(const Issue&, const Issue&) = default;
};

struct ValidationReport {
  std::vector<Issue> errors;
  std::vector<Issue> warnings;

  bool ok() const { return errors.empty(); }
  friend bool operator==(const ValidationReport&,
                         const ValidationReport&) = default;
};

ValidationReport validate(const CitationCorpus& corpus);

// Thrown by strict loads when validate() reports errors.
class CorpusValidationError : public Error {
 public:
  explicit CorpusValidationError(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

enum class CorpusFormat { kJsonl, kCsv };

struct LoadOptions {
  CaseFolding case_folding = CaseFolding::kSensitive;
  // Reject corpora for which validate() reports errors.
  bool strict = true;
};

// One object per line: {"id": ..., "authors": [...], "cites": [...]}.
CitationCorpus load_jsonl(std::istream& in, const LoadOptions& options = {});

// articles.csv (id,authors with '|' separators) + citations.csv
// (citing_id,cited_id). Both start with a header row.
CitationCorpus load_csv(std::istream& articles, std::istream& citations,
                        const LoadOptions& options = {});

// Records in ascending id order; "cites" ascending. Edges whose citing end is
// not an article cannot be expressed in JSONL and are rejected with Error.
void write_jsonl(const CitationCorpus& corpus, std::ostream& out);
void write_csv(const CitationCorpus& corpus, std::ostream& articles,
               std::ostream& citations);

// `path` may be a .jsonl file, an articles .csv file (citations read from a
// sibling citations.csv), or a directory holding both CSV files. Without an
// explicit format the extension decides; directories are CSV.
CitationCorpus load_corpus_file(const std::filesystem::path& path,
                                std::optional<CorpusFormat> format,
                                const LoadOptions& options = {});

}  // namespace sciento
