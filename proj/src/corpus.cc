#include "sciento/corpus.h"

#include <algorithm>
#include <string>
#include <utility>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

namespace sciento {
namespace {

const icu::Normalizer2& nfc() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* normalizer = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || normalizer == nullptr) {
    throw Error(std::string("ICU NFC normalizer unavailable: ") +
                u_errorName(status));
  }
  return *normalizer;
}

icu::UnicodeString to_nfc(const icu::UnicodeString& text) {
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString out = nfc().normalize(text, status);
  if (U_FAILURE(status)) {
    throw Error(std::string("NFC normalization failed: ") +
                u_errorName(status));
  }
  return out;
}

// Trim and collapse every run of Unicode white space to one U+0020.
icu::UnicodeString collapse_whitespace(const icu::UnicodeString& text) {
  icu::UnicodeString out;
  bool pending_space = false;
  for (int32_t i = 0; i < text.length();) {
    UChar32 c = text.char32At(i);
    i += U16_LENGTH(c);
    if (u_isUWhiteSpace(c)) {
      pending_space = !out.isEmpty();
      continue;
    }
    if (pending_space) out.append(static_cast<UChar>(0x20));
    pending_space = false;
    out.append(c);
  }
  return out;
}

std::string normalized_utf8(std::string_view raw, CaseFolding folding) {
  icu::UnicodeString text = icu::UnicodeString::fromUTF8(
      icu::StringPiece(raw.data(), static_cast<int32_t>(raw.size())));
  text = collapse_whitespace(to_nfc(text));
  if (folding == CaseFolding::kFold) {
    text.foldCase();
    text = to_nfc(text);
  }
  std::string out;
  text.toUTF8String(out);
  return out;
}

const std::vector<std::string>& empty_ids() {
  static const std::vector<std::string> kEmpty;
  return kEmpty;
}

template <typename Map, typename Key>
const std::vector<std::string>& lookup(const Map& map, const Key& key) {
  auto it = map.find(key);
  return it == map.end() ? empty_ids() : it->second;
}

}  // namespace

AuthorId::AuthorId(std::string_view raw, CaseFolding folding)
    : value_(normalized_utf8(raw, folding)) {
  if (value_.empty()) throw EmptyAuthorError();
}

AuthorId normalize_author(std::string_view raw, CaseFolding folding) {
  return AuthorId(raw, folding);
}

CitationCorpus::CitationCorpus(std::vector<Article> articles,
                               std::vector<Citation> citations) {
  for (Article& article : articles) {
    std::vector<AuthorId> unique;
    unique.reserve(article.authors.size());
    for (AuthorId& author : article.authors) {
      if (std::find(unique.begin(), unique.end(), author) == unique.end()) {
        unique.push_back(std::move(author));
      }
    }
    article.authors = std::move(unique);
    std::string id = article.id;
    auto [it, inserted] = articles_.emplace(std::move(id), std::move(article));
    if (!inserted) throw DuplicateArticleError(it->first);
  }
  citations_.insert(std::make_move_iterator(citations.begin()),
                    std::make_move_iterator(citations.end()));

  // Set iteration is ordered by (citing, cited), so both index lists come out
  // ascending without a sort.
  for (const Citation& c : citations_) {
    citers_[c.cited].push_back(c.citing);
    cites_[c.citing].push_back(c.cited);
  }
  for (const auto& [id, article] : articles_) {
    for (const AuthorId& author : article.authors) {
      authored_[author].push_back(id);
    }
  }
}

bool CitationCorpus::contains(std::string_view id) const {
  return articles_.find(id) != articles_.end();
}

const Article& CitationCorpus::article(std::string_view id) const {
  auto it = articles_.find(id);
  if (it == articles_.end()) throw UnknownArticleError(std::string(id));
  return it->second;
}

const std::vector<std::string>& CitationCorpus::citer_ids(
    std::string_view cited) const {
  return lookup(citers_, cited);
}

const std::vector<std::string>& CitationCorpus::cited_ids(
    std::string_view citing) const {
  return lookup(cites_, citing);
}

const std::vector<std::string>& CitationCorpus::authored_ids(
    const AuthorId& author) const {
  return lookup(authored_, author);
}

std::vector<AuthorId> CitationCorpus::authors() const {
  std::vector<AuthorId> out;
  out.reserve(authored_.size());
  for (const auto& [author, ids] : authored_) out.push_back(author);
  return out;
}

std::vector<Article> citing_articles(const CitationCorpus& corpus,
                                     std::string_view cited_id) {
  if (!corpus.contains(cited_id)) {
    throw UnknownArticleError(std::string(cited_id));
  }
  std::vector<Article> out;
  for (const std::string& id : corpus.citer_ids(cited_id)) {
    // Dangling citing ends only exist in lenient corpora; skip them here.
    if (corpus.contains(id)) out.push_back(corpus.article(id));
  }
  return out;
}

std::vector<Article> author_articles(const CitationCorpus& corpus,
                                     const AuthorId& author) {
  std::vector<Article> out;
  for (const std::string& id : corpus.authored_ids(author)) {
    out.push_back(corpus.article(id));
  }
  return out;
}

std::string_view to_string(IssueKind kind) {
  switch (kind) {
    case IssueKind::kDanglingCitation:
      return "DanglingCitation";
    case IssueKind::kEmptyAuthorList:
      return "EmptyAuthorList";
    case IssueKind::kSelfCitation:
      return "SelfCitation";
    case IssueKind::kIsolatedArticle:
      return "IsolatedArticle";
  }
  return "Unknown";
}

ValidationReport validate(const CitationCorpus& corpus) {
  ValidationReport report;
  for (const Citation& c : corpus.citations()) {
    const std::string edge = c.citing + "->" + c.cited;
    if (!corpus.contains(c.citing)) {
      report.errors.push_back({IssueKind::kDanglingCitation, edge,
                               "citing article '" + c.citing + "' is unknown"});
    }
    if (!corpus.contains(c.cited)) {
      report.errors.push_back({IssueKind::kDanglingCitation, edge,
                               "cited article '" + c.cited + "' is unknown"});
    }
    if (c.citing == c.cited) {
      report.errors.push_back(
          {IssueKind::kSelfCitation, edge, "article cites itself"});
    }
  }
  for (const auto& [id, article] : corpus.articles()) {
    if (article.authors.empty()) {
      report.errors.push_back(
          {IssueKind::kEmptyAuthorList, id, "article has no authors"});
    }
    if (corpus.citer_ids(id).empty() && corpus.cited_ids(id).empty()) {
      report.warnings.push_back({IssueKind::kIsolatedArticle, id,
                                 "article neither cites nor is cited"});
    }
  }
  return report;
}

CorpusValidationError::CorpusValidationError(ValidationReport report)
    : Error("corpus failed validation: " +
            std::to_string(report.errors.size()) + " error(s), first: " +
            (report.errors.empty() ? std::string("none")
                                   : report.errors.front().subject + ": " +
                                         report.errors.front().message)),
      report_(std::move(report)) {}

}  // namespace sciento
