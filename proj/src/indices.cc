#include "sciento/indices.h"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

namespace sciento {
namespace {

template <typename T>
std::int64_t hirsch_point_impl(std::span<const T> values) {
  std::vector<T> sorted(values.begin(), values.end());
  for (const T& v : sorted) {
    if (v < 0) throw NegativeValueError();
  }
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::int64_t r = 0;
  while (r < static_cast<std::int64_t>(sorted.size()) &&
         sorted[static_cast<std::size_t>(r)] >= r + 1) {
    ++r;
  }
  return r;
}

struct ArticleScores {
  std::int64_t nca = 0;
  Rational s1, s2, s3;
};

ArticleScores score_article(const CitationCorpus& corpus,
                            std::string_view id) {
  const PenetrationVector pv = penetration_vector(corpus, id);
  return {pv.nca, penetration_score(pv, SpreadingKind::kS1),
          penetration_score(pv, SpreadingKind::kS2),
          penetration_score(pv, SpreadingKind::kS3)};
}

IndexProfile profile_from_scores(const AuthorId& author,
                                 const std::vector<const ArticleScores*>& rows) {
  std::vector<std::int64_t> counts;
  std::vector<Rational> s1, s2, s3;
  for (const ArticleScores* row : rows) {
    counts.push_back(row->nca);
    s1.push_back(row->s1);
    s2.push_back(row->s2);
    s3.push_back(row->s3);
  }
  return {author, hirsch_point(std::span<const std::int64_t>(counts)),
          hirsch_point(std::span<const Rational>(s1)),
          hirsch_point(std::span<const Rational>(s2)),
          hirsch_point(std::span<const Rational>(s3))};
}

}  // namespace

std::string_view to_string(IndexKind kind) {
  switch (kind) {
    case IndexKind::kH:
      return "h";
    case IndexKind::kFS1:
      return "fs1";
    case IndexKind::kFS2:
      return "fs2";
    case IndexKind::kFS3:
      return "fs3";
  }
  return "?";
}

std::optional<IndexKind> parse_index_kind(std::string_view name) {
  for (IndexKind kind : kAllIndexKinds) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

std::int64_t IndexProfile::value(IndexKind kind) const {
  switch (kind) {
    case IndexKind::kH:
      return h;
    case IndexKind::kFS1:
      return f_s1;
    case IndexKind::kFS2:
      return f_s2;
    case IndexKind::kFS3:
      return f_s3;
  }
  return 0;
}

std::int64_t hirsch_point(std::span<const Rational> values) {
  return hirsch_point_impl(values);
}

std::int64_t hirsch_point(std::span<const std::int64_t> values) {
  return hirsch_point_impl(values);
}

std::vector<std::int64_t> citation_counts(const CitationCorpus& corpus,
                                          const AuthorId& author) {
  std::vector<std::int64_t> counts;
  for (const std::string& id : corpus.authored_ids(author)) {
    counts.push_back(
        static_cast<std::int64_t>(citing_articles(corpus, id).size()));
  }
  return counts;
}

std::int64_t h_index(const CitationCorpus& corpus, const AuthorId& author) {
  const std::vector<std::int64_t> counts = citation_counts(corpus, author);
  return hirsch_point(std::span<const std::int64_t>(counts));
}

std::int64_t f_index(const CitationCorpus& corpus, const AuthorId& author,
                     SpreadingKind kind) {
  std::vector<Rational> scores;
  for (const std::string& id : corpus.authored_ids(author)) {
    scores.push_back(penetration_score(penetration_vector(corpus, id), kind));
  }
  return hirsch_point(std::span<const Rational>(scores));
}

IndexProfile index_profile(const CitationCorpus& corpus,
                           const AuthorId& author) {
  std::vector<ArticleScores> scores;
  for (const std::string& id : corpus.authored_ids(author)) {
    scores.push_back(score_article(corpus, id));
  }
  std::vector<const ArticleScores*> rows;
  for (const ArticleScores& s : scores) rows.push_back(&s);
  return profile_from_scores(author, rows);
}

std::vector<IndexProfile> index_profiles(const CitationCorpus& corpus) {
  std::map<std::string, ArticleScores, std::less<>> scores;
  for (const auto& [id, article] : corpus.articles()) {
    scores.emplace(id, score_article(corpus, id));
  }
  std::vector<IndexProfile> profiles;
  for (const AuthorId& author : corpus.authors()) {
    std::vector<const ArticleScores*> rows;
    for (const std::string& id : corpus.authored_ids(author)) {
      rows.push_back(&scores.find(id)->second);
    }
    profiles.push_back(profile_from_scores(author, rows));
  }
  return profiles;
}

}  // namespace sciento
