#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sciento/corpus.h"
#include "sciento/penetration.h"
#include "sciento/rational.h"

namespace sciento {

enum class IndexKind { kH, kFS1, kFS2, kFS3 };

inline constexpr IndexKind kAllIndexKinds[] = {IndexKind::kH, IndexKind::kFS1,
                                               IndexKind::kFS2,
                                               IndexKind::kFS3};

std::string_view to_string(IndexKind kind);  // "h", "fs1", "fs2", "fs3"
std::optional<IndexKind> parse_index_kind(std::string_view name);

struct IndexProfile {
  AuthorId author;
  std::int64_t h = 0;
  std::int64_t f_s1 = 0;
  std::int64_t f_s2 = 0;
  std::int64_t f_s3 = 0;

  std::int64_t value(IndexKind kind) const;

  friend bool operator==(const IndexProfile&, const IndexProfile&) = default;
};

// Largest r >= 1 such that the r-th largest value is >= r, or 0.
// Throws NegativeValueError.
std::int64_t hirsch_point(std::span<const Rational> values);
std::int64_t hirsch_point(std::span<const std::int64_t> values);

// nca of each article by `author`, ascending article id.
std::vector<std::int64_t> citation_counts(const CitationCorpus& corpus,
                                          const AuthorId& author);

std::int64_t h_index(const CitationCorpus& corpus, const AuthorId& author);

std::int64_t f_index(const CitationCorpus& corpus, const AuthorId& author,
                     SpreadingKind kind);

IndexProfile index_profile(const CitationCorpus& corpus,
                           const AuthorId& author);

// Profiles of every author in the corpus, ascending author. Each article's
// penetration vector is computed once.
std::vector<IndexProfile> index_profiles(const CitationCorpus& corpus);

}  // namespace sciento
