#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sciento/corpus.h"
#include "sciento/rational.h"

namespace sciento {

// How widely an article's citations reach distinct authors.
//
// coords[i] is the share of distinct citing authors that appear in exactly
// i + 1 citing articles, so for nca >= 1 and at least one citing author the
// coordinates sum to one.
struct PenetrationVector {
  std::int64_t nca = 0;               // number of citing articles
  std::int64_t distinct_authors = 0;  // D
  std::vector<Rational> coords;       // length nca
  std::int64_t last_nonzero = 0;      // 1-based k; 0 when every coord is 0

  friend bool operator==(const PenetrationVector&,
                         const PenetrationVector&) = default;
};

enum class SpreadingKind { kS1, kS2, kS3 };

inline constexpr SpreadingKind kAllSpreadingKinds[] = {
    SpreadingKind::kS1, SpreadingKind::kS2, SpreadingKind::kS3};

std::string_view to_string(SpreadingKind kind);  // "s1", "s2", "s3"
std::optional<SpreadingKind> parse_spreading_kind(std::string_view name);

// Number of sets each author occurs in. Each input list is read as a set.
std::map<AuthorId, std::int64_t> occurrence_multiplicities(
    std::span<const std::vector<AuthorId>> citing_author_sets);

// Penetration vector of one article given its citers' author lists.
PenetrationVector penetration_from_author_sets(
    std::span<const std::vector<AuthorId>> citing_author_sets);

// Throws UnknownArticleError.
PenetrationVector penetration_vector(const CitationCorpus& corpus,
                                     std::string_view cited_id);

// Weights for the dot product with a penetration vector:
//   S1: nca, nca-1, ..., 1
//   S2: nca, 0, ..., 0
//   S3: nca - (i-1)*nca/k for i <= k, then 0.
// Throws InvalidDimensionsError unless nca >= 1 and 1 <= k <= nca.
std::vector<Rational> spreading_vector(SpreadingKind kind, std::int64_t nca,
                                       std::int64_t k);

// N_f = f . s. Zero for uncited articles and for vectors with no mass.
Rational penetration_score(const PenetrationVector& pv, SpreadingKind kind);

}  // namespace sciento
