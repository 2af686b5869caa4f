#include "sciento/penetration.h"

#include <set>
#include <string>

namespace sciento {

std::string_view to_string(SpreadingKind kind) {
  switch (kind) {
    case SpreadingKind::kS1:
      return "s1";
    case SpreadingKind::kS2:
      return "s2";
    case SpreadingKind::kS3:
      return "s3";
  }
  return "?";
}

std::optional<SpreadingKind> parse_spreading_kind(std::string_view name) {
  for (SpreadingKind kind : kAllSpreadingKinds) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

std::map<AuthorId, std::int64_t> occurrence_multiplicities(
    std::span<const std::vector<AuthorId>> citing_author_sets) {
  std::map<AuthorId, std::int64_t> counts;
  for (const std::vector<AuthorId>& authors : citing_author_sets) {
    std::set<AuthorId> distinct(authors.begin(), authors.end());
    for (const AuthorId& a : distinct) ++counts[a];
  }
  return counts;
}

PenetrationVector penetration_from_author_sets(
    std::span<const std::vector<AuthorId>> citing_author_sets) {
  PenetrationVector pv;
  pv.nca = static_cast<std::int64_t>(citing_author_sets.size());
  const auto multiplicities = occurrence_multiplicities(citing_author_sets);
  pv.distinct_authors = static_cast<std::int64_t>(multiplicities.size());

  // |F_i| for i = 1..nca.
  std::vector<std::int64_t> class_sizes(static_cast<std::size_t>(pv.nca), 0);
  for (const auto& [author, m] : multiplicities) ++class_sizes[m - 1];

  pv.coords.reserve(class_sizes.size());
  for (std::size_t i = 0; i < class_sizes.size(); ++i) {
    // Citers without authors (lenient corpora only) leave D = 0; the vector
    // then carries no mass.
    pv.coords.push_back(pv.distinct_authors == 0
                            ? Rational(0)
                            : Rational(class_sizes[i], pv.distinct_authors));
    if (class_sizes[i] > 0) pv.last_nonzero = static_cast<std::int64_t>(i) + 1;
  }
  return pv;
}

PenetrationVector penetration_vector(const CitationCorpus& corpus,
                                     std::string_view cited_id) {
  std::vector<std::vector<AuthorId>> sets;
  for (const Article& citer : citing_articles(corpus, cited_id)) {
    sets.push_back(citer.authors);
  }
  return penetration_from_author_sets(sets);
}

std::vector<Rational> spreading_vector(SpreadingKind kind, std::int64_t nca,
                                       std::int64_t k) {
  if (nca < 1 || k < 1 || k > nca) {
    throw InvalidDimensionsError("spreading_vector: need nca >= 1 and "
                                 "1 <= k <= nca, got nca=" +
                                 std::to_string(nca) +
                                 " k=" + std::to_string(k));
  }
  std::vector<Rational> weights(static_cast<std::size_t>(nca), Rational(0));
  switch (kind) {
    case SpreadingKind::kS1:
      for (std::int64_t i = 0; i < nca; ++i) weights[i] = Rational(nca - i);
      break;
    case SpreadingKind::kS2:
      weights[0] = Rational(nca);
      break;
    case SpreadingKind::kS3: {
      const Rational step(nca, k);
      for (std::int64_t i = 0; i < k; ++i) {
        weights[i] = Rational(nca) - step * i;
      }
      break;
    }
  }
  return weights;
}

Rational penetration_score(const PenetrationVector& pv, SpreadingKind kind) {
  if (pv.nca == 0 || pv.last_nonzero == 0) return Rational(0);
  const std::vector<Rational> weights =
      spreading_vector(kind, pv.nca, pv.last_nonzero);
  Rational score(0);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    score += pv.coords[i] * weights[i];
  }
  return score;
}

}  // namespace sciento
