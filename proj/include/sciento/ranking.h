#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sciento/corpus.h"
#include "sciento/error.h"
#include "sciento/indices.h"

namespace sciento {

struct RankedRow {
  AuthorId author;
  std::int64_t value = 0;
  std::int64_t rank = 0;

  friend bool operator==(const RankedRow&, const RankedRow&) = default;
};

// Rows sorted by value non-increasing, then author ascending. Equal values
// share a rank; each new distinct value takes the next integer rank.
struct RankedTable {
  IndexKind kind = IndexKind::kH;
  std::vector<RankedRow> rows;

  friend bool operator==(const RankedTable&, const RankedTable&) = default;
};

// delta = base_rank - other_rank, so a positive delta means the author
// climbed in the other ranking.
struct RankDelta {
  AuthorId author;
  std::int64_t base_rank = 0;
  std::int64_t other_rank = 0;
  std::int64_t delta = 0;

  friend bool operator==(const RankDelta&, const RankDelta&) = default;
};

// Deltas for the common cohort plus the authors present in only one table.
struct DeltaReport {
  IndexKind base = IndexKind::kH;
  IndexKind other = IndexKind::kFS2;
  std::vector<RankDelta> deltas;
  std::vector<AuthorId> only_in_base;
  std::vector<AuthorId> only_in_other;

  bool cohorts_match() const {
    return only_in_base.empty() && only_in_other.empty();
  }
  friend bool operator==(const DeltaReport&, const DeltaReport&) = default;
};

class AuthorSetMismatchError : public Error {
 public:
  AuthorSetMismatchError(std::vector<AuthorId> only_in_base,
                         std::vector<AuthorId> only_in_other);
  const std::vector<AuthorId>& only_in_base() const { return only_in_base_; }
  const std::vector<AuthorId>& only_in_other() const { return only_in_other_; }

 private:
  std::vector<AuthorId> only_in_base_;
  std::vector<AuthorId> only_in_other_;
};

// Throws NotSortedError when `values` is not non-increasing.
std::vector<std::int64_t> dense_rank(std::span<const std::int64_t> values);

// Builds a table from arbitrary (author, value) pairs, keeping values >=
// min_value.
RankedTable make_ranked_table(
    IndexKind kind, std::vector<std::pair<AuthorId, std::int64_t>> values,
    std::int64_t min_value = 0);

// Throws std::invalid_argument when min_value < 0.
RankedTable rank_scientists(const CitationCorpus& corpus, IndexKind kind,
                            std::int64_t min_value = 0);

// Same, from precomputed profiles.
RankedTable rank_profiles(std::span<const IndexProfile> profiles,
                          IndexKind kind, std::int64_t min_value = 0);

// Sorted by delta descending, then author. Throws AuthorSetMismatchError when
// the two tables cover different authors.
std::vector<RankDelta> rank_delta(const RankedTable& base,
                                  const RankedTable& other);

// Like rank_delta but never throws: the symmetric difference is returned
// alongside the deltas of the common authors.
DeltaReport compare_rankings(const RankedTable& base, const RankedTable& other);

enum class ReportFormat { kTsv, kJson, kMarkdown };

std::string_view to_string(ReportFormat format);
std::optional<ReportFormat> parse_report_format(std::string_view name);

// tsv: "rank\tauthor\tvalue" header then one row per line.
// json: array of {"rank", "author", "value"} objects ("[]" when empty).
// markdown: pipe table.
std::string render_table(const RankedTable& table, ReportFormat format);

// tsv header: "author\trank_<base>\trank_<other>\tdelta"; deltas are signed
// ("+6", "-2", "0") in tsv and markdown, plain integers in json.
std::string render_deltas(std::span<const RankDelta> deltas, IndexKind base,
                          IndexKind other, ReportFormat format);

// Inverse of render_table(..., kJson). Throws ParseError.
RankedTable parse_table_json(std::string_view text, IndexKind kind);
// Inverse of render_deltas(..., kJson). Throws ParseError.
std::vector<RankDelta> parse_deltas_json(std::string_view text);

}  // namespace sciento
