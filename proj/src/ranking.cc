#include "sciento/ranking.h"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "sciento/json.h"

namespace sciento {
namespace {

using nlohmann::json;

std::string join_authors(const std::vector<AuthorId>& authors) {
  std::string out;
  for (const AuthorId& a : authors) {
    if (!out.empty()) out += ", ";
    out += a.str();
  }
  return out.empty() ? "-" : out;
}

std::string signed_int(std::int64_t v) {
  return v > 0 ? "+" + std::to_string(v) : std::to_string(v);
}

std::string markdown_cell(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::map<AuthorId, std::int64_t> rank_by_author(const RankedTable& table) {
  std::map<AuthorId, std::int64_t> out;
  for (const RankedRow& row : table.rows) out.emplace(row.author, row.rank);
  return out;
}

void sort_deltas(std::vector<RankDelta>& deltas) {
  std::sort(deltas.begin(), deltas.end(),
            [](const RankDelta& a, const RankDelta& b) {
              if (a.delta != b.delta) return a.delta > b.delta;
              return a.author < b.author;
            });
}

}  // namespace

AuthorSetMismatchError::AuthorSetMismatchError(
    std::vector<AuthorId> only_in_base, std::vector<AuthorId> only_in_other)
    : Error("ranked tables cover different authors; only in base: " +
            join_authors(only_in_base) +
            "; only in other: " + join_authors(only_in_other)),
      only_in_base_(std::move(only_in_base)),
      only_in_other_(std::move(only_in_other)) {}

std::vector<std::int64_t> dense_rank(std::span<const std::int64_t> values) {
  std::vector<std::int64_t> ranks;
  ranks.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i == 0) {
      ranks.push_back(1);
    } else if (values[i] > values[i - 1]) {
      throw NotSortedError();
    } else {
      ranks.push_back(values[i] == values[i - 1] ? ranks.back()
                                                 : ranks.back() + 1);
    }
  }
  return ranks;
}

RankedTable make_ranked_table(
    IndexKind kind, std::vector<std::pair<AuthorId, std::int64_t>> values,
    std::int64_t min_value) {
  if (min_value < 0) {
    throw std::invalid_argument("rank: min_value must be non-negative");
  }
  std::erase_if(values, [&](const auto& p) { return p.second < min_value; });
  std::sort(values.begin(), values.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::vector<std::int64_t> sorted_values;
  sorted_values.reserve(values.size());
  for (const auto& [author, value] : values) sorted_values.push_back(value);
  const std::vector<std::int64_t> ranks = dense_rank(sorted_values);

  RankedTable table{kind, {}};
  table.rows.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    table.rows.push_back({std::move(values[i].first), values[i].second,
                          ranks[i]});
  }
  return table;
}

RankedTable rank_profiles(std::span<const IndexProfile> profiles,
                          IndexKind kind, std::int64_t min_value) {
  std::vector<std::pair<AuthorId, std::int64_t>> values;
  values.reserve(profiles.size());
  for (const IndexProfile& p : profiles) {
    values.emplace_back(p.author, p.value(kind));
  }
  return make_ranked_table(kind, std::move(values), min_value);
}

RankedTable rank_scientists(const CitationCorpus& corpus, IndexKind kind,
                            std::int64_t min_value) {
  if (min_value < 0) {
    throw std::invalid_argument("rank: min_value must be non-negative");
  }
  const std::vector<IndexProfile> profiles = index_profiles(corpus);
  return rank_profiles(profiles, kind, min_value);
}

DeltaReport compare_rankings(const RankedTable& base,
                             const RankedTable& other) {
  DeltaReport report{base.kind, other.kind, {}, {}, {}};
  const auto base_ranks = rank_by_author(base);
  const auto other_ranks = rank_by_author(other);
  for (const auto& [author, rank] : base_ranks) {
    auto it = other_ranks.find(author);
    if (it == other_ranks.end()) {
      report.only_in_base.push_back(author);
    } else {
      report.deltas.push_back({author, rank, it->second, rank - it->second});
    }
  }
  for (const auto& [author, rank] : other_ranks) {
    if (!base_ranks.contains(author)) report.only_in_other.push_back(author);
  }
  sort_deltas(report.deltas);
  return report;
}

std::vector<RankDelta> rank_delta(const RankedTable& base,
                                  const RankedTable& other) {
  DeltaReport report = compare_rankings(base, other);
  if (!report.cohorts_match()) {
    throw AuthorSetMismatchError(std::move(report.only_in_base),
                                 std::move(report.only_in_other));
  }
  return std::move(report.deltas);
}

std::string_view to_string(ReportFormat format) {
  switch (format) {
    case ReportFormat::kTsv:
      return "tsv";
    case ReportFormat::kJson:
      return "json";
    case ReportFormat::kMarkdown:
      return "markdown";
  }
  return "?";
}

std::optional<ReportFormat> parse_report_format(std::string_view name) {
  for (ReportFormat f :
       {ReportFormat::kTsv, ReportFormat::kJson, ReportFormat::kMarkdown}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

std::string render_table(const RankedTable& table, ReportFormat format) {
  std::ostringstream out;
  switch (format) {
    case ReportFormat::kJson:
      return json(table.rows).dump(2);
    case ReportFormat::kTsv:
      out << "rank\tauthor\tvalue\n";
      for (const RankedRow& row : table.rows) {
        out << row.rank << '\t' << row.author.str() << '\t' << row.value
            << '\n';
      }
      break;
    case ReportFormat::kMarkdown:
      out << "| rank | author | " << to_string(table.kind) << " |\n"
          << "| ---: | --- | ---: |\n";
      for (const RankedRow& row : table.rows) {
        out << "| " << row.rank << " | " << markdown_cell(row.author.str())
            << " | " << row.value << " |\n";
      }
      break;
  }
  return out.str();
}

std::string render_deltas(std::span<const RankDelta> deltas, IndexKind base,
                          IndexKind other, ReportFormat format) {
  std::ostringstream out;
  const std::string base_col = "rank_" + std::string(to_string(base));
  const std::string other_col = "rank_" + std::string(to_string(other));
  switch (format) {
    case ReportFormat::kJson:
      return json(std::vector<RankDelta>(deltas.begin(), deltas.end()))
          .dump(2);
    case ReportFormat::kTsv:
      out << "author\t" << base_col << '\t' << other_col << "\tdelta\n";
      for (const RankDelta& d : deltas) {
        out << d.author.str() << '\t' << d.base_rank << '\t' << d.other_rank
            << '\t' << signed_int(d.delta) << '\n';
      }
      break;
    case ReportFormat::kMarkdown:
      out << "| author | " << base_col << " | " << other_col
          << " | delta |\n| --- | ---: | ---: | ---: |\n";
      for (const RankDelta& d : deltas) {
        out << "| " << markdown_cell(d.author.str()) << " | " << d.base_rank
            << " | " << d.other_rank << " | " << signed_int(d.delta)
            << " |\n";
      }
      break;
  }
  return out.str();
}

RankedTable parse_table_json(std::string_view text, IndexKind kind) {
  try {
    return {kind, json::parse(text).get<std::vector<RankedRow>>()};
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("ranked table JSON: ") + e.what());
  }
}

std::vector<RankDelta> parse_deltas_json(std::string_view text) {
  try {
    return json::parse(text).get<std::vector<RankDelta>>();
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("rank delta JSON: ") + e.what());
  }
}

}  // namespace sciento
