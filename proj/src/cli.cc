#include "sciento/cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "sciento/corpus.h"
#include "sciento/indices.h"
#include "sciento/json.h"
#include "sciento/penetration.h"
#include "sciento/ranking.h"
#include "sciento/spamlab.h"

namespace sciento {
namespace {

using nlohmann::json;

// Raised for flag combinations CLI11 cannot express.
class UsageError : public Error {
 public:
  using Error::Error;
};

const std::vector<std::string> kReportFormats = {"tsv", "json", "markdown"};
const std::vector<std::string> kIndexNames = {"h", "fs1", "fs2", "fs3"};

struct CorpusFlags {
  std::string path;
  std::string input_format;  // empty: infer from extension
};

void add_corpus_flags(CLI::App* cmd, CorpusFlags& flags, bool required) {
  auto* opt = cmd->add_option("--corpus", flags.path,
                              "Corpus file (.jsonl / articles .csv) or "
                              "directory with articles.csv + citations.csv");
  if (required) opt->required();
  cmd->add_option("--input-format", flags.input_format,
                  "Override format inference")
      ->check(CLI::IsMember({"jsonl", "csv"}));
}

CaseFolding case_folding_from_env() {
  const char* v = std::getenv("SCIENTO_CASEFOLD");
  return (v != nullptr && std::string(v) == "1") ? CaseFolding::kFold
                                                 : CaseFolding::kSensitive;
}

CitationCorpus load(const CorpusFlags& flags, bool strict) {
  std::optional<CorpusFormat> format;
  if (flags.input_format == "jsonl") format = CorpusFormat::kJsonl;
  if (flags.input_format == "csv") format = CorpusFormat::kCsv;
  return load_corpus_file(flags.path, format,
                          {case_folding_from_env(), strict});
}

ReportFormat report_format(const std::string& name) {
  return *parse_report_format(name);
}

void print_issues(std::ostream& out, const char* level,
                  const std::vector<Issue>& issues) {
  for (const Issue& i : issues) {
    out << level << '\t' << to_string(i.kind) << '\t' << i.subject << '\t'
        << i.message << '\n';
  }
}

// Two-column "field/value" rendering shared by score and spam reports.
void print_fields(std::ostream& out, ReportFormat format,
                  const std::vector<std::pair<std::string, std::string>>& rows) {
  if (format == ReportFormat::kMarkdown) {
    out << "| field | value |\n| --- | --- |\n";
    for (const auto& [k, v] : rows) out << "| " << k << " | " << v << " |\n";
  } else {
    for (const auto& [k, v] : rows) out << k << '\t' << v << '\n';
  }
}

// ---------------------------------------------------------------------------

int cmd_validate(const CorpusFlags& corpus_flags, const std::string& fmt,
                 std::ostream& out) {
  const ValidationReport report = validate(load(corpus_flags, false));
  if (report_format(fmt) == ReportFormat::kJson) {
    out << json(report).dump(2) << '\n';
  } else {
    out << "level\tkind\tsubject\tmessage\n";
    print_issues(out, "error", report.errors);
    print_issues(out, "warning", report.warnings);
  }
  return report.ok() ? kExitOk : kExitFailure;
}

int cmd_score(const CorpusFlags& corpus_flags, const std::string& article,
              const std::string& fmt, std::ostream& out) {
  const CitationCorpus corpus = load(corpus_flags, true);
  const PenetrationVector pv = penetration_vector(corpus, article);
  const ReportFormat format = report_format(fmt);
  if (format == ReportFormat::kJson) {
    json scores = json::object();
    for (SpreadingKind kind : kAllSpreadingKinds) {
      scores[std::string(to_string(kind))] = penetration_score(pv, kind);
    }
    out << json{{"article", article}, {"penetration", pv}, {"scores", scores}}
               .dump(2)
        << '\n';
    return kExitOk;
  }
  std::string coords;
  for (const Rational& c : pv.coords) {
    if (!coords.empty()) coords += ", ";
    coords += to_fraction_string(c);
  }
  std::vector<std::pair<std::string, std::string>> rows = {
      {"article", article},
      {"nca", std::to_string(pv.nca)},
      {"distinct_authors", std::to_string(pv.distinct_authors)},
      {"f", coords.empty() ? "-" : coords},
      {"last_nonzero", std::to_string(pv.last_nonzero)}};
  for (SpreadingKind kind : kAllSpreadingKinds) {
    rows.emplace_back("N_f(" + std::string(to_string(kind)) + ")",
                      to_decimal_string(penetration_score(pv, kind)));
  }
  print_fields(out, format, rows);
  return kExitOk;
}

int cmd_profile(const CorpusFlags& corpus_flags, const std::string& author,
                const std::string& fmt, std::ostream& out) {
  const CitationCorpus corpus = load(corpus_flags, true);
  const IndexProfile p =
      index_profile(corpus, AuthorId(author, case_folding_from_env()));
  switch (report_format(fmt)) {
    case ReportFormat::kJson:
      out << json(p).dump(2) << '\n';
      break;
    case ReportFormat::kTsv:
      out << "author\th\tfs1\tfs2\tfs3\n"
          << p.author.str() << '\t' << p.h << '\t' << p.f_s1 << '\t'
          << p.f_s2 << '\t' << p.f_s3 << '\n';
      break;
    case ReportFormat::kMarkdown:
      out << "| author | h | fs1 | fs2 | fs3 |\n| --- | ---: | ---: | ---: | "
             "---: |\n"
          << "| " << p.author.str() << " | " << p.h << " | " << p.f_s1
          << " | " << p.f_s2 << " | " << p.f_s3 << " |\n";
      break;
  }
  return kExitOk;
}

void print_rendered(std::ostream& out, const std::string& text) {
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

int cmd_rank(const CorpusFlags& corpus_flags, const std::string& index,
             std::int64_t min_value, const std::string& fmt,
             std::ostream& out) {
  const CitationCorpus corpus = load(corpus_flags, true);
  const RankedTable table =
      rank_scientists(corpus, *parse_index_kind(index), min_value);
  print_rendered(out, render_table(table, report_format(fmt)));
  return kExitOk;
}

RankedTable read_table_file(const std::string& path, IndexKind kind) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_table_json(buffer.str(), kind);
}

struct CompareFlags {
  std::string base = "h";
  std::string other = "fs2";
  std::int64_t min_value = 0;
  std::string base_table;
  std::string other_table;
  std::string format = "tsv";
};

int cmd_compare(const CorpusFlags& corpus_flags, const CompareFlags& flags,
                std::ostream& out, std::ostream& err) {
  const IndexKind base_kind = *parse_index_kind(flags.base);
  const IndexKind other_kind = *parse_index_kind(flags.other);
  const bool from_files = !flags.base_table.empty();
  if (from_files == flags.other_table.empty()) {
    throw UsageError("--base-table and --other-table must be given together");
  }
  if (!from_files && corpus_flags.path.empty()) {
    throw UsageError("compare needs --corpus or --base-table/--other-table");
  }
  RankedTable base, other;
  if (from_files) {
    base = read_table_file(flags.base_table, base_kind);
    other = read_table_file(flags.other_table, other_kind);
  } else {
    const std::vector<IndexProfile> profiles =
        index_profiles(load(corpus_flags, true));
    base = rank_profiles(profiles, base_kind, flags.min_value);
    other = rank_profiles(profiles, other_kind, flags.min_value);
  }
  const DeltaReport report = compare_rankings(base, other);
  const ReportFormat format = report_format(flags.format);
  if (format == ReportFormat::kJson) {
    out << json(report).dump(2) << '\n';
  } else {
    print_rendered(out, render_deltas(report.deltas, base_kind, other_kind,
                                      format));
  }
  if (report.cohorts_match()) return kExitOk;
  auto list = [&](const char* label, IndexKind kind,
                  const std::vector<AuthorId>& authors) {
    for (const AuthorId& a : authors) {
      err << "only in " << label << " (" << to_string(kind)
          << "): " << a.str() << '\n';
    }
  };
  list("base", base_kind, report.only_in_base);
  list("other", other_kind, report.only_in_other);
  return kExitFailure;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

struct SynthFlags {
  std::string config;
  GeneratorParams params;
  std::vector<std::int64_t> authors_per_paper;
  std::vector<std::int64_t> citations_per_paper;
};

void add_synth_flags(CLI::App* cmd, SynthFlags& f) {
  cmd->add_option("--config", f.config,
                  "Generator parameters as JSON (author_pool, papers, "
                  "authors_per_paper, citations_per_paper, seed)");
  cmd->add_option("--author-pool", f.params.author_pool)->check(CLI::PositiveNumber);
  cmd->add_option("--papers", f.params.papers)->check(CLI::PositiveNumber);
  cmd->add_option("--authors-per-paper", f.authors_per_paper, "MIN MAX")
      ->expected(2);
  cmd->add_option("--citations-per-paper", f.citations_per_paper, "MIN MAX")
      ->expected(2);
  cmd->add_option("--seed", f.params.seed);
}

GeneratorParams resolve_params(SynthFlags f) {
  if (!f.config.empty()) return read_json_file(f.config).get<GeneratorParams>();
  if (f.authors_per_paper.size() == 2) {
    f.params.authors_per_paper = {f.authors_per_paper[0], f.authors_per_paper[1]};
  }
  if (f.citations_per_paper.size() == 2) {
    f.params.citations_per_paper = {f.citations_per_paper[0],
                                    f.citations_per_paper[1]};
  }
  return f.params;
}

void write_corpus(const CitationCorpus& corpus, const std::string& out_path,
                  const std::string& output_format, std::ostream& out) {
  namespace fs = std::filesystem;
  if (output_format == "csv") {
    if (out_path.empty()) throw UsageError("csv output needs --out DIR");
    fs::create_directories(out_path);
    std::ofstream articles(fs::path(out_path) / "articles.csv", std::ios::binary);
    std::ofstream citations(fs::path(out_path) / "citations.csv",
                            std::ios::binary);
    if (!articles || !citations) {
      throw Error("cannot write CSV corpus under '" + out_path + "'");
    }
    write_csv(corpus, articles, citations);
    return;
  }
  if (out_path.empty()) {
    write_jsonl(corpus, out);
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw Error("cannot write '" + out_path + "'");
  write_jsonl(corpus, file);
}

int cmd_synth(const SynthFlags& flags, const std::string& out_path,
              const std::string& output_format, std::ostream& out) {
  write_corpus(generate_corpus(resolve_params(flags)), out_path,
               output_format, out);
  return kExitOk;
}

struct SpamFlags {
  std::string scenario_file;
  std::string variant = "single_citer";
  std::string target;
  std::int64_t spam_papers = 1;
  std::int64_t clique_size = 2;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string format = "json";
};

int cmd_spam(const CorpusFlags& corpus_flags, const SynthFlags& synth,
             const SpamFlags& flags, std::ostream& out) {
  if (corpus_flags.path.empty() == synth.config.empty()) {
    throw UsageError("spam-experiment needs exactly one of --corpus or --config");
  }
  SpamScenario scenario;
  if (!flags.scenario_file.empty()) {
    scenario = read_json_file(flags.scenario_file).get<SpamScenario>();
  } else {
    if (flags.target.empty()) {
      throw UsageError("spam-experiment needs --scenario or --target");
    }
    scenario = {*parse_spam_variant(flags.variant),
                AuthorId(flags.target, case_folding_from_env()),
                flags.spam_papers, flags.clique_size, flags.seed};
  }
  const CitationCorpus before = corpus_flags.path.empty()
                                    ? generate_corpus(resolve_params(synth))
                                    : load(corpus_flags, true);
  const CitationCorpus after = inject_spam(before, scenario);
  if (!flags.out_path.empty()) {
    std::ofstream file(flags.out_path, std::ios::binary);
    if (!file) throw Error("cannot write '" + flags.out_path + "'");
    write_jsonl(after, file);
  }
  const RobustnessReport report =
      robustness_report(before, after, scenario.target_author);
  const ReportFormat format = report_format(flags.format);
  if (format == ReportFormat::kJson) {
    out << json(report).dump(2) << '\n';
  } else if (format == ReportFormat::kTsv) {
    out << "index\tbefore\tafter\tinflation\n";
    for (const IndexShift& s : report.shifts) {
      out << to_string(s.kind) << '\t' << s.before << '\t' << s.after << '\t'
          << s.inflation << '\n';
    }
  } else {
    out << "| index | before | after | inflation |\n"
           "| --- | ---: | ---: | ---: |\n";
    for (const IndexShift& s : report.shifts) {
      out << "| " << to_string(s.kind) << " | " << s.before << " | "
          << s.after << " | " << s.inflation << " |\n";
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Spam-robust citation indicators (h, f_s1, f_s2, f_s3)",
               "sciento"};
  app.require_subcommand(1);

  CorpusFlags corpus_flags;
  std::string format;

  auto* validate_cmd = app.add_subcommand("validate", "Check corpus structure");
  add_corpus_flags(validate_cmd, corpus_flags, true);
  std::string validate_format = "tsv";
  validate_cmd->add_option("--format", validate_format)
      ->check(CLI::IsMember({"tsv", "json"}));

  auto* score_cmd =
      app.add_subcommand("score", "Penetration vector and N_f of one article");
  add_corpus_flags(score_cmd, corpus_flags, true);
  std::string article;
  score_cmd->add_option("--article", article)->required();
  std::string score_format = "json";
  score_cmd->add_option("--format", score_format)
      ->check(CLI::IsMember(kReportFormats));

  auto* profile_cmd = app.add_subcommand("profile", "h and f indices of an author");
  add_corpus_flags(profile_cmd, corpus_flags, true);
  std::string author;
  profile_cmd->add_option("--author", author)->required();
  std::string profile_format = "json";
  profile_cmd->add_option("--format", profile_format)
      ->check(CLI::IsMember(kReportFormats));

  auto* rank_cmd = app.add_subcommand("rank", "Dense-ranked table of authors");
  add_corpus_flags(rank_cmd, corpus_flags, true);
  std::string index = "h";
  std::int64_t min_value = 0;
  std::string rank_format = "tsv";
  rank_cmd->add_option("--index", index)->check(CLI::IsMember(kIndexNames));
  rank_cmd->add_option("--min", min_value)->check(CLI::NonNegativeNumber);
  rank_cmd->add_option("--format", rank_format)
      ->check(CLI::IsMember(kReportFormats));

  auto* compare_cmd =
      app.add_subcommand("compare", "Rank deltas between two indices");
  add_corpus_flags(compare_cmd, corpus_flags, false);
  CompareFlags compare_flags;
  compare_cmd->add_option("--base", compare_flags.base)
      ->check(CLI::IsMember(kIndexNames));
  compare_cmd->add_option("--other", compare_flags.other)
      ->check(CLI::IsMember(kIndexNames));
  compare_cmd->add_option("--min", compare_flags.min_value)
      ->check(CLI::NonNegativeNumber);
  compare_cmd->add_option("--base-table", compare_flags.base_table,
                          "Ranked table JSON (from rank --format json)");
  compare_cmd->add_option("--other-table", compare_flags.other_table,
                          "Ranked table JSON (from rank --format json)");
  compare_cmd->add_option("--format", compare_flags.format)
      ->check(CLI::IsMember(kReportFormats));

  auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic corpus");
  SynthFlags synth_flags;
  add_synth_flags(synth_cmd, synth_flags);
  std::string synth_out;
  std::string synth_output_format = "jsonl";
  synth_cmd->add_option("--out", synth_out,
                        "Output file (jsonl) or directory (csv); default stdout");
  synth_cmd->add_option("--output-format", synth_output_format)
      ->check(CLI::IsMember({"jsonl", "csv"}));

  auto* spam_cmd = app.add_subcommand(
      "spam-experiment", "Inject scientospam and report index inflation");
  add_corpus_flags(spam_cmd, corpus_flags, false);
  SynthFlags spam_synth;
  spam_cmd->add_option("--config", spam_synth.config,
                       "Generate the base corpus from these parameters");
  SpamFlags spam_flags;
  spam_cmd->add_option("--scenario", spam_flags.scenario_file,
                       "Scenario JSON (variant, target_author, spam_papers, "
                       "clique_size, seed)");
  spam_cmd->add_option("--variant", spam_flags.variant)
      ->check(CLI::IsMember({"single_citer", "clique"}));
  spam_cmd->add_option("--target", spam_flags.target);
  spam_cmd->add_option("--spam-papers", spam_flags.spam_papers)
      ->check(CLI::PositiveNumber);
  spam_cmd->add_option("--clique-size", spam_flags.clique_size);
  spam_cmd->add_option("--seed", spam_flags.seed);
  spam_cmd->add_option("--out", spam_flags.out_path,
                       "Write the spammed corpus (jsonl) here");
  spam_cmd->add_option("--format", spam_flags.format)
      ->check(CLI::IsMember(kReportFormats));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate_cmd->parsed()) {
      return cmd_validate(corpus_flags, validate_format, out);
    }
    if (score_cmd->parsed()) {
      return cmd_score(corpus_flags, article, score_format, out);
    }
    if (profile_cmd->parsed()) {
      return cmd_profile(corpus_flags, author, profile_format, out);
    }
    if (rank_cmd->parsed()) {
      return cmd_rank(corpus_flags, index, min_value, rank_format, out);
    }
    if (compare_cmd->parsed()) {
      return cmd_compare(corpus_flags, compare_flags, out, err);
    }
    if (synth_cmd->parsed()) {
      return cmd_synth(synth_flags, synth_out, synth_output_format, out);
    }
    if (spam_cmd->parsed()) {
      return cmd_spam(corpus_flags, spam_synth, spam_flags, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CorpusValidationError& e) {
    err << "error: corpus failed validation\n";
    print_issues(err, "error", e.report().errors);
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace sciento
