#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "sciento/corpus.h"

namespace sciento {
namespace {

using nlohmann::json;

AuthorId author_at(std::size_t line, const std::string& raw,
                   CaseFolding folding) {
  try {
    return AuthorId(raw, folding);
  } catch (const EmptyAuthorError&) {
    throw ParseError(line, "empty author name");
  }
}

CitationCorpus finish(std::vector<Article> articles,
                      std::vector<Citation> citations,
                      const LoadOptions& options) {
  CitationCorpus corpus(std::move(articles), std::move(citations));
  if (options.strict) {
    ValidationReport report = validate(corpus);
    if (!report.ok()) throw CorpusValidationError(std::move(report));
  }
  return corpus;
}

// RFC 4180 field splitting for one physical line. Quoted fields may contain
// commas and doubled quotes but not line breaks.
std::vector<std::string> split_csv_line(const std::string& line,
                                        std::size_t line_no) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      if (!field.empty() || was_quoted) {
        throw ParseError(line_no, "stray quote in CSV field");
      }
      quoted = true;
      was_quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
      was_quoted = false;
    } else {
      if (was_quoted) throw ParseError(line_no, "text after closing quote");
      field += c;
    }
  }
  if (quoted) throw ParseError(line_no, "unterminated quoted CSV field");
  fields.push_back(std::move(field));
  return fields;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n\r") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

bool read_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t") == std::string::npos;
}

void expect_header(std::istream& in, const std::string& expected,
                   const char* file) {
  std::string line;
  if (!read_line(in, line)) {
    throw ParseError(1, std::string(file) + ": missing header");
  }
  // Tolerate a UTF-8 byte order mark.
  if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
  if (line != expected) {
    throw ParseError(1, std::string(file) + ": expected header '" + expected +
                            "', got '" + line + "'");
  }
}

}  // namespace

CitationCorpus load_jsonl(std::istream& in, const LoadOptions& options) {
  std::vector<Article> articles;
  std::vector<Citation> citations;
  std::set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (read_line(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(line_no, std::string("invalid JSON: ") + e.what());
    }
    if (!record.is_object()) throw ParseError(line_no, "record is not an object");
    auto id_it = record.find("id");
    if (id_it == record.end() || !id_it->is_string() ||
        id_it->get_ref<const std::string&>().empty()) {
      throw ParseError(line_no, "missing or non-string \"id\"");
    }
    Article article{id_it->get<std::string>(), {}};
    if (!seen.insert(article.id).second) {
      throw ParseError(line_no, "duplicate article id '" + article.id + "'");
    }
    auto authors_it = record.find("authors");
    if (authors_it == record.end() || !authors_it->is_array()) {
      throw ParseError(line_no, "missing or non-array \"authors\"");
    }
    for (const json& a : *authors_it) {
      if (!a.is_string()) throw ParseError(line_no, "non-string author");
      article.authors.push_back(
          author_at(line_no, a.get<std::string>(), options.case_folding));
    }
    if (auto cites_it = record.find("cites"); cites_it != record.end()) {
      if (!cites_it->is_array()) {
        throw ParseError(line_no, "non-array \"cites\"");
      }
      for (const json& c : *cites_it) {
        if (!c.is_string()) throw ParseError(line_no, "non-string cited id");
        citations.push_back({article.id, c.get<std::string>()});
      }
    }
    articles.push_back(std::move(article));
  }
  if (in.bad()) throw Error("read error while loading JSONL corpus");
  return finish(std::move(articles), std::move(citations), options);
}

CitationCorpus load_csv(std::istream& articles_in, std::istream& citations_in,
                        const LoadOptions& options) {
  std::vector<Article> articles;
  std::vector<Citation> citations;
  std::set<std::string> seen;
  std::string line;

  expect_header(articles_in, "id,authors", "articles.csv");
  std::size_t line_no = 1;
  while (read_line(articles_in, line)) {
    ++line_no;
    if (blank(line)) continue;
    std::vector<std::string> fields = split_csv_line(line, line_no);
    if (fields.size() != 2) {
      throw ParseError(line_no, "articles.csv: expected 2 columns");
    }
    if (fields[0].empty()) throw ParseError(line_no, "articles.csv: empty id");
    Article article{fields[0], {}};
    if (!seen.insert(article.id).second) {
      throw ParseError(line_no, "duplicate article id '" + article.id + "'");
    }
    if (!fields[1].empty()) {
      std::size_t start = 0;
      while (true) {
        std::size_t bar = fields[1].find('|', start);
        article.authors.push_back(
            author_at(line_no, fields[1].substr(start, bar - start),
                      options.case_folding));
        if (bar == std::string::npos) break;
        start = bar + 1;
      }
    }
    articles.push_back(std::move(article));
  }

  expect_header(citations_in, "citing_id,cited_id", "citations.csv");
  line_no = 1;
  while (read_line(citations_in, line)) {
    ++line_no;
    if (blank(line)) continue;
    std::vector<std::string> fields = split_csv_line(line, line_no);
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      throw ParseError(line_no, "citations.csv: expected citing_id,cited_id");
    }
    citations.push_back({std::move(fields[0]), std::move(fields[1])});
  }
  if (articles_in.bad() || citations_in.bad()) {
    throw Error("read error while loading CSV corpus");
  }
  return finish(std::move(articles), std::move(citations), options);
}

void write_jsonl(const CitationCorpus& corpus, std::ostream& out) {
  for (const Citation& c : corpus.citations()) {
    if (!corpus.contains(c.citing)) {
      throw Error("edge " + c.citing + "->" + c.cited +
                  " has no citing record and cannot be written as JSONL");
    }
  }
  for (const auto& [id, article] : corpus.articles()) {
    json authors = json::array();
    for (const AuthorId& a : article.authors) authors.push_back(a.str());
    json record = json::object();
    record["id"] = id;
    record["authors"] = std::move(authors);
    record["cites"] = corpus.cited_ids(id);
    out << record.dump() << '\n';
  }
}

void write_csv(const CitationCorpus& corpus, std::ostream& articles,
               std::ostream& citations) {
  articles << "id,authors\n";
  for (const auto& [id, article] : corpus.articles()) {
    std::string joined;
    for (const AuthorId& a : article.authors) {
      if (a.str().find('|') != std::string::npos) {
        throw Error("author '" + a.str() + "' contains '|' and cannot be "
                    "written as CSV");
      }
      if (!joined.empty()) joined += '|';
      joined += a.str();
    }
    articles << csv_field(id) << ',' << csv_field(joined) << '\n';
  }
  citations << "citing_id,cited_id\n";
  for (const Citation& c : corpus.citations()) {
    citations << csv_field(c.citing) << ',' << csv_field(c.cited) << '\n';
  }
}

CitationCorpus load_corpus_file(const std::filesystem::path& path,
                                std::optional<CorpusFormat> format,
                                const LoadOptions& options) {
  namespace fs = std::filesystem;
  const bool is_dir = fs::is_directory(path);
  if (!format) {
    format = (is_dir || path.extension() == ".csv") ? CorpusFormat::kCsv
                                                    : CorpusFormat::kJsonl;
  }
  auto open = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw Error("cannot open '" + p.string() + "'");
    return in;
  };
  if (*format == CorpusFormat::kJsonl) {
    std::ifstream in = open(path);
    return load_jsonl(in, options);
  }
  fs::path articles = is_dir ? path / "articles.csv" : path;
  fs::path citations = (is_dir ? path : path.parent_path()) / "citations.csv";
  std::ifstream articles_in = open(articles);
  std::ifstream citations_in = open(citations);
  return load_csv(articles_in, citations_in, options);
}

}  // namespace sciento
