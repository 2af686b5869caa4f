#include "sciento/spamlab.h"

#include <cstdio>
#include <limits>
#include <set>
#include <string>

namespace sciento {
namespace {

std::string padded(const char* prefix, std::int64_t n, int width) {
  std::string digits = std::to_string(n);
  if (static_cast<int>(digits.size()) < width) {
    digits.insert(0, static_cast<std::size_t>(width) - digits.size(), '0');
  }
  return prefix + digits;
}

int digit_count(std::int64_t n) { return static_cast<int>(std::to_string(n).size()); }

// Floyd's algorithm: `count` distinct values from [0, n), in pick order.
std::vector<std::int64_t> sample_distinct(Prng& rng, std::int64_t n,
                                          std::int64_t count) {
  std::vector<std::int64_t> picked;
  std::set<std::int64_t> seen;
  for (std::int64_t j = n - count; j < n; ++j) {
    auto t = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(j) + 1));
    if (seen.contains(t)) t = j;
    seen.insert(t);
    picked.push_back(t);
  }
  return picked;
}

void check_range(const IntRange& r, const char* name) {
  if (r.min > r.max) {
    throw InfeasibleParamsError(std::string(name) + ": min exceeds max");
  }
}

std::string hex_tag(std::uint64_t word) {
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x",
                static_cast<unsigned>(word & 0xffffffffu));
  return buf;
}

}  // namespace

std::uint64_t Prng::below(std::uint64_t n) {
  if (n == 0) throw InfeasibleParamsError("Prng::below: empty range");
  // (2^64 - n) mod n computed in 64-bit arithmetic.
  const std::uint64_t threshold = (0 - n) % n;
  while (true) {
    const std::uint64_t word = next();
    if (word >= threshold) return word % n;
  }
}

std::int64_t Prng::between(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(below(span));
}

std::string_view to_string(SpamVariant variant) {
  return variant == SpamVariant::kSingleCiter ? "single_citer" : "clique";
}

std::optional<SpamVariant> parse_spam_variant(std::string_view name) {
  if (name == "single_citer") return SpamVariant::kSingleCiter;
  if (name == "clique") return SpamVariant::kClique;
  return std::nullopt;
}

const IndexShift& RobustnessReport::shift(IndexKind kind) const {
  for (const IndexShift& s : shifts) {
    if (s.kind == kind) return s;
  }
  throw Error("robustness report lacks index " + std::string(to_string(kind)));
}

void check_params(const GeneratorParams& p) {
  if (p.author_pool < 1) throw InfeasibleParamsError("author_pool must be >= 1");
  if (p.papers < 1) throw InfeasibleParamsError("papers must be >= 1");
  check_range(p.authors_per_paper, "authors_per_paper");
  check_range(p.citations_per_paper, "citations_per_paper");
  if (p.authors_per_paper.min < 1) {
    throw InfeasibleParamsError("authors_per_paper.min must be >= 1");
  }
  if (p.authors_per_paper.max > p.author_pool) {
    throw InfeasibleParamsError("authors_per_paper.max exceeds author_pool");
  }
  if (p.citations_per_paper.min < 0) {
    throw InfeasibleParamsError("citations_per_paper.min must be >= 0");
  }
  if (p.citations_per_paper.max >= p.papers) {
    throw InfeasibleParamsError(
        "citations_per_paper.max must be below papers (no self-citations)");
  }
}

CitationCorpus generate_corpus(const GeneratorParams& params) {
  check_params(params);
  Prng rng(params.seed);
  const int paper_width = digit_count(params.papers);
  const int author_width = digit_count(params.author_pool);

  std::vector<Article> articles;
  std::vector<Citation> citations;
  articles.reserve(static_cast<std::size_t>(params.papers));
  for (std::int64_t i = 0; i < params.papers; ++i) {
    Article article{padded("P", i + 1, paper_width), {}};
    const std::int64_t n_authors = rng.between(params.authors_per_paper.min,
                                               params.authors_per_paper.max);
    for (std::int64_t a : sample_distinct(rng, params.author_pool, n_authors)) {
      article.authors.emplace_back(padded("A", a + 1, author_width));
    }
    const std::int64_t n_cites = rng.between(params.citations_per_paper.min,
                                             params.citations_per_paper.max);
    for (std::int64_t t : sample_distinct(rng, params.papers - 1, n_cites)) {
      const std::int64_t target = t >= i ? t + 1 : t;
      citations.push_back({article.id, padded("P", target + 1, paper_width)});
    }
    articles.push_back(std::move(article));
  }
  return CitationCorpus(std::move(articles), std::move(citations));
}

CitationCorpus inject_spam(const CitationCorpus& corpus,
                           const SpamScenario& scenario) {
  const std::vector<std::string>& targets =
      corpus.authored_ids(scenario.target_author);
  if (targets.empty()) throw UnknownTargetError(scenario.target_author.str());
  if (scenario.spam_papers < 1) {
    throw InfeasibleParamsError("spam_papers must be >= 1");
  }
  const bool clique = scenario.variant == SpamVariant::kClique;
  if (clique && scenario.clique_size < 2) {
    throw InfeasibleParamsError("clique_size must be >= 2");
  }
  const std::int64_t n_authors = clique ? scenario.clique_size : 1;
  const int paper_width = digit_count(scenario.spam_papers);
  const int author_width = digit_count(n_authors);

  // Draw tags until no generated id or author collides with the corpus.
  Prng rng(scenario.seed);
  std::vector<std::string> paper_ids;
  std::vector<AuthorId> spammers;
  while (true) {
    const std::string tag = hex_tag(rng.next());
    paper_ids.clear();
    spammers.clear();
    bool fresh = true;
    for (std::int64_t i = 1; i <= scenario.spam_papers && fresh; ++i) {
      paper_ids.push_back(padded(("spam-" + tag + "-").c_str(), i, paper_width));
      fresh = !corpus.contains(paper_ids.back());
    }
    for (std::int64_t j = 1; j <= n_authors && fresh; ++j) {
      spammers.emplace_back(
          clique ? padded(("spammer-" + tag + "-").c_str(), j, author_width)
                 : "spammer-" + tag);
      fresh = corpus.authored_ids(spammers.back()).empty();
    }
    if (fresh) break;
  }

  std::vector<Article> articles;
  articles.reserve(corpus.size() + paper_ids.size());
  for (const auto& [id, article] : corpus.articles()) articles.push_back(article);
  std::vector<Citation> citations(corpus.citations().begin(),
                                  corpus.citations().end());
  for (const std::string& id : paper_ids) {
    articles.push_back({id, spammers});
    for (const std::string& target : targets) citations.push_back({id, target});
  }
  return CitationCorpus(std::move(articles), std::move(citations));
}

RobustnessReport robustness_report(const CitationCorpus& before,
                                   const CitationCorpus& after,
                                   const AuthorId& target) {
  if (before.authored_ids(target).empty() ||
      after.authored_ids(target).empty()) {
    throw UnknownTargetError(target.str());
  }
  const IndexProfile b = index_profile(before, target);
  const IndexProfile a = index_profile(after, target);
  RobustnessReport report{target, {}};
  for (std::size_t i = 0; i < report.shifts.size(); ++i) {
    const IndexKind kind = kAllIndexKinds[i];
    report.shifts[i] = {kind, b.value(kind), a.value(kind),
                        a.value(kind) - b.value(kind)};
  }
  return report;
}

}  // namespace sciento
