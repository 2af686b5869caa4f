#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "sciento/corpus.h"
#include "sciento/indices.h"

namespace sciento {

struct IntRange {
  std::int64_t min = 0;
  std::int64_t max = 0;

  friend bool operator==(const IntRange&, const IntRange&) = default;
};

struct GeneratorParams {
  std::int64_t author_pool = 1;
  std::int64_t papers = 1;
  IntRange authors_per_paper{1, 1};
  IntRange citations_per_paper{0, 0};
  std::uint64_t seed = 0;

  friend bool operator==(const GeneratorParams&,
                         const GeneratorParams&) = default;
};

enum class SpamVariant { kSingleCiter, kClique };

std::string_view to_string(SpamVariant variant);  // "single_citer", "clique"
std::optional<SpamVariant> parse_spam_variant(std::string_view name);

struct SpamScenario {
  SpamVariant variant = SpamVariant::kSingleCiter;
  AuthorId target_author{"target"};
  std::int64_t spam_papers = 1;
  std::int64_t clique_size = 2;  // read only for kClique
  std::uint64_t seed = 0;

  friend bool operator==(const SpamScenario&, const SpamScenario&) = default;
};

struct IndexShift {
  IndexKind kind = IndexKind::kH;
  std::int64_t before = 0;
  std::int64_t after = 0;
  std::int64_t inflation = 0;  // after - before

  friend bool operator==(const IndexShift&, const IndexShift&) = default;
};

struct RobustnessReport {
  AuthorId target{"target"};
  std::array<IndexShift, 4> shifts;  // h, fs1, fs2, fs3

  const IndexShift& shift(IndexKind kind) const;
  friend bool operator==(const RobustnessReport&,
                         const RobustnessReport&) = default;
};

// Deterministic pseudo-random source shared by the generator and the
// injector, so corpora reproduce across platforms.
//
// Raw 64-bit words come from std::mt19937_64 (fully specified by the C++
// standard). A bounded draw in [0, n) rejects raw words below
// (2^64 - n) mod n and returns word mod n, which is unbiased and does not
// depend on any standard-library distribution.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t n);
  // Inclusive range.
  std::int64_t between(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

// Throws InfeasibleParamsError for empty or inverted ranges, a per-paper
// author count above the pool, or citations_per_paper.max >= papers.
void check_params(const GeneratorParams& params);

// Articles "P<n>" (zero padded), authors "A<n>" (zero padded).
//
// For each paper in order: draw the author count from authors_per_paper,
// pick that many distinct pool members with Floyd's sampling; then draw the
// citation count and pick distinct targets among the other papers the same
// way. Author lists keep Floyd's pick order; citation targets are a set.
CitationCorpus generate_corpus(const GeneratorParams& params);

// Adds scenario.spam_papers fresh articles that cite every article of the
// target author. single_citer: each spam paper is written by the same one
// fresh author. clique: by the same clique_size fresh authors. Fresh ids
// derive from the scenario seed and never collide with existing ones.
// Throws UnknownTargetError or InfeasibleParamsError.
CitationCorpus inject_spam(const CitationCorpus& corpus,
                           const SpamScenario& scenario);

// Throws UnknownTargetError if `target` has no article in either corpus.
RobustnessReport robustness_report(const CitationCorpus& before,
                                   const CitationCorpus& after,
                                   const AuthorId& target);

}  // namespace sciento
