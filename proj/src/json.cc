#include "sciento/json.h"

#include <string>

namespace nlohmann {
namespace {

template <typename Enum, typename Parse>
Enum enum_from(const json& j, Parse parse, const char* what) {
  const auto parsed = parse(j.get<std::string>());
  if (!parsed) {
    throw json::other_error::create(
        501, std::string("unknown ") + what + " '" + j.get<std::string>() + "'",
        &j);
  }
  return *parsed;
}

sciento::IntRange range_from(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw json::other_error::create(502, "range must be [min, max]", &j);
  }
  return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

}  // namespace

using namespace sciento;

void adl_serializer<Rational>::to_json(json& j, const Rational& r) {
  j = to_fraction_string(r);
}

Rational adl_serializer<Rational>::from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  return parse_fraction(j.get<std::string>());
}

void adl_serializer<AuthorId>::to_json(json& j, const AuthorId& a) {
  j = a.str();
}

AuthorId adl_serializer<AuthorId>::from_json(const json& j) {
  return AuthorId(j.get<std::string>());
}

void adl_serializer<IndexKind>::to_json(json& j, IndexKind k) {
  j = std::string(to_string(k));
}

IndexKind adl_serializer<IndexKind>::from_json(const json& j) {
  return enum_from<IndexKind>(j, parse_index_kind, "index");
}

void adl_serializer<PenetrationVector>::to_json(json& j,
                                                const PenetrationVector& pv) {
  j = json{{"nca", pv.nca},
           {"distinct_authors", pv.distinct_authors},
           {"f", pv.coords},
           {"last_nonzero", pv.last_nonzero}};
}

PenetrationVector adl_serializer<PenetrationVector>::from_json(const json& j) {
  return {j.at("nca").get<std::int64_t>(),
          j.at("distinct_authors").get<std::int64_t>(),
          j.at("f").get<std::vector<Rational>>(),
          j.at("last_nonzero").get<std::int64_t>()};
}

void adl_serializer<IndexProfile>::to_json(json& j, const IndexProfile& p) {
  j = json{{"author", p.author},
           {"h", p.h},
           {"f_s1", p.f_s1},
           {"f_s2", p.f_s2},
           {"f_s3", p.f_s3}};
}

IndexProfile adl_serializer<IndexProfile>::from_json(const json& j) {
  return {j.at("author").get<AuthorId>(), j.at("h").get<std::int64_t>(),
          j.at("f_s1").get<std::int64_t>(), j.at("f_s2").get<std::int64_t>(),
          j.at("f_s3").get<std::int64_t>()};
}

void adl_serializer<RankedRow>::to_json(json& j, const RankedRow& r) {
  j = json{{"rank", r.rank}, {"author", r.author}, {"value", r.value}};
}

RankedRow adl_serializer<RankedRow>::from_json(const json& j) {
  return {j.at("author").get<AuthorId>(), j.at("value").get<std::int64_t>(),
          j.at("rank").get<std::int64_t>()};
}

void adl_serializer<RankDelta>::to_json(json& j, const RankDelta& d) {
  j = json{{"author", d.author},
           {"base_rank", d.base_rank},
           {"other_rank", d.other_rank},
           {"delta", d.delta}};
}

RankDelta adl_serializer<RankDelta>::from_json(const json& j) {
  return {j.at("author").get<AuthorId>(), j.at("base_rank").get<std::int64_t>(),
          j.at("other_rank").get<std::int64_t>(),
          j.at("delta").get<std::int64_t>()};
}

void adl_serializer<DeltaReport>::to_json(json& j, const DeltaReport& r) {
  j = json{{"base", r.base},
           {"other", r.other},
           {"deltas", r.deltas},
           {"only_in_base", r.only_in_base},
           {"only_in_other", r.only_in_other}};
}

DeltaReport adl_serializer<DeltaReport>::from_json(const json& j) {
  return {j.at("base").get<IndexKind>(), j.at("other").get<IndexKind>(),
          j.at("deltas").get<std::vector<RankDelta>>(),
          j.at("only_in_base").get<std::vector<AuthorId>>(),
          j.at("only_in_other").get<std::vector<AuthorId>>()};
}

namespace {

json issues_to_json(const std::vector<Issue>& issues) {
  json out = json::array();
  for (const Issue& i : issues) {
    out.push_back({{"kind", std::string(to_string(i.kind))},
                   {"subject", i.subject},
                   {"message", i.message}});
  }
  return out;
}

std::vector<Issue> issues_from_json(const json& j) {
  static constexpr IssueKind kKinds[] = {
      IssueKind::kDanglingCitation, IssueKind::kEmptyAuthorList,
      IssueKind::kSelfCitation, IssueKind::kIsolatedArticle};
  std::vector<Issue> out;
  for (const json& item : j) {
    const std::string name = item.at("kind").get<std::string>();
    const IssueKind* kind = nullptr;
    for (const IssueKind& k : kKinds) {
      if (to_string(k) == name) kind = &k;
    }
    if (kind == nullptr) {
      throw json::other_error::create(501, "unknown issue kind '" + name + "'",
                                      &item);
    }
    out.push_back({*kind, item.at("subject").get<std::string>(),
                   item.at("message").get<std::string>()});
  }
  return out;
}

}  // namespace

void adl_serializer<ValidationReport>::to_json(json& j,
                                               const ValidationReport& r) {
  j = json{{"ok", r.ok()},
           {"errors", issues_to_json(r.errors)},
           {"warnings", issues_to_json(r.warnings)}};
}

ValidationReport adl_serializer<ValidationReport>::from_json(const json& j) {
  return {issues_from_json(j.at("errors")), issues_from_json(j.at("warnings"))};
}

void adl_serializer<GeneratorParams>::to_json(json& j,
                                              const GeneratorParams& p) {
  j = json{{"author_pool", p.author_pool},
           {"papers", p.papers},
           {"authors_per_paper",
            {p.authors_per_paper.min, p.authors_per_paper.max}},
           {"citations_per_paper",
            {p.citations_per_paper.min, p.citations_per_paper.max}},
           {"seed", p.seed}};
}

GeneratorParams adl_serializer<GeneratorParams>::from_json(const json& j) {
  return {j.at("author_pool").get<std::int64_t>(),
          j.at("papers").get<std::int64_t>(),
          range_from(j.at("authors_per_paper")),
          range_from(j.at("citations_per_paper")),
          j.at("seed").get<std::uint64_t>()};
}

void adl_serializer<SpamScenario>::to_json(json& j, const SpamScenario& s) {
  j = json{{"variant", std::string(to_string(s.variant))},
           {"target_author", s.target_author},
           {"spam_papers", s.spam_papers},
           {"seed", s.seed}};
  if (s.variant == SpamVariant::kClique) j["clique_size"] = s.clique_size;
}

SpamScenario adl_serializer<SpamScenario>::from_json(const json& j) {
  SpamScenario s{enum_from<SpamVariant>(j.at("variant"), parse_spam_variant,
                                        "spam variant"),
                 j.at("target_author").get<AuthorId>(),
                 j.at("spam_papers").get<std::int64_t>(), 2,
                 j.value("seed", std::uint64_t{0})};
  if (s.variant == SpamVariant::kClique) {
    s.clique_size = j.at("clique_size").get<std::int64_t>();
  }
  return s;
}

void adl_serializer<RobustnessReport>::to_json(json& j,
                                               const RobustnessReport& r) {
  json shifts = json::array();
  for (const IndexShift& s : r.shifts) {
    shifts.push_back({{"index", s.kind},
                      {"before", s.before},
                      {"after", s.after},
                      {"inflation", s.inflation}});
  }
  j = json{{"target", r.target}, {"indices", std::move(shifts)}};
}

RobustnessReport adl_serializer<RobustnessReport>::from_json(const json& j) {
  RobustnessReport r{j.at("target").get<AuthorId>(), {}};
  const json& shifts = j.at("indices");
  if (!shifts.is_array() || shifts.size() != r.shifts.size()) {
    throw json::other_error::create(502, "expected four index entries",
                                    &shifts);
  }
  for (std::size_t i = 0; i < r.shifts.size(); ++i) {
    const json& s = shifts[i];
    r.shifts[i] = {s.at("index").get<IndexKind>(),
                   s.at("before").get<std::int64_t>(),
                   s.at("after").get<std::int64_t>(),
                   s.at("inflation").get<std::int64_t>()};
  }
  return r;
}

}  // namespace nlohmann
