#pragma once

// nlohmann::json bindings for the domain types. Rationals travel as exact
// fraction strings ("16/7"). Several types hold an AuthorId and so have no
// default constructor; they use adl_serializer specializations with a static
// from_json.

#include <nlohmann/json.hpp>

#include "sciento/corpus.h"
#include "sciento/indices.h"
#include "sciento/penetration.h"
#include "sciento/ranking.h"
#include "sciento/rational.h"
#include "sciento/spamlab.h"

namespace nlohmann {

template <>
struct adl_serializer<sciento::Rational> {
  static void to_json(json& j, const sciento::Rational& r);
  static sciento::Rational from_json(const json& j);
};

template <>
struct adl_serializer<sciento::AuthorId> {
  static void to_json(json& j, const sciento::AuthorId& a);
  static sciento::AuthorId from_json(const json& j);
};

template <>
struct adl_serializer<sciento::IndexKind> {
  static void to_json(json& j, sciento::IndexKind k);
  static sciento::IndexKind from_json(const json& j);
};

template <>
struct adl_serializer<sciento::PenetrationVector> {
  static void to_json(json& j, const sciento::PenetrationVector& pv);
  static sciento::PenetrationVector from_json(const json& j);
};

template <>
struct adl_serializer<sciento::IndexProfile> {
  static void to_json(json& j, const sciento::IndexProfile& p);
  static sciento::IndexProfile from_json(const json& j);
};

template <>
struct adl_serializer<sciento::RankedRow> {
  static void to_json(json& j, const sciento::RankedRow& r);
  static sciento::RankedRow from_json(const json& j);
};

template <>
struct adl_serializer<sciento::RankDelta> {
  static void to_json(json& j, const sciento::RankDelta& d);
  static sciento::RankDelta from_json(const json& j);
};

template <>
struct adl_serializer<sciento::DeltaReport> {
  static void to_json(json& j, const sciento::DeltaReport& r);
  static sciento::DeltaReport from_json(const json& j);
};

template <>
struct adl_serializer<sciento::ValidationReport> {
  static void to_json(json& j, const sciento::ValidationReport& r);
  static sciento::ValidationReport from_json(const json& j);
};

template <>
struct adl_serializer<sciento::GeneratorParams> {
  static void to_json(json& j, const sciento::GeneratorParams& p);
  static sciento::GeneratorParams from_json(const json& j);
};

template <>
struct adl_serializer<sciento::SpamScenario> {
  static void to_json(json& j, const sciento::SpamScenario& s);
  static sciento::SpamScenario from_json(const json& j);
};

template <>
struct adl_serializer<sciento::RobustnessReport> {
  static void to_json(json& j, const sciento::RobustnessReport& r);
  static sciento::RobustnessReport from_json(const json& j);
};

}  // namespace nlohmann
