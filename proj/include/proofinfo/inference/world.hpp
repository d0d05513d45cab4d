#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace proofinfo::inference {

enum class Reliability { Truthful, Deceitful, Unknown };

struct Schedule {
  enum class Kind { AlwaysTruthful, AlwaysDeceitful, TruthfulOn };
  Kind kind = Kind::AlwaysTruthful;
  std::vector<std::string> truthful_days;  // TruthfulOn only

  bool depends_on_day() const noexcept { return kind == Kind::TruthfulOn; }
};

/// Participants, broadcast sources with their reliability schedules, and the
/// set of days the schedules range over.
struct WorldSpec {
  std::vector<std::string> participants;
  std::vector<std::string> day_domain;
  std::map<std::string, Schedule> sources;

  bool has_participant(std::string_view name) const;
  bool has_day(std::string_view name) const;
  bool has_source(std::string_view name) const;
  /// Position of a participant in `participants`; throws UnknownName.
  std::size_t participant_rank(std::string_view name) const;
};

/// Throws MalformedWorld on schema violations.
WorldSpec parse_world(const nlohmann::json& document);
WorldSpec parse_world_text(std::string_view text);

/// Bok, Dok, Fok; days {Fri, Other}; R1 truthful, R2 truthful on Fri,
/// R3 deceitful.
WorldSpec builtin_world();

}  // namespace proofinfo::inference
