#include "proofinfo/inference/world.hpp"

#include <algorithm>
#include <set>

#include "proofinfo/error.hpp"

namespace proofinfo::inference {
namespace {

bool contains(const std::vector<std::string>& v, std::string_view name) {
  return std::find(v.begin(), v.end(), name) != v.end();
}

[[noreturn]] void malformed(const std::string& why) { throw Error(ErrorCode::MalformedWorld, why); }

std::vector<std::string> unique_names(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    malformed(std::string("'") + key + "' must be an array of strings");
  }
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& v : doc[key]) {
    if (!v.is_string() || v.get<std::string>().empty()) {
      malformed(std::string("'") + key + "' must contain non-empty strings");
    }
    auto name = v.get<std::string>();
    if (!seen.insert(name).second) malformed(std::string("duplicate name '") + name + "' in " + key);
    out.push_back(std::move(name));
  }
  return out;
}

}  // namespace

bool WorldSpec::has_participant(std::string_view name) const { return contains(participants, name); }
bool WorldSpec::has_day(std::string_view name) const { return contains(day_domain, name); }
bool WorldSpec::has_source(std::string_view name) const {
  return sources.find(std::string(name)) != sources.end();
}

std::size_t WorldSpec::participant_rank(std::string_view name) const {
  auto it = std::find(participants.begin(), participants.end(), name);
  if (it == participants.end()) {
    throw Error(ErrorCode::UnknownName, "participant '" + std::string(name) + "'");
  }
  return static_cast<std::size_t>(it - participants.begin());
}

WorldSpec parse_world(const nlohmann::json& doc) {
  if (!doc.is_object()) malformed("world document must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "participants" && key != "day_domain" && key != "sources") {
      malformed("unknown key '" + key + "'");
    }
  }
  WorldSpec world;
  world.participants = unique_names(doc, "participants");
  world.day_domain = unique_names(doc, "day_domain");
  if (world.participants.size() < 2) malformed("at least 2 participants are required");
  if (world.day_domain.empty()) malformed("day_domain must not be empty");

  if (!doc.contains("sources") || !doc["sources"].is_object() || doc["sources"].empty()) {
    malformed("'sources' must be a non-empty object");
  }
  for (const auto& [name, value] : doc["sources"].items()) {
    Schedule s;
    if (value.is_string() && value == "always_truthful") {
      s.kind = Schedule::Kind::AlwaysTruthful;
    } else if (value.is_string() && value == "always_deceitful") {
      s.kind = Schedule::Kind::AlwaysDeceitful;
    } else if (value.is_object() && value.size() == 1 && value.contains("truthful_on") &&
               value["truthful_on"].is_array()) {
      s.kind = Schedule::Kind::TruthfulOn;
      for (const auto& d : value["truthful_on"]) {
        if (!d.is_string() || !world.has_day(d.get<std::string>())) {
          malformed("source '" + name + "': truthful_on must list days from day_domain");
        }
        s.truthful_days.push_back(d.get<std::string>());
      }
    } else {
      malformed("source '" + name + "': unrecognized schedule");
    }
    world.sources.emplace(name, std::move(s));
  }
  return world;
}

WorldSpec parse_world_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    malformed(e.what());
  }
  return parse_world(doc);
}

WorldSpec builtin_world() {
  WorldSpec w;
  w.participants = {"Bok", "Dok", "Fok"};
  w.day_domain = {"Fri", "Other"};
  w.sources["R1"] = {Schedule::Kind::AlwaysTruthful, {}};
  w.sources["R2"] = {Schedule::Kind::TruthfulOn, {"Fri"}};
  w.sources["R3"] = {Schedule::Kind::AlwaysDeceitful, {}};
  return w;
}

}  // namespace proofinfo::inference
