#include "proofinfo/knowledge_system.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace proofinfo {
namespace {

struct Normalized {
  std::vector<Formula> goals;
  std::vector<std::pair<std::string, std::vector<Formula>>> proofs;
};

void add(std::vector<Violation>& out, ErrorCode code, std::string message) {
  out.push_back({code, std::move(message)});
}

// Normalizes every string; formulas that fail normalization are reported and
// skipped so that later checks still run.
Normalized normalize_all(const std::vector<std::string>& goals,
                         const std::vector<ProofDraft>& proofs, std::vector<Violation>& out) {
  Normalized n;
  std::set<Formula> seen_goals;
  for (std::size_t i = 0; i < goals.size(); ++i) {
    try {
      auto g = Formula::normalize(goals[i]);
      if (!seen_goals.insert(g).second) {
        add(out, ErrorCode::MalformedDocument, "goal '" + g.text() + "' listed twice");
        continue;
      }
      n.goals.push_back(std::move(g));
    } catch (const Error& e) {
      add(out, e.code(), "goals[" + std::to_string(i) + "]: " + e.what());
    }
  }
  for (const auto& draft : proofs) {
    std::vector<Formula> formulas;
    std::set<Formula> seen;
    for (std::size_t i = 0; i < draft.formulas.size(); ++i) {
      try {
        auto f = Formula::normalize(draft.formulas[i]);
        if (seen.insert(f).second) formulas.push_back(std::move(f));
      } catch (const Error& e) {
        add(out, e.code(),
            "proof '" + draft.id + "' formulas[" + std::to_string(i) + "]: " + e.what());
      }
    }
    n.proofs.emplace_back(draft.id, std::move(formulas));
  }
  return n;
}

}  // namespace

bool Proof::contains(const Formula& f) const {
  return std::find(formulas.begin(), formulas.end(), f) != formulas.end();
}

std::vector<Formula> Proof::sorted_formulas() const {
  auto out = formulas;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Violation> KnowledgeSystem::validate(const std::vector<std::string>& goals,
                                                 const std::vector<ProofDraft>& proofs) {
  std::vector<Violation> out;
  auto n = normalize_all(goals, proofs, out);
  if (n.goals.empty()) add(out, ErrorCode::MalformedDocument, "no goals (M must be at least 1)");

  std::set<Formula> goal_set(n.goals.begin(), n.goals.end());
  std::set<std::string> ids;
  std::map<std::vector<Formula>, std::string> bodies;
  std::set<Formula> covered;
  for (const auto& [id, formulas] : n.proofs) {
    if (id.empty()) add(out, ErrorCode::MalformedDocument, "proof with empty id");
    if (!ids.insert(id).second) add(out, ErrorCode::DuplicateProofId, "proof id '" + id + "'");
    if (formulas.empty()) {
      add(out, ErrorCode::MalformedDocument, "proof '" + id + "' has no formulas");
      continue;
    }
    std::vector<Formula> found;
    for (const auto& f : formulas) {
      if (goal_set.contains(f)) found.push_back(f);
    }
    if (found.empty()) {
      add(out, ErrorCode::NoGoalInProof, "proof '" + id + "' contains no goal");
    } else if (found.size() > 1) {
      std::string names;
      for (const auto& g : found) names += (names.empty() ? "" : ", ") + g.text();
      add(out, ErrorCode::MultipleGoalsInProof, "proof '" + id + "' contains " + names);
    } else {
      covered.insert(found.front());
    }
    auto body = formulas;
    std::sort(body.begin(), body.end());
    auto [it, inserted] = bodies.emplace(std::move(body), id);
    if (!inserted) {
      add(out, ErrorCode::DuplicateProofBody,
          "proofs '" + it->second + "' and '" + id + "' have the same formula set");
    }
  }
  for (const auto& g : n.goals) {
    if (!covered.contains(g)) {
      add(out, ErrorCode::UncoveredGoal, "goal '" + g.text() + "' is in no proof");
    }
  }
  return out;
}

KnowledgeSystem KnowledgeSystem::build(const std::vector<std::string>& goals,
                                       const std::vector<ProofDraft>& proofs) {
  auto violations = validate(goals, proofs);
  if (!violations.empty()) throw Error(violations.front().code, violations.front().message);

  std::vector<Violation> unused;
  auto n = normalize_all(goals, proofs, unused);
  KnowledgeSystem ks;
  ks.goals_ = std::move(n.goals);
  ks.classes_.resize(ks.goals_.size());
  for (auto& [id, formulas] : n.proofs) {
    std::size_t goal_index = 0;
    for (const auto& f : formulas) {
      if (auto g = ks.find_goal(f)) goal_index = *g;
    }
    ks.classes_[goal_index].push_back(ks.proofs_.size());
    ks.goal_of_.push_back(goal_index);
    ks.proofs_.push_back(Proof{id, std::move(formulas), ks.goals_[goal_index]});
  }
  return ks;
}

std::optional<std::size_t> KnowledgeSystem::find_goal(const Formula& f) const {
  auto it = std::find(goals_.begin(), goals_.end(), f);
  if (it == goals_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - goals_.begin());
}

std::optional<std::size_t> KnowledgeSystem::find_proof(std::string_view id) const {
  for (std::size_t i = 0; i < proofs_.size(); ++i) {
    if (proofs_[i].id == id) return i;
  }
  return std::nullopt;
}

const Proof& KnowledgeSystem::proof(std::string_view id) const {
  auto i = find_proof(id);
  if (!i) throw Error(ErrorCode::UnknownProofId, "no proof with id '" + std::string(id) + "'");
  return proofs_[*i];
}

bool operator==(const KnowledgeSystem& a, const KnowledgeSystem& b) {
  if (a.goals_ != b.goals_ || a.proofs_.size() != b.proofs_.size()) return false;
  for (std::size_t i = 0; i < a.proofs_.size(); ++i) {
    const auto& p = a.proofs_[i];
    const auto& q = b.proofs_[i];
    if (p.id != q.id || p.goal != q.goal || p.sorted_formulas() != q.sorted_formulas()) {
      return false;
    }
  }
  return true;
}

ParseOutcome try_parse_knowledge_system(const nlohmann::json& document) {
  ParseOutcome outcome;
  auto& out = outcome.violations;
  if (!document.is_object()) {
    add(out, ErrorCode::MalformedDocument, "document must be an object");
    return outcome;
  }
  for (const auto& [key, value] : document.items()) {
    if (key != "goals" && key != "proofs") {
      add(out, ErrorCode::MalformedDocument, "unknown key '" + key + "'");
    }
  }
  auto strings = [&](const nlohmann::json& arr, const std::string& where,
                     std::vector<std::string>& dest) {
    if (!arr.is_array()) {
      add(out, ErrorCode::MalformedDocument, where + " must be an array of strings");
      return;
    }
    for (const auto& s : arr) {
      if (!s.is_string()) {
        add(out, ErrorCode::MalformedDocument, where + " must contain only strings");
        continue;
      }
      dest.push_back(s.get<std::string>());
    }
  };

  std::vector<std::string> goals;
  std::vector<ProofDraft> proofs;
  if (!document.contains("goals")) {
    add(out, ErrorCode::MalformedDocument, "missing key 'goals'");
  } else {
    strings(document["goals"], "goals", goals);
  }
  if (!document.contains("proofs")) {
    add(out, ErrorCode::MalformedDocument, "missing key 'proofs'");
  } else if (!document["proofs"].is_array()) {
    add(out, ErrorCode::MalformedDocument, "proofs must be an array");
  } else {
    std::size_t index = 0;
    for (const auto& p : document["proofs"]) {
      auto where = "proofs[" + std::to_string(index++) + "]";
      if (!p.is_object()) {
        add(out, ErrorCode::MalformedDocument, where + " must be an object");
        continue;
      }
      for (const auto& [key, value] : p.items()) {
        if (key != "id" && key != "formulas") {
          add(out, ErrorCode::MalformedDocument, where + ": unknown key '" + key + "'");
        }
      }
      ProofDraft draft;
      if (!p.contains("id") || !p["id"].is_string()) {
        add(out, ErrorCode::MalformedDocument, where + ": 'id' must be a string");
        continue;
      }
      draft.id = p["id"].get<std::string>();
      if (!p.contains("formulas")) {
        add(out, ErrorCode::MalformedDocument, where + ": missing key 'formulas'");
        continue;
      }
      strings(p["formulas"], where + ".formulas", draft.formulas);
      proofs.push_back(std::move(draft));
    }
  }
  if (!out.empty()) return outcome;

  out = KnowledgeSystem::validate(goals, proofs);
  if (out.empty()) outcome.system = KnowledgeSystem::build(goals, proofs);
  return outcome;
}

KnowledgeSystem parse_knowledge_system(const nlohmann::json& document) {
  auto outcome = try_parse_knowledge_system(document);
  if (!outcome.system) {
    const auto& v = outcome.violations.front();
    throw Error(v.code, v.message);
  }
  return std::move(*outcome.system);
}

KnowledgeSystem parse_knowledge_system_text(std::string_view text) {
  nlohmann::json document;
  try {
    document = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedDocument, e.what());
  }
  return parse_knowledge_system(document);
}

nlohmann::ordered_json to_json(const KnowledgeSystem& ks) {
  nlohmann::ordered_json doc;
  doc["goals"] = nlohmann::ordered_json::array();
  for (const auto& g : ks.goals()) doc["goals"].push_back(g.text());
  doc["proofs"] = nlohmann::ordered_json::array();
  for (const auto& p : ks.proofs()) {
    nlohmann::ordered_json entry;
    entry["id"] = p.id;
    entry["formulas"] = nlohmann::ordered_json::array();
    for (const auto& f : p.formulas) entry["formulas"].push_back(f.text());
    doc["proofs"].push_back(std::move(entry));
  }
  return doc;
}

}  // namespace proofinfo
