#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "proofinfo/error.hpp"
#include "proofinfo/formula.hpp"

namespace proofinfo {

/// A proof reduced to its formula set. Formulas keep their listing order
/// (the inference checker needs it); duplicates are dropped on load.
struct Proof {
  std::string id;
  std::vector<Formula> formulas;
  Formula goal;

  bool contains(const Formula& f) const;
  /// Formula texts in ascending byte order.
  std::vector<Formula> sorted_formulas() const;
};

struct ProofDraft {
  std::string id;
  std::vector<std::string> formulas;
};

struct Violation {
  ErrorCode code;
  std::string message;
};

/// Goals G, proofs Q and the goal classes Q_phi. Immutable once built.
class KnowledgeSystem {
 public:
  /// Validates and builds; throws the first violation found.
  static KnowledgeSystem build(const std::vector<std::string>& goals,
                               const std::vector<ProofDraft>& proofs);

  /// Same checks as build(), reporting every violation instead of throwing.
  static std::vector<Violation> validate(const std::vector<std::string>& goals,
                                         const std::vector<ProofDraft>& proofs);

  std::size_t goal_count() const noexcept { return goals_.size(); }
  const std::vector<Formula>& goals() const noexcept { return goals_; }
  const std::vector<Proof>& proofs() const noexcept { return proofs_; }

  /// Index into goals() of the goal of proof `proof_index`.
  std::size_t goal_of(std::size_t proof_index) const { return goal_of_[proof_index]; }
  /// Proof indices (document order) of the class of goal `goal_index`.
  const std::vector<std::size_t>& class_members(std::size_t goal_index) const {
    return classes_[goal_index];
  }

  std::optional<std::size_t> find_goal(const Formula& f) const;
  std::optional<std::size_t> find_proof(std::string_view id) const;
  const Proof& proof(std::string_view id) const;  // throws UnknownProofId

  friend bool operator==(const KnowledgeSystem& a, const KnowledgeSystem& b);

 private:
  KnowledgeSystem() = default;
  std::vector<Formula> goals_;
  std::vector<Proof> proofs_;
  std::vector<std::size_t> goal_of_;
  std::vector<std::vector<std::size_t>> classes_;
};

/// Outcome of reading a knowledge-system document without throwing.
struct ParseOutcome {
  std::optional<KnowledgeSystem> system;
  std::vector<Violation> violations;
};

ParseOutcome try_parse_knowledge_system(const nlohmann::json& document);
KnowledgeSystem parse_knowledge_system(const nlohmann::json& document);
KnowledgeSystem parse_knowledge_system_text(std::string_view text);
nlohmann::ordered_json to_json(const KnowledgeSystem& ks);

}  // namespace proofinfo
