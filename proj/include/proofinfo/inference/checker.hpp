#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "proofinfo/inference/kformula.hpp"
#include "proofinfo/inference/world.hpp"

namespace proofinfo::inference {

enum class Rule {
  UserData,
  TruthfulBroadcast,
  DeceitfulBroadcast,
  ExistenceDisj,
  DisjElim,
  Uniqueness,
};

std::string_view to_string(Rule rule);

/// A formula that a listed step depends on but the listing leaves out.
struct ImplicitStep {
  Rule rule;
  std::vector<std::size_t> premises;
  KFormula conclusion;
};

struct RuleApplication {
  std::optional<Rule> rule;  // empty when the step is unjustified
  std::vector<std::size_t> premises;  // indices of earlier formulas
  KFormula conclusion;
  std::optional<ImplicitStep> implicit;  // composite steps only
};

struct StepViolation {
  std::size_t step;
  std::string reason;
};

struct CheckedProof {
  std::string proof_id;
  std::vector<RuleApplication> steps;
  bool valid = false;
  std::vector<StepViolation> violations;
  /// Listed formulas the final formula does not depend on.
  std::vector<std::size_t> unused;
};

struct CheckOptions {
  /// Off: a step may lean on one unlisted intermediate formula.
  bool strict = false;
};

CheckedProof check_proof(const WorldSpec& world, std::span<const KFormula> proof,
                         std::span<const KFormula> goal_forms, const CheckOptions& options = {},
                         std::string proof_id = {});

/// A one-rule consequence of a set of facts.
struct Derivation {
  Rule rule;
  std::vector<std::size_t> premises;  // indices into the fact list
  KFormula conclusion;
};

/// Every single-rule consequence of `facts`, in a fixed order (rule order,
/// then premise order). Day context is taken from the day facts in `facts`.
std::vector<Derivation> one_step_consequences(const WorldSpec& world,
                                              std::span<const KFormula> facts);

}  // namespace proofinfo::inference
