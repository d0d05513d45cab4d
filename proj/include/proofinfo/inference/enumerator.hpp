#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "proofinfo/inference/kformula.hpp"
#include "proofinfo/inference/world.hpp"

namespace proofinfo::inference {

struct EnumerationOptions {
  std::size_t max_steps = 8;  // forward-chaining rounds
  bool include_disjunctive = false;
};

struct EnumeratedProof {
  KFormula goal;
  std::vector<KFormula> formulas;  // user data first, then derived, goal last
};

struct EnumerationResult {
  std::vector<EnumeratedProof> proofs;
  /// Participants for which both Win and ¬Win were derived.
  std::vector<std::string> contradictions;
};

/// Forward-chains from `user_data` and emits one shortest-found proof per
/// derivable Win(a) with goal(a). Throws NotUserData, InconsistentDayContext.
EnumerationResult enumerate_proofs(const WorldSpec& world, std::span<const KFormula> user_data,
                                   const std::function<bool(const std::string&)>& goal,
                                   const EnumerationOptions& options = {});

}  // namespace proofinfo::inference
