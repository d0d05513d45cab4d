#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "proofinfo/knowledge_system.hpp"
#include "proofinfo/rational.hpp"

namespace proofinfo {

/// Maximum-uncertainty measure: every goal class carries 1/M and splits it
/// evenly across its proofs.
struct ProbabilityMeasure {
  std::vector<Rational> per_proof;  // by proof index
  std::vector<Rational> per_goal;   // by goal index, each 1/M
};

/// E(S) together with its goal-class masses.
struct Support {
  std::vector<std::size_t> proofs;     // proof indices, document order
  std::vector<Rational> per_goal_mass;  // Pr(E(S) ∩ Q_phi), by goal index
  Rational total_mass;                  // Pr(E(S))

  bool empty() const noexcept { return proofs.empty(); }
};

ProbabilityMeasure proof_measure(const KnowledgeSystem& ks);

/// Ids of the proofs whose goal is `goal`; throws UnknownGoal.
std::vector<std::string> goal_class(const KnowledgeSystem& ks, const Formula& goal);

Support support(const KnowledgeSystem& ks, const ProbabilityMeasure& measure,
                std::span<const Formula> subset);

/// Shannon entropy in bits with 0·log 0 = 0. Throws NotADistribution unless
/// the entries are nonnegative and sum to exactly 1.
double shannon_entropy(std::span<const Rational> distribution);

}  // namespace proofinfo
