#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "proofinfo/knowledge_system.hpp"
#include "proofinfo/measure.hpp"

namespace proofinfo {

struct WeightResult {
  double value = 0.0;                  // bits
  std::vector<Rational> per_goal_terms;  // Pr(E(S) ∩ Q_phi), by goal index
  std::size_t support_size = 0;
  bool certain = false;        // E(S) nonempty and inside one goal class
  bool empty_support = false;  // value is 0 by convention, not certainty
};

/// Entropic weight D(S) = -Σ x·log x + T·log T over the class masses x of
/// E(S), T = Pr(E(S)).
WeightResult weight(const KnowledgeSystem& ks, const ProbabilityMeasure& measure,
                    std::span<const Formula> subset);

/// The ratio form -Σ x·log(x/T), zero-mass terms skipped. Kept as a second
/// evaluation route for cross-checking weight().
double weight_defform(const KnowledgeSystem& ks, const ProbabilityMeasure& measure,
                      std::span<const Formula> subset);

/// Structural test, no floating point involved.
bool is_certain(const KnowledgeSystem& ks, const ProbabilityMeasure& measure,
                std::span<const Formula> subset);

/// D from per-class masses given as doubles. The zero convention and the
/// single-class shortcut are applied here so every caller agrees bit for bit.
double entropic_weight_from_masses(std::span<const double> class_mass);

}  // namespace proofinfo
