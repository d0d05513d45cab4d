#pragma once

// Test-only helpers: random knowledge systems and an independent evaluation
// of the entropic weight straight from its definition.

#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "proofinfo/knowledge_system.hpp"
#include "proofinfo/rational.hpp"

namespace proofinfo::testing {

inline constexpr double kLog2Of3 = 1.5849625007211562;

// High-precision values of the worked example (30-digit recomputation).
inline constexpr double kWeightDayFri = 0.306098611351496505;
inline constexpr double kWeightS1 = 1.21073299469330669;
inline constexpr double kWeightS2 = 0.539416996919260355;
inline constexpr double kWeightS3 = 0.360568055315170162;
inline constexpr double kEntropyY = 1.41856444319959641;

struct Shape {
  int max_goals = 4;
  int max_pool = 8;        // shared non-goal formulas; proof size <= max_pool + 1
  int max_per_goal = 4;
};

inline std::string pool_formula(int i) { return "f" + std::to_string(i); }
inline std::string goal_formula(int i) { return "Goal(" + std::to_string(i) + ")"; }

inline KnowledgeSystem random_system(std::mt19937_64& rng, const Shape& shape = {}) {
  std::uniform_int_distribution<int> goals_dist(1, shape.max_goals);
  std::uniform_int_distribution<int> pool_dist(1, shape.max_pool);
  std::uniform_int_distribution<int> per_goal_dist(1, shape.max_per_goal);
  std::bernoulli_distribution coin(0.5);

  const int m = goals_dist(rng);
  const int pool = pool_dist(rng);
  std::vector<std::string> goals;
  std::vector<ProofDraft> proofs;
  for (int g = 0; g < m; ++g) {
    goals.push_back(goal_formula(g));
    std::set<std::vector<std::string>> bodies;
    const int wanted = per_goal_dist(rng);
    for (int attempt = 0; attempt < 4 * wanted && static_cast<int>(bodies.size()) < wanted;
         ++attempt) {
      std::vector<std::string> body;
      for (int f = 0; f < pool; ++f) {
        if (coin(rng)) body.push_back(pool_formula(f));
      }
      body.push_back(goal_formula(g));
      if (!bodies.insert(body).second) continue;
      proofs.push_back({"P" + std::to_string(proofs.size()), body});
    }
  }
  return KnowledgeSystem::build(goals, proofs);
}

/// Random subset of `from`, each element kept with probability 1/2.
inline std::vector<Formula> random_subset(std::mt19937_64& rng, const std::vector<Formula>& from) {
  std::bernoulli_distribution coin(0.5);
  std::vector<Formula> out;
  for (const auto& f : from) {
    if (coin(rng)) out.push_back(f);
  }
  return out;
}

struct OracleWeight {
  long double value;
  bool single_class;
  bool empty;
};

/// D(S) from the definition: scan every proof for S ⊆ Q, accumulate exact
/// class masses 1/(M·|Q_phi|), then apply the log-sum form in long double.
inline OracleWeight oracle_weight(const KnowledgeSystem& ks, const std::vector<Formula>& s) {
  const auto m = ks.goal_count();
  std::vector<Rational> mass(m, Rational(0));
  std::vector<std::size_t> class_size(m, 0);
  for (std::size_t p = 0; p < ks.proofs().size(); ++p) ++class_size[ks.goal_of(p)];
  bool any = false;
  for (std::size_t p = 0; p < ks.proofs().size(); ++p) {
    const auto& proof = ks.proofs()[p];
    bool inside = true;
    for (const auto& f : s) {
      bool found = false;
      for (const auto& g : proof.formulas) found = found || g == f;
      inside = inside && found;
    }
    if (!inside) continue;
    any = true;
    const auto g = ks.goal_of(p);
    mass[g] += Rational(1, static_cast<long long>(m * class_size[g]));
  }
  Rational total(0);
  std::size_t occupied = 0;
  for (const auto& x : mass) {
    total += x;
    if (x > 0) ++occupied;
  }
  long double value = 0.0L;
  for (const auto& x : mass) {
    if (x == 0) continue;
    const auto xv = x.convert_to<long double>();
    value -= xv * std::log2(xv);
  }
  if (total > 0) {
    const auto t = total.convert_to<long double>();
    value += t * std::log2(t);
  }
  return {value, occupied == 1, !any};
}

}  // namespace proofinfo::testing
