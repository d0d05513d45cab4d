#include "proofinfo/measure.hpp"

#include <algorithm>
#include <cmath>

namespace proofinfo {

ProbabilityMeasure proof_measure(const KnowledgeSystem& ks) {
  const auto m = static_cast<long long>(ks.goal_count());
  ProbabilityMeasure measure;
  measure.per_goal.assign(ks.goal_count(), Rational(1, m));
  measure.per_proof.resize(ks.proofs().size());
  for (std::size_t g = 0; g < ks.goal_count(); ++g) {
    const auto& members = ks.class_members(g);
    const Rational share(1, m * static_cast<long long>(members.size()));
    for (auto p : members) measure.per_proof[p] = share;
  }
  return measure;
}

std::vector<std::string> goal_class(const KnowledgeSystem& ks, const Formula& goal) {
  auto g = ks.find_goal(goal);
  if (!g) throw Error(ErrorCode::UnknownGoal, "'" + goal.text() + "' is not a goal");
  std::vector<std::string> ids;
  for (auto p : ks.class_members(*g)) ids.push_back(ks.proofs()[p].id);
  return ids;
}

Support support(const KnowledgeSystem& ks, const ProbabilityMeasure& measure,
                std::span<const Formula> subset) {
  Support s;
  s.per_goal_mass.assign(ks.goal_count(), Rational(0));
  for (std::size_t p = 0; p < ks.proofs().size(); ++p) {
    const auto& proof = ks.proofs()[p];
    bool all = std::all_of(subset.begin(), subset.end(),
                           [&](const Formula& f) { return proof.contains(f); });
    if (!all) continue;
    s.proofs.push_back(p);
    s.per_goal_mass[ks.goal_of(p)] += measure.per_proof[p];
  }
  for (const auto& m : s.per_goal_mass) s.total_mass += m;
  return s;
}

double shannon_entropy(std::span<const Rational> distribution) {
  Rational sum(0);
  for (const auto& p : distribution) {
    if (p < 0) throw Error(ErrorCode::NotADistribution, "negative entry " + format_rational(p));
    sum += p;
  }
  if (sum != 1) {
    throw Error(ErrorCode::NotADistribution, "entries sum to " + format_rational(sum));
  }
  double h = 0.0;
  for (const auto& p : distribution) {
    if (p == 0) continue;
    const double x = to_double(p);
    h -= x * std::log2(x);
  }
  return h;
}

}  // namespace proofinfo
