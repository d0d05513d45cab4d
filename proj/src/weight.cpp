#include "proofinfo/weight.hpp"

#include <cmath>

#include "proofinfo/subset_index.hpp"

namespace proofinfo {
namespace {

struct ClassCounts {
  std::vector<double> mass;
  std::vector<Rational> exact;
  std::size_t support_size = 0;
  std::size_t occupied = 0;
};

ClassCounts count_classes(const KnowledgeSystem& ks, const ProbabilityMeasure& measure,
                          std::span<const Formula> subset) {
  auto s = support(ks, measure, subset);
  std::vector<std::size_t> counts(ks.goal_count(), 0);
  for (auto p : s.proofs) ++counts[ks.goal_of(p)];
  ClassCounts c;
  c.support_size = s.proofs.size();
  c.exact = std::move(s.per_goal_mass);
  c.mass.resize(ks.goal_count());
  for (std::size_t g = 0; g < ks.goal_count(); ++g) {
    c.mass[g] = class_mass(counts[g], ks.goal_count(), ks.class_members(g).size());
    if (counts[g] > 0) ++c.occupied;
  }
  return c;
}

}  // namespace

double entropic_weight_from_masses(std::span<const double> class_mass) {
  double total = 0.0;
  std::size_t occupied = 0;
  for (double x : class_mass) {
    total += x;
    if (x > 0.0) ++occupied;
  }
  if (occupied <= 1) return 0.0;
  double value = total * std::log2(total);
  for (double x : class_mass) {
    if (x > 0.0) value -= x * std::log2(x);
  }
  return value;
}

WeightResult weight(const KnowledgeSystem& ks, const ProbabilityMeasure& measure,
                    std::span<const Formula> subset) {
  auto c = count_classes(ks, measure, subset);
  WeightResult r;
  r.value = entropic_weight_from_masses(c.mass);
  r.per_goal_terms = std::move(c.exact);
  r.support_size = c.support_size;
  r.empty_support = c.support_size == 0;
  r.certain = c.occupied == 1;
  return r;
}

double weight_defform(const KnowledgeSystem& ks, const ProbabilityMeasure& measure,
                      std::span<const Formula> subset) {
  auto c = count_classes(ks, measure, subset);
  double total = 0.0;
  for (double x : c.mass) total += x;
  if (total == 0.0) return 0.0;
  double value = 0.0;
  for (double x : c.mass) {
    if (x > 0.0) value -= x * std::log2(x / total);
  }
  return value;
}

bool is_certain(const KnowledgeSystem& ks, const ProbabilityMeasure& measure,
                std::span<const Formula> subset) {
  return count_classes(ks, measure, subset).occupied == 1;
}

}  // namespace proofinfo
