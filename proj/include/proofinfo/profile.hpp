#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "proofinfo/knowledge_system.hpp"
#include "proofinfo/measure.hpp"

namespace proofinfo {

/// Proofs longer than this are refused unless SearchOptions::allow_large.
inline constexpr std::size_t kMaxSearchFormulas = 30;

struct SearchOptions {
  bool allow_large = false;
  bool parallel = true;
};

struct DeltaResult {
  double value = 0.0;
  std::vector<Formula> witness;  // ascending text order
  bool certain = false;          // structural zero
};

/// δ(Q,k): the largest D(S) over size-k subsets S of the proof. Exact
/// branch-and-bound; D never grows as S grows, so a partial subset whose
/// weight is at or below the incumbent is cut. The first top-level branches
/// are searched in parallel; ties go to the lexicographically smallest
/// witness regardless of schedule.
DeltaResult delta(const KnowledgeSystem& ks, const ProbabilityMeasure& measure,
                  const Proof& proof, std::int64_t k, const SearchOptions& options = {});

/// Same search, single-threaded.
DeltaResult delta_serial(const KnowledgeSystem& ks, const ProbabilityMeasure& measure,
                         const Proof& proof, std::int64_t k,
                         const SearchOptions& options = {});

/// Exhaustive reference: visits every size-k subset, no pruning.
DeltaResult delta_oracle(const KnowledgeSystem& ks, const ProbabilityMeasure& measure,
                         const Proof& proof, std::int64_t k);

struct WeightProfile {
  std::string proof_id;
  std::vector<double> deltas;                 // k = 0..|Q|
  std::vector<std::vector<Formula>> witnesses;  // k = 0..|Q|
  std::size_t zeta = 0;
  double average_weight = 0.0;
  double average_speed = 0.0;
  bool speed_by_convention = false;  // zeta == 1, speed reported as 0
};

std::size_t zeta(const KnowledgeSystem& ks, const ProbabilityMeasure& measure,
                 const Proof& proof, const SearchOptions& options = {});
double average_weight(const KnowledgeSystem& ks, const ProbabilityMeasure& measure,
                      const Proof& proof, const SearchOptions& options = {});
double average_speed(const KnowledgeSystem& ks, const ProbabilityMeasure& measure,
                     const Proof& proof, const SearchOptions& options = {});

WeightProfile profile(const KnowledgeSystem& ks, const ProbabilityMeasure& measure,
                      const Proof& proof, const SearchOptions& options = {});

/// Profiles of every proof, in document order.
std::vector<WeightProfile> profile_all(const KnowledgeSystem& ks,
                                       const ProbabilityMeasure& measure,
                                       const SearchOptions& options = {});

/// δ(Q,1)/(ζ-1), the telescoped form of the average speed.
double telescoped_speed(const WeightProfile& p);

}  // namespace proofinfo
