#include "proofinfo/profile.hpp"

#include <atomic>
#include <optional>

#include "proofinfo/subset_index.hpp"
#include "proofinfo/weight.hpp"

namespace proofinfo {
namespace {

void check_request(const Proof& proof, std::int64_t k, bool allow_large) {
  const auto n = proof.formulas.size();
  if (k < 0 || static_cast<std::size_t>(k) > n) {
    throw Error(ErrorCode::SizeOutOfRange, "k=" + std::to_string(k) + " for proof '" +
                                               proof.id + "' of size " + std::to_string(n));
  }
  if (n > kMaxSearchFormulas && !allow_large) {
    throw Error(ErrorCode::ProofTooLarge, "proof '" + proof.id + "' has " + std::to_string(n) +
                                              " formulas (limit " +
                                              std::to_string(kMaxSearchFormulas) + ")");
  }
}

struct Incumbent {
  bool found = false;
  double value = 0.0;
  bool certain = false;
  std::vector<std::size_t> positions;
};

void raise_to(std::atomic<double>& shared, double value) {
  double cur = shared.load(std::memory_order_relaxed);
  while (value > cur && !shared.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
  }
}

// Depth-first search over size-k position sets in lexicographic order.
// `shared`, when set, carries the best value any branch has seen; it only
// prunes strictly below itself so that ties survive for the final merge.
class BranchSearch {
 public:
  BranchSearch(const SubsetIndex& index, std::size_t k, std::atomic<double>* shared)
      : index_(index), k_(k), shared_(shared), masks_(k + 1) {
    masks_[0] = index.all();
  }

  void run_all() { descend(0, 0); }

  void run_branch(std::size_t first) {
    masks_[1].assign_and(masks_[0], index_.containing(first));
    chosen_.push_back(first);
    descend(1, first + 1);
    chosen_.pop_back();
  }

  const Incumbent& best() const { return best_; }

 private:
  void descend(std::size_t depth, std::size_t start) {
    const auto& support = masks_[depth];
    const double w = index_.weight(support, scratch_);
    if (depth == k_) {
      if (!best_.found || w > best_.value) {
        best_ = {true, w, index_.certain(support), chosen_};
        if (shared_ != nullptr) raise_to(*shared_, w);
      }
      return;
    }
    if (best_.found && w <= best_.value) return;
    if (shared_ != nullptr && w < shared_->load(std::memory_order_relaxed)) return;

    const auto last = index_.size() - (k_ - depth);
    for (std::size_t i = start; i <= last; ++i) {
      masks_[depth + 1].assign_and(support, index_.containing(i));
      chosen_.push_back(i);
      descend(depth + 1, i + 1);
      chosen_.pop_back();
    }
  }

  const SubsetIndex& index_;
  std::size_t k_;
  std::atomic<double>* shared_;
  std::vector<ProofMask> masks_;
  std::vector<std::size_t> chosen_;
  std::vector<double> scratch_;
  Incumbent best_;
};

DeltaResult to_result(const SubsetIndex& index, const Incumbent& best) {
  DeltaResult r;
  r.value = best.value;
  r.certain = best.certain;
  for (auto p : best.positions) r.witness.push_back(index.formulas()[p]);
  return r;
}

DeltaResult run_search(const KnowledgeSystem& ks, const Proof& proof, std::int64_t k,
                       const SearchOptions& options, bool parallel) {
  check_request(proof, k, options.allow_large);
  const SubsetIndex index(ks, proof);
  const auto size = static_cast<std::size_t>(k);
  if (size == 0 || !parallel) {
    BranchSearch search(index, size, nullptr);
    search.run_all();
    return to_result(index, search.best());
  }

  const auto branches = static_cast<std::int64_t>(index.size() - size + 1);
  std::vector<Incumbent> results(static_cast<std::size_t>(branches));
  std::atomic<double> shared{-1.0};
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t first = 0; first < branches; ++first) {
    BranchSearch search(index, size, &shared);
    search.run_branch(static_cast<std::size_t>(first));
    results[static_cast<std::size_t>(first)] = search.best();
  }

  const Incumbent* winner = nullptr;
  for (const auto& r : results) {
    if (r.found && (winner == nullptr || r.value > winner->value)) winner = &r;
  }
  if (winner == nullptr) {
    throw Error(ErrorCode::InternalInvariantViolation,
                "no subset survived the search for proof '" + proof.id + "'");
  }
  return to_result(index, *winner);
}

}  // namespace

DeltaResult delta(const KnowledgeSystem& ks, const ProbabilityMeasure&, const Proof& proof,
                  std::int64_t k, const SearchOptions& options) {
  return run_search(ks, proof, k, options, options.parallel);
}

DeltaResult delta_serial(const KnowledgeSystem& ks, const ProbabilityMeasure&,
                         const Proof& proof, std::int64_t k, const SearchOptions& options) {
  return run_search(ks, proof, k, options, false);
}

DeltaResult delta_oracle(const KnowledgeSystem& ks, const ProbabilityMeasure& measure,
                         const Proof& proof, std::int64_t k) {
  check_request(proof, k, false);
  const auto sorted = proof.sorted_formulas();
  const auto n = sorted.size();
  const auto size = static_cast<std::size_t>(k);

  // Positions advance like an odometer, which yields lexicographic order.
  std::vector<std::size_t> pos(size);
  for (std::size_t i = 0; i < size; ++i) pos[i] = i;
  std::optional<DeltaResult> best;
  std::vector<Formula> subset(size, sorted.front());
  while (true) {
    for (std::size_t i = 0; i < size; ++i) subset[i] = sorted[pos[i]];
    auto w = weight(ks, measure, subset);
    if (!best || w.value > best->value) best = DeltaResult{w.value, subset, w.certain};

    std::size_t i = size;
    while (i > 0 && pos[i - 1] == n - size + (i - 1)) --i;
    if (i == 0) break;
    ++pos[i - 1];
    for (std::size_t j = i; j < size; ++j) pos[j] = pos[j - 1] + 1;
  }
  return *best;
}

namespace {

WeightProfile build_profile(const KnowledgeSystem& ks, const ProbabilityMeasure& measure,
                            const Proof& proof, const SearchOptions& options) {
  WeightProfile p;
  p.proof_id = proof.id;
  const auto n = proof.formulas.size();
  const auto sorted = proof.sorted_formulas();
  std::optional<std::size_t> zeta;
  for (std::size_t k = 0; k <= n; ++k) {
    if (zeta) {
      // Every subset past the threshold is certain; all tie at zero and the
      // first subset in lexicographic order wins.
      p.deltas.push_back(0.0);
      p.witnesses.emplace_back(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(k));
      continue;
    }
    auto d = delta(ks, measure, proof, static_cast<std::int64_t>(k), options);
    p.deltas.push_back(d.value);
    p.witnesses.push_back(std::move(d.witness));
    if (k >= 1 && d.certain) zeta = k;
  }
  if (!zeta) {
    throw Error(ErrorCode::InternalInvariantViolation,
                "proof '" + proof.id + "' never reaches certainty");
  }
  p.zeta = *zeta;

  double sum = 0.0;
  for (std::size_t i = 1; i <= n; ++i) sum += p.deltas[i];
  p.average_weight = sum / static_cast<double>(n);

  if (p.zeta > 1) {
    double drops = 0.0;
    for (std::size_t i = 1; i < p.zeta; ++i) drops += p.deltas[i] - p.deltas[i + 1];
    p.average_speed = drops / static_cast<double>(p.zeta - 1);
  } else {
    p.average_speed = 0.0;
    p.speed_by_convention = true;
  }
  return p;
}

}  // namespace

WeightProfile profile(const KnowledgeSystem& ks, const ProbabilityMeasure& measure,
                      const Proof& proof, const SearchOptions& options) {
  return build_profile(ks, measure, proof, options);
}

std::size_t zeta(const KnowledgeSystem& ks, const ProbabilityMeasure& measure,
                 const Proof& proof, const SearchOptions& options) {
  for (std::size_t k = 1; k <= proof.formulas.size(); ++k) {
    if (delta(ks, measure, proof, static_cast<std::int64_t>(k), options).certain) return k;
  }
  throw Error(ErrorCode::InternalInvariantViolation,
              "proof '" + proof.id + "' never reaches certainty");
}

double average_weight(const KnowledgeSystem& ks, const ProbabilityMeasure& measure,
                      const Proof& proof, const SearchOptions& options) {
  return build_profile(ks, measure, proof, options).average_weight;
}

double average_speed(const KnowledgeSystem& ks, const ProbabilityMeasure& measure,
                     const Proof& proof, const SearchOptions& options) {
  return build_profile(ks, measure, proof, options).average_speed;
}

std::vector<WeightProfile> profile_all(const KnowledgeSystem& ks,
                                       const ProbabilityMeasure& measure,
                                       const SearchOptions& options) {
  const auto count = static_cast<std::int64_t>(ks.proofs().size());
  std::vector<WeightProfile> out(ks.proofs().size());
  auto inner = options;
  inner.parallel = false;
  std::vector<std::optional<Error>> failures(out.size());
#pragma omp parallel for schedule(dynamic, 1) if (options.parallel)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto at = static_cast<std::size_t>(i);
    try {
      out[at] = build_profile(ks, measure, ks.proofs()[at], inner);
    } catch (const Error& e) {
      failures[at] = e;
    }
  }
  for (auto& f : failures) {
    if (f) throw *f;
  }
  return out;
}

double telescoped_speed(const WeightProfile& p) {
  if (p.zeta <= 1) return 0.0;
  return p.deltas[1] / static_cast<double>(p.zeta - 1);
}

}  // namespace proofinfo
