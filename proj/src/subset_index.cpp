#include "proofinfo/subset_index.hpp"

#include <algorithm>
#include <bit>

#include "proofinfo/weight.hpp"

namespace proofinfo {

ProofMask::ProofMask(std::size_t bits, bool fill) : words_((bits + 63) / 64, 0) {
  if (fill) {
    for (std::size_t i = 0; i < bits; ++i) set(i);
  }
}

bool ProofMask::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t ProofMask::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t ProofMask::count_and(const ProofMask& other) const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    n += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  }
  return n;
}

void ProofMask::assign_and(const ProofMask& a, const ProofMask& b) {
  words_.resize(a.words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] = a.words_[i] & b.words_[i];
}

SubsetIndex::SubsetIndex(const KnowledgeSystem& ks, const Proof& proof)
    : formulas_(proof.sorted_formulas()),
      all_(ks.proofs().size(), true),
      goal_count_(ks.goal_count()) {
  const auto n = ks.proofs().size();
  containing_.assign(formulas_.size(), ProofMask(n));
  for (std::size_t p = 0; p < n; ++p) {
    const auto& other = ks.proofs()[p];
    for (std::size_t i = 0; i < formulas_.size(); ++i) {
      if (other.contains(formulas_[i])) containing_[i].set(p);
    }
  }
  classes_.assign(goal_count_, ProofMask(n));
  class_size_.resize(goal_count_);
  for (std::size_t g = 0; g < goal_count_; ++g) {
    for (auto p : ks.class_members(g)) classes_[g].set(p);
    class_size_[g] = ks.class_members(g).size();
  }
}

void SubsetIndex::class_masses(const ProofMask& support, std::vector<double>& out) const {
  out.resize(goal_count_);
  for (std::size_t g = 0; g < goal_count_; ++g) {
    out[g] = class_mass(support.count_and(classes_[g]), goal_count_, class_size_[g]);
  }
}

bool SubsetIndex::certain(const ProofMask& support) const {
  std::size_t hit = 0;
  for (const auto& c : classes_) {
    if (support.count_and(c) > 0 && ++hit > 1) return false;
  }
  return hit == 1;
}

double SubsetIndex::weight(const ProofMask& support, std::vector<double>& scratch) const {
  class_masses(support, scratch);
  return entropic_weight_from_masses(scratch);
}

}  // namespace proofinfo
