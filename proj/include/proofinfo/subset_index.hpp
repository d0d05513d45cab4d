#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "proofinfo/knowledge_system.hpp"

namespace proofinfo {

/// Dense bit set over proof indices.
class ProofMask {
 public:
  ProofMask() = default;
  explicit ProofMask(std::size_t bits, bool fill = false);

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  bool none() const;
  std::size_t count() const;
  std::size_t count_and(const ProofMask& other) const;

  /// this = a & b, sizes must match.
  void assign_and(const ProofMask& a, const ProofMask& b);

  std::span<const std::uint64_t> words() const { return words_; }

 private:
  std::vector<std::uint64_t> words_;
};

/// Precomputed membership masks for evaluating D over subsets of one proof.
/// Position i of the proof refers to its i-th formula in ascending text order.
class SubsetIndex {
 public:
  SubsetIndex(const KnowledgeSystem& ks, const Proof& proof);

  std::size_t size() const noexcept { return formulas_.size(); }
  const std::vector<Formula>& formulas() const noexcept { return formulas_; }
  const ProofMask& all() const noexcept { return all_; }
  const ProofMask& containing(std::size_t position) const { return containing_[position]; }

  /// Class masses of the proofs in `support`, by goal index.
  void class_masses(const ProofMask& support, std::vector<double>& out) const;
  /// Nonempty and confined to one class.
  bool certain(const ProofMask& support) const;
  double weight(const ProofMask& support, std::vector<double>& scratch) const;

 private:
  std::vector<Formula> formulas_;
  ProofMask all_;
  std::vector<ProofMask> containing_;
  std::vector<ProofMask> classes_;
  std::vector<std::size_t> class_size_;
  std::size_t goal_count_ = 0;
};

/// Mass of `count` proofs of a class of `class_size` proofs among M goals.
/// Shared by every weight evaluation so results agree bit for bit.
inline double class_mass(std::size_t count, std::size_t goal_count, std::size_t class_size) {
  return static_cast<double>(count) / static_cast<double>(goal_count * class_size);
}

}  // namespace proofinfo
