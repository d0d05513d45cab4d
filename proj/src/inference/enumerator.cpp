#include "proofinfo/inference/enumerator.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "proofinfo/error.hpp"
#include "proofinfo/inference/checker.hpp"

namespace proofinfo::inference {
namespace {

struct Node {
  KFormula formula;
  bool data = false;
  std::vector<std::size_t> premises;
};

class Chain {
 public:
  std::size_t add(Node node) {
    index_.emplace(node.formula, nodes_.size());
    nodes_.push_back(std::move(node));
    return nodes_.size() - 1;
  }

  std::optional<std::size_t> find(const KFormula& f) const {
    auto it = index_.find(f);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const std::vector<Node>& nodes() const { return nodes_; }
  Node& node(std::size_t i) { return nodes_[i]; }

  std::set<std::size_t> closure(std::size_t root) const {
    std::set<std::size_t> seen;
    std::vector<std::size_t> pending{root};
    while (!pending.empty()) {
      auto i = pending.back();
      pending.pop_back();
      if (!seen.insert(i).second) continue;
      for (auto p : nodes_[i].premises) pending.push_back(p);
    }
    return seen;
  }

  // Listing size if `node` were justified by `premises`; nullopt on a cycle.
  std::optional<std::size_t> cost_with(std::size_t node,
                                       const std::vector<std::size_t>& premises) const {
    std::set<std::size_t> all{node};
    for (auto p : premises) {
      auto c = closure(p);
      if (c.contains(node)) return std::nullopt;
      all.insert(c.begin(), c.end());
    }
    return all.size();
  }

  std::vector<KFormula> listing(std::size_t goal) const {
    const auto members = closure(goal);
    std::vector<KFormula> out;
    for (auto i : members) {
      if (nodes_[i].data) out.push_back(nodes_[i].formula);
    }
    std::set<std::size_t> placed;
    post_order(goal, placed, out);
    return out;
  }

 private:
  void post_order(std::size_t i, std::set<std::size_t>& placed, std::vector<KFormula>& out) const {
    if (nodes_[i].data || !placed.insert(i).second) return;
    for (auto p : nodes_[i].premises) post_order(p, placed, out);
    out.push_back(nodes_[i].formula);
  }

  std::vector<Node> nodes_;
  std::map<KFormula, std::size_t> index_;
};

}  // namespace

EnumerationResult enumerate_proofs(const WorldSpec& world, std::span<const KFormula> user_data,
                                   const std::function<bool(const std::string&)>& goal,
                                   const EnumerationOptions& options) {
  Chain chain;
  for (const auto& f : user_data) {
    if (!f.is_user_data()) {
      throw Error(ErrorCode::NotUserData, to_string(f) + " cannot be supplied as user data");
    }
    if (!chain.find(f)) chain.add({f, true, {}});
  }
  possible_days(world, user_data);

  for (std::size_t round = 0; round < options.max_steps; ++round) {
    std::vector<KFormula> facts;
    for (const auto& n : chain.nodes()) facts.push_back(n.formula);
    bool changed = false;
    for (auto& d : one_step_consequences(world, facts)) {
      auto existing = chain.find(d.conclusion);
      if (!existing) {
        chain.add({std::move(d.conclusion), false, std::move(d.premises)});
        changed = true;
        continue;
      }
      if (chain.nodes()[*existing].data) continue;
      auto now = chain.closure(*existing).size();
      auto alt = chain.cost_with(*existing, d.premises);
      if (alt && *alt < now) {
        chain.node(*existing).premises = std::move(d.premises);
        changed = true;
      }
    }
    if (!changed) break;
  }

  EnumerationResult result;
  for (const auto& p : world.participants) {
    if (chain.find(KFormula::win(p)) && chain.find(KFormula::not_win(p))) {
      result.contradictions.push_back(p);
    }
  }
  for (const auto& p : world.participants) {
    if (!goal(p)) continue;
    if (auto n = chain.find(KFormula::win(p))) {
      result.proofs.push_back({KFormula::win(p), chain.listing(*n)});
    }
  }
  if (options.include_disjunctive) {
    for (std::size_t i = 0; i < chain.nodes().size(); ++i) {
      const auto& f = chain.nodes()[i].formula;
      if (f.kind != KFormulaKind::WinDisj) continue;
      bool wanted = std::all_of(f.participants.begin(), f.participants.end(), goal);
      if (wanted) result.proofs.push_back({f, chain.listing(i)});
    }
  }
  return result;
}

}  // namespace proofinfo::inference
