#include "proofinfo/inference/checker.hpp"

#include <algorithm>

#include "proofinfo/error.hpp"

namespace proofinfo::inference {

std::string_view to_string(Rule rule) {
  switch (rule) {
    case Rule::UserData: return "UserData";
    case Rule::TruthfulBroadcast: return "TruthfulBroadcast";
    case Rule::DeceitfulBroadcast: return "DeceitfulBroadcast";
    case Rule::ExistenceDisj: return "ExistenceDisj";
    case Rule::DisjElim: return "DisjElim";
    case Rule::Uniqueness: return "Uniqueness";
  }
  return "Unknown";
}

std::vector<Derivation> one_step_consequences(const WorldSpec& world,
                                              std::span<const KFormula> facts) {
  std::vector<std::size_t> day_facts;
  for (std::size_t i = 0; i < facts.size(); ++i) {
    if (facts[i].is_day_fact()) day_facts.push_back(i);
  }

  std::vector<Derivation> out;
  auto broadcasts = [&](Reliability wanted, Rule rule) {
    for (std::size_t i = 0; i < facts.size(); ++i) {
      const auto& f = facts[i];
      if (f.kind != KFormulaKind::Brd) continue;
      if (resolve_reliability(world, f.source, facts) != wanted) continue;
      std::vector<std::size_t> premises{i};
      if (world.sources.at(f.source).depends_on_day()) {
        premises.insert(premises.end(), day_facts.begin(), day_facts.end());
      }
      out.push_back({rule, std::move(premises),
                     wanted == Reliability::Truthful ? KFormula::win(f.participant())
                                                     : KFormula::not_win(f.participant())});
    }
  };
  broadcasts(Reliability::Truthful, Rule::TruthfulBroadcast);
  broadcasts(Reliability::Deceitful, Rule::DeceitfulBroadcast);

  for (std::size_t i = 0; i < facts.size(); ++i) {
    if (facts[i].kind != KFormulaKind::NotWin) continue;
    std::vector<std::string> rest;
    for (const auto& p : world.participants) {
      if (p != facts[i].participant()) rest.push_back(p);
    }
    out.push_back({Rule::ExistenceDisj, {i}, KFormula::win_disj(std::move(rest), world)});
  }

  for (std::size_t i = 0; i < facts.size(); ++i) {
    if (facts[i].kind != KFormulaKind::WinDisj) continue;
    const auto& names = facts[i].participants;
    for (std::size_t j = 0; j < facts.size(); ++j) {
      if (facts[j].kind != KFormulaKind::NotWin) continue;
      const auto& gone = facts[j].participant();
      if (std::find(names.begin(), names.end(), gone) == names.end()) continue;
      std::vector<std::string> rest;
      for (const auto& p : names) {
        if (p != gone) rest.push_back(p);
      }
      out.push_back({Rule::DisjElim, {i, j}, KFormula::win_disj(std::move(rest), world)});
    }
  }

  for (std::size_t i = 0; i < facts.size(); ++i) {
    if (facts[i].kind != KFormulaKind::Win) continue;
    for (const auto& p : world.participants) {
      if (p != facts[i].participant()) out.push_back({Rule::Uniqueness, {i}, KFormula::not_win(p)});
    }
  }
  return out;
}

namespace {

const Derivation* find_conclusion(const std::vector<Derivation>& ds, const KFormula& target) {
  for (const auto& d : ds) {
    if (d.conclusion == target) return &d;
  }
  return nullptr;
}

std::string failure_reason(const WorldSpec& world, std::span<const KFormula> known,
                           const KFormula& target) {
  if (target.kind == KFormulaKind::Win || target.kind == KFormulaKind::NotWin) {
    for (const auto& f : known) {
      if (f.kind == KFormulaKind::Brd && f.participant() == target.participant() &&
          resolve_reliability(world, f.source, known) == Reliability::Unknown) {
        return f.source + " reliability unknown";
      }
    }
  }
  return "no rule derives " + to_string(target) + " from earlier formulas";
}

}  // namespace

CheckedProof check_proof(const WorldSpec& world, std::span<const KFormula> proof,
                         std::span<const KFormula> goal_forms, const CheckOptions& options,
                         std::string proof_id) {
  CheckedProof result;
  result.proof_id = std::move(proof_id);
  if (proof.empty()) {
    result.violations.push_back({0, "empty proof"});
    return result;
  }

  for (std::size_t i = 0; i < proof.size(); ++i) {
    const auto& target = proof[i];
    RuleApplication step;
    step.conclusion = target;
    if (target.is_user_data()) {
      step.rule = Rule::UserData;
      result.steps.push_back(std::move(step));
      continue;
    }

    const auto known = proof.first(i);
    try {
      const auto direct = one_step_consequences(world, known);
      if (const auto* d = find_conclusion(direct, target)) {
        step.rule = d->rule;
        step.premises = d->premises;
      } else if (!options.strict) {
        // Composite step: one unlisted formula derivable from the listing.
        std::vector<KFormula> extended(known.begin(), known.end());
        const auto virtual_index = extended.size();
        for (const auto& hop : direct) {
          if (std::find(known.begin(), known.end(), hop.conclusion) != known.end()) continue;
          extended.resize(virtual_index);
          extended.push_back(hop.conclusion);
          const auto second = one_step_consequences(world, extended);
          const auto* d2 = find_conclusion(second, target);
          if (d2 == nullptr) continue;
          step.rule = d2->rule;
          for (auto p : d2->premises) {
            if (p != virtual_index) step.premises.push_back(p);
          }
          step.implicit = ImplicitStep{hop.rule, hop.premises, hop.conclusion};
          break;
        }
      }
      if (!step.rule) result.violations.push_back({i, failure_reason(world, known, target)});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InconsistentDayContext) throw;
      result.violations.push_back({i, "inconsistent day context"});
    }
    result.steps.push_back(std::move(step));
  }

  const auto last = proof.size() - 1;
  if (std::find(goal_forms.begin(), goal_forms.end(), proof[last]) == goal_forms.end()) {
    result.violations.push_back({last, "final formula " + to_string(proof[last]) + " is not a goal"});
  }
  result.valid = result.violations.empty();

  std::vector<bool> used(proof.size(), false);
  std::vector<std::size_t> pending{last};
  while (!pending.empty()) {
    auto i = pending.back();
    pending.pop_back();
    if (used[i]) continue;
    used[i] = true;
    const auto& s = result.steps[i];
    pending.insert(pending.end(), s.premises.begin(), s.premises.end());
    if (s.implicit) pending.insert(pending.end(), s.implicit->premises.begin(), s.implicit->premises.end());
  }
  for (std::size_t i = 0; i < proof.size(); ++i) {
    if (!used[i]) result.unused.push_back(i);
  }
  return result;
}

}  // namespace proofinfo::inference
