#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "proofinfo/inference/world.hpp"

namespace proofinfo::inference {

enum class KFormulaKind { DayIs, DayIsNot, Brd, Win, NotWin, WinDisj };

/// A kernel formula. `participants` holds one name for Brd/Win/NotWin and
/// two or more, in world order, for WinDisj.
struct KFormula {
  KFormulaKind kind = KFormulaKind::Win;
  std::string day;
  std::string source;
  std::vector<std::string> participants;

  static KFormula day_is(std::string day);
  static KFormula day_is_not(std::string day);
  static KFormula brd(std::string source, std::string participant);
  static KFormula win(std::string participant);
  static KFormula not_win(std::string participant);
  /// Collapses to Win when fewer than two distinct names remain.
  static KFormula win_disj(std::vector<std::string> participants, const WorldSpec& world);

  const std::string& participant() const { return participants.front(); }
  bool is_day_fact() const noexcept {
    return kind == KFormulaKind::DayIs || kind == KFormulaKind::DayIsNot;
  }
  /// Day and broadcast facts are the only admissible user data.
  bool is_user_data() const noexcept { return is_day_fact() || kind == KFormulaKind::Brd; }

  friend bool operator==(const KFormula&, const KFormula&) = default;
  friend auto operator<=>(const KFormula&, const KFormula&) = default;
};

/// Canonical text, e.g. "Day≠Fri", "¬Win(Fok)", "Win(Bok)∨Win(Fok)".
std::string to_string(const KFormula& f);

/// Grammar: Day=d | Day≠d | Brd(R,a) | Win(a) | ¬Win(a) | Win(a)∨Win(b)[∨...].
/// ASCII aliases are accepted. Throws UnparsableFormula or UnknownName.
KFormula parse_kformula(std::string_view text, const WorldSpec& world);

/// Days still possible under the day facts in `context` (non-day formulas
/// are ignored). Throws InconsistentDayContext if none remain.
std::vector<std::string> possible_days(const WorldSpec& world,
                                       std::span<const KFormula> context);

Reliability resolve_reliability(const WorldSpec& world, std::string_view source,
                                std::span<const KFormula> day_context);

}  // namespace proofinfo::inference
