#include "proofinfo/inference/kformula.hpp"

#include <algorithm>
#include <optional>

#include "proofinfo/error.hpp"
#include "proofinfo/formula.hpp"

namespace proofinfo::inference {
namespace {

constexpr std::string_view kNot = "¬";
constexpr std::string_view kOr = "∨";
constexpr std::string_view kNeq = "≠";

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

[[noreturn]] void unparsable(std::string_view text, std::string_view why) {
  throw Error(ErrorCode::UnparsableFormula, "'" + std::string(text) + "': " + std::string(why));
}

// Returns the inside of "<head>(...)", or nullopt if `s` has another shape.
std::optional<std::string_view> call_args(std::string_view s, std::string_view head) {
  s = trim(s);
  if (!s.starts_with(head)) return std::nullopt;
  auto rest = trim(s.substr(head.size()));
  if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')') return std::nullopt;
  return trim(rest.substr(1, rest.size() - 2));
}

std::string participant(std::string_view name, const WorldSpec& world) {
  name = trim(name);
  if (!world.has_participant(name)) {
    throw Error(ErrorCode::UnknownName, "participant '" + std::string(name) + "'");
  }
  return std::string(name);
}

std::string day(std::string_view name, const WorldSpec& world) {
  name = trim(name);
  if (!world.has_day(name)) throw Error(ErrorCode::UnknownName, "day '" + std::string(name) + "'");
  return std::string(name);
}

}  // namespace

KFormula KFormula::day_is(std::string d) { return {KFormulaKind::DayIs, std::move(d), {}, {}}; }
KFormula KFormula::day_is_not(std::string d) {
  return {KFormulaKind::DayIsNot, std::move(d), {}, {}};
}
KFormula KFormula::brd(std::string source, std::string p) {
  return {KFormulaKind::Brd, {}, std::move(source), {std::move(p)}};
}
KFormula KFormula::win(std::string p) { return {KFormulaKind::Win, {}, {}, {std::move(p)}}; }
KFormula KFormula::not_win(std::string p) { return {KFormulaKind::NotWin, {}, {}, {std::move(p)}}; }

KFormula KFormula::win_disj(std::vector<std::string> ps, const WorldSpec& world) {
  std::sort(ps.begin(), ps.end(), [&](const std::string& a, const std::string& b) {
    return world.participant_rank(a) < world.participant_rank(b);
  });
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  if (ps.empty()) throw Error(ErrorCode::UnparsableFormula, "empty disjunction");
  if (ps.size() == 1) return win(std::move(ps.front()));
  return {KFormulaKind::WinDisj, {}, {}, std::move(ps)};
}

std::string to_string(const KFormula& f) {
  switch (f.kind) {
    case KFormulaKind::DayIs: return "Day=" + f.day;
    case KFormulaKind::DayIsNot: return "Day" + std::string(kNeq) + f.day;
    case KFormulaKind::Brd: return "Brd(" + f.source + "," + f.participant() + ")";
    case KFormulaKind::Win: return "Win(" + f.participant() + ")";
    case KFormulaKind::NotWin: return std::string(kNot) + "Win(" + f.participant() + ")";
    case KFormulaKind::WinDisj: {
      std::string out;
      for (const auto& p : f.participants) {
        if (!out.empty()) out += kOr;
        out += "Win(" + p + ")";
      }
      return out;
    }
  }
  return {};
}

KFormula parse_kformula(std::string_view raw, const WorldSpec& world) {
  const auto normalized = Formula::normalize(raw);
  std::string_view text = normalized.text();

  if (text.starts_with("Day")) {
    auto rest = trim(text.substr(3));
    if (rest.starts_with("=")) return KFormula::day_is(day(rest.substr(1), world));
    if (rest.starts_with(kNeq)) return KFormula::day_is_not(day(rest.substr(kNeq.size()), world));
    unparsable(text, "expected Day=<d> or Day≠<d>");
  }
  if (auto args = call_args(text, "Brd")) {
    auto comma = args->find(',');
    if (comma == std::string_view::npos) unparsable(text, "expected Brd(<source>,<participant>)");
    auto source = trim(args->substr(0, comma));
    if (!world.has_source(source)) {
      throw Error(ErrorCode::UnknownName, "source '" + std::string(source) + "'");
    }
    return KFormula::brd(std::string(source), participant(args->substr(comma + 1), world));
  }
  if (text.starts_with(kNot)) {
    if (auto args = call_args(text.substr(kNot.size()), "Win")) {
      return KFormula::not_win(participant(*args, world));
    }
    unparsable(text, "only ¬Win(<participant>) may be negated");
  }
  if (text.find(kOr) != std::string_view::npos) {
    std::vector<std::string> names;
    std::string_view rest = text;
    while (true) {
      auto at = rest.find(kOr);
      auto term = rest.substr(0, at);
      auto args = call_args(term, "Win");
      if (!args) unparsable(text, "disjunction terms must be Win(<participant>)");
      names.push_back(participant(*args, world));
      if (at == std::string_view::npos) break;
      rest = rest.substr(at + kOr.size());
    }
    return KFormula::win_disj(std::move(names), world);
  }
  if (auto args = call_args(text, "Win")) return KFormula::win(participant(*args, world));
  unparsable(text, "unrecognized formula");
}

std::vector<std::string> possible_days(const WorldSpec& world, std::span<const KFormula> context) {
  std::vector<std::string> days = world.day_domain;
  for (const auto& f : context) {
    if (!f.is_day_fact()) continue;
    if (!world.has_day(f.day)) throw Error(ErrorCode::UnknownName, "day '" + f.day + "'");
    std::erase_if(days, [&](const std::string& d) {
      return f.kind == KFormulaKind::DayIs ? d != f.day : d == f.day;
    });
  }
  if (days.empty()) throw Error(ErrorCode::InconsistentDayContext, "no day satisfies the day facts");
  return days;
}

Reliability resolve_reliability(const WorldSpec& world, std::string_view source,
                                std::span<const KFormula> day_context) {
  auto it = world.sources.find(std::string(source));
  if (it == world.sources.end()) {
    throw Error(ErrorCode::UnknownName, "source '" + std::string(source) + "'");
  }
  const auto days = possible_days(world, day_context);
  const auto& schedule = it->second;
  switch (schedule.kind) {
    case Schedule::Kind::AlwaysTruthful: return Reliability::Truthful;
    case Schedule::Kind::AlwaysDeceitful: return Reliability::Deceitful;
    case Schedule::Kind::TruthfulOn: break;
  }
  std::size_t truthful = 0;
  for (const auto& d : days) {
    if (std::find(schedule.truthful_days.begin(), schedule.truthful_days.end(), d) !=
        schedule.truthful_days.end()) {
      ++truthful;
    }
  }
  if (truthful == days.size()) return Reliability::Truthful;
  if (truthful == 0) return Reliability::Deceitful;
  return Reliability::Unknown;
}

}  // namespace proofinfo::inference
