#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace proofinfo {

/// A statement in canonical textual form. Identity is byte equality of the
/// normalized text; no structure is assumed at this layer.
class Formula {
 public:
  /// Collapses whitespace runs, trims, and rewrites the ASCII aliases
  /// "!=", "\/" and "~" to "≠", "∨" and "¬". Throws EmptyFormula.
  static Formula normalize(std::string_view raw);

  const std::string& text() const noexcept { return text_; }

  friend bool operator==(const Formula&, const Formula&) = default;
  friend auto operator<=>(const Formula&, const Formula&) = default;

 private:
  explicit Formula(std::string text) : text_(std::move(text)) {}
  std::string text_;
};

inline Formula normalize_formula(std::string_view raw) { return Formula::normalize(raw); }

}  // namespace proofinfo
