#include "proofinfo/formula.hpp"

#include <array>
#include <cctype>
#include <utility>

#include "proofinfo/error.hpp"

namespace proofinfo {
namespace {

constexpr std::array<std::pair<std::string_view, std::string_view>, 3> kAliases{{
    {"!=", "≠"},
    {"\\/", "∨"},
    {"~", "¬"},
}};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

}  // namespace

Formula Formula::normalize(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (std::size_t i = 0; i < raw.size();) {
    if (is_space(raw[i])) {
      pending_space = !out.empty();
      ++i;
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    bool replaced = false;
    for (const auto& [alias, canonical] : kAliases) {
      if (raw.substr(i, alias.size()) == alias) {
        out.append(canonical);
        i += alias.size();
        replaced = true;
        break;
      }
    }
    if (!replaced) out.push_back(raw[i++]);
  }
  if (out.empty()) {
    throw Error(ErrorCode::EmptyFormula,
                "no non-whitespace character in " + std::to_string(raw.size()) +
                    "-byte input");
  }
  return Formula(std::move(out));
}

}  // namespace proofinfo
