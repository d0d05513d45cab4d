#include "proofinfo/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <fmt/format.h>
#include <openssl/evp.h>

namespace proofinfo::report {
namespace {

bool is_scalar(const nlohmann::ordered_json& v) { return !v.is_object() && !v.is_array(); }

void write(const nlohmann::ordered_json& v, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  if (v.is_number_float()) {
    out += fixed6(v.get<double>());
  } else if (is_scalar(v)) {
    out += v.dump(-1, ' ', false, nlohmann::ordered_json::error_handler_t::strict);
  } else if (v.is_array()) {
    if (v.empty()) {
      out += "[]";
      return;
    }
    const bool flat = std::all_of(v.begin(), v.end(), is_scalar);
    out += flat ? "[" : "[\n";
    bool first = true;
    for (const auto& e : v) {
      if (!first) out += flat ? ", " : ",\n";
      first = false;
      if (!flat) out += inner;
      write(e, indent + 1, out);
    }
    out += flat ? "]" : "\n" + pad + "]";
  } else {
    if (v.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& [key, value] : v.items()) {
      if (!first) out += ",\n";
      first = false;
      out += inner + nlohmann::ordered_json(key).dump() + ": ";
      write(value, indent + 1, out);
    }
    out += "\n" + pad + "}";
  }
}

}  // namespace

std::string fixed6(double value) {
  if (value == 0.0 || std::abs(value) < 5e-7) value = 0.0;
  return fmt::format("{:.6f}", value);
}

std::string dump(const nlohmann::ordered_json& value) {
  std::string out;
  write(value, 0, out);
  out += '\n';
  return out;
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr);
  std::string hex;
  for (unsigned int i = 0; i < length; ++i) hex += fmt::format("{:02x}", digest[i]);
  return hex;
}

}  // namespace proofinfo::report
