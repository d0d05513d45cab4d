#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace proofinfo {

using Rational = boost::multiprecision::cpp_rational;

/// Always "p/q", including integers ("1/1", "0/1").
std::string format_rational(const Rational& r);

/// Accepts "p/q" or an integer "p"; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

}  // namespace proofinfo
