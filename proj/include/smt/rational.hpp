#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace smt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

// Accepts an integer ("3", "-3"), a fraction ("1/2", "-3/4"), or a decimal
// ("0.25"). Throws ParseError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

// "3/4", or just "3" when the denominator is 1.
std::string to_string(const Rational& value);

}  // namespace smt
