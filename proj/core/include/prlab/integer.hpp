#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace prlab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// g = gcd(a, b) >= 0 together with u, v such that a*u + b*v = g.
struct ExtendedGcd {
  Integer g;
  Integer u;
  Integer v;
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

/// Floor division for integers of either sign.
Integer floor_div(const Integer& a, const Integer& b);

bool is_prime(std::uint64_t n);

/// Exact conversion; nullopt when the value does not fit.
std::optional<std::int64_t> to_int64(const Integer& value);

std::string to_string(const Integer& value);
/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

Integer parse_integer(const std::string& text);

}  // namespace prlab
