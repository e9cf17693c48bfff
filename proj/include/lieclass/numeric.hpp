#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace lieclass {

/// Arbitrary-precision integer used for every dimension and index.
using Int = boost::multiprecision::cpp_int;
/// Exact rational; used for inner products and rotation numbers.
using Rat = boost::multiprecision::cpp_rational;

std::string to_string(const Int& v);
/// "p/q" or "p" when the denominator is 1.
std::string to_string(const Rat& v);

Int binomial(long n, long k);

/// Representative of v modulo 1 in [0, 1).
Rat mod_one(const Rat& v);
bool is_integer(const Rat& v);
/// Exact conversion; throws std::logic_error if v is not an integer.
Int to_int(const Rat& v);

/// Parses a comma-separated list of integers ("1,0,2"); whitespace is allowed.
/// Throws UsageError with the offending position.
std::vector<long> parse_int_list(const std::string& text, const std::string& what);

}  // namespace lieclass
