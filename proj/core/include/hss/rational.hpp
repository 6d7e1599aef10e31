#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace hss {

// All arithmetic in this library is exact. Rat is an arbitrary-precision
// rational kept in lowest terms with positive denominator (the backend
// canonicalizes on every operation).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using RatVec = std::vector<Rat>;

// Serializes as "p" when the denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rat& r);

// Parses "p" or "p/q". Throws std::invalid_argument on malformed input
// or zero denominator.
Rat rat_from_string(std::string_view s);

Rat dot(const RatVec& a, const RatVec& b);

}  // namespace hss
