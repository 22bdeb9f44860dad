#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace tropent {

using Int = boost::multiprecision::cpp_int;

// All decision paths in this library compare exact rationals; there is no
// floating point anywhere except in convenience output fields.
using Rat = boost::multiprecision::cpp_rational;

// Parses "p/q", "p", or "-p/q". Throws std::invalid_argument on garbage
// or zero denominator.
Rat parse_rat(const std::string& s);

// Renders "p/q", or just "p" when the denominator is 1.
std::string rat_str(const Rat& r);

double rat_double(const Rat& r);

}  // namespace tropent
