#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace fibaut {

/// Arbitrary-precision natural number. Negative values are rejected at every
/// public entry point that accepts one.
using Natural = boost::multiprecision::cpp_int;

inline std::string to_string(const Natural& n) { return n.str(); }

/// Parses a decimal natural; throws std::invalid_argument on anything else.
Natural parse_natural(std::string_view text);

void require_natural(const Natural& n, const char* what);

}  // namespace fibaut
