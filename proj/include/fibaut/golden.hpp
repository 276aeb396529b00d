#pragma once

// Exact floors of golden-ratio multiples. No floating point: every value is
// derived from the integer square root of 5n^2, using that nφ = (n + √(5n²))/2
// is irrational for n > 0.

#include "fibaut/natural.hpp"

#include <cstdint>

namespace fibaut::golden {

Natural isqrt(const Natural& n);

/// ⌊nφ⌋
Natural floor_phi(const Natural& n);
/// ⌊n/φ⌋ = ⌊nφ⌋ − n
Natural floor_div_phi(const Natural& n);
/// ⌊nφ²⌋ = ⌊nφ⌋ + n
Natural floor_phi2(const Natural& n);

std::uint64_t floor_phi(std::uint64_t n);
std::uint64_t floor_div_phi(std::uint64_t n);
std::uint64_t floor_phi2(std::uint64_t n);

/// True iff m = ⌊kφ²⌋ for some k ≥ 0 (upper Wythoff numbers, plus 0).
bool is_floor_phi2_value(std::uint64_t m);
/// True iff m = ⌊kφ⌋ for some k ≥ 0 (lower Wythoff numbers, plus 0).
bool is_floor_phi_value(std::uint64_t m);

/// ⌊(a + bφ)/den⌋ for integers a, b and den > 0.
std::int64_t floor_linear(std::int64_t a, std::int64_t b, std::int64_t den);

/// {mφ} < 2 − φ, decided exactly as ⌊(m+1)φ⌋ − ⌊mφ⌋ = 1.
bool fractional_part_below_two_minus_phi(std::uint64_t m);

}  // namespace fibaut::golden
