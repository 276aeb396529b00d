#include "fibaut/golden.hpp"

#include <stdexcept>

namespace fibaut::golden {

namespace {

// Largest r with r*r <= v, for v < 2^64.
std::uint64_t isqrt64(std::uint64_t v)
{
    std::uint64_t r = 0;
    std::uint64_t bit = std::uint64_t{1} << 62;
    while (bit > v) {
        bit >>= 2;
    }
    while (bit != 0) {
        if (v >= r + bit) {
            v -= r + bit;
            r = (r >> 1) + bit;
        } else {
            r >>= 1;
        }
        bit >>= 2;
    }
    return r;
}

}  // namespace

Natural isqrt(const Natural& n)
{
    require_natural(n, "isqrt");
    return boost::multiprecision::sqrt(n);
}

Natural floor_phi(const Natural& n)
{
    require_natural(n, "floor_phi");
    return (n + isqrt(5 * n * n)) / 2;
}

Natural floor_div_phi(const Natural& n) { return floor_phi(n) - n; }

Natural floor_phi2(const Natural& n) { return floor_phi(n) + n; }

std::uint64_t floor_phi(std::uint64_t n)
{
    // 5n^2 < 2^64 for n < 2^31.
    if (n < (std::uint64_t{1} << 31)) {
        return (n + isqrt64(5 * n * n)) / 2;
    }
    return static_cast<std::uint64_t>(floor_phi(Natural(n)));
}

std::uint64_t floor_div_phi(std::uint64_t n) { return floor_phi(n) - n; }

std::uint64_t floor_phi2(std::uint64_t n) { return floor_phi(n) + n; }

bool is_floor_phi2_value(std::uint64_t m)
{
    // k ≈ m/φ² = ⌊⌊m/φ⌋/φ⌋ up to a small error; scan the neighbourhood.
    const std::uint64_t guess = floor_div_phi(floor_div_phi(m));
    const std::uint64_t lo = guess >= 2 ? guess - 2 : 0;
    for (std::uint64_t k = lo; k <= guess + 2; ++k) {
        if (floor_phi2(k) == m) {
            return true;
        }
    }
    return false;
}

bool is_floor_phi_value(std::uint64_t m)
{
    const std::uint64_t guess = floor_div_phi(m);
    const std::uint64_t lo = guess >= 2 ? guess - 2 : 0;
    for (std::uint64_t k = lo; k <= guess + 2; ++k) {
        if (floor_phi(k) == m) {
            return true;
        }
    }
    return false;
}

bool fractional_part_below_two_minus_phi(std::uint64_t m)
{
    // {mφ} < 2−φ  ⇔  (m+1)φ < ⌊mφ⌋ + 2  ⇔  ⌊(m+1)φ⌋ ≤ ⌊mφ⌋ + 1.
    return floor_phi(m + 1) - floor_phi(m) == 1;
}

std::int64_t floor_linear(std::int64_t a, std::int64_t b, std::int64_t den)
{
    if (den <= 0) {
        throw std::invalid_argument("floor_linear: denominator must be positive");
    }
    // bφ is irrational for b != 0, so ⌊−|b|φ⌋ = −⌊|b|φ⌋ − 1.
    const auto magnitude = static_cast<std::uint64_t>(b < 0 ? -b : b);
    const auto whole = static_cast<std::int64_t>(floor_phi(magnitude));
    const std::int64_t floor_b_phi = b >= 0 ? whole : -whole - 1;
    // ⌊x/den⌋ = ⌊⌊x⌋/den⌋ for real x.
    const std::int64_t num = a + floor_b_phi;
    const std::int64_t q = num / den;
    return (num % den != 0 && num < 0) ? q - 1 : q;
}

}  // namespace fibaut::golden
