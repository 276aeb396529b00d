#include "fibaut/golden.hpp"

#include <gtest/gtest.h>

using namespace fibaut;
using namespace fibaut::golden;

namespace {

// Exact sign test for b*phi < c with b >= 0: b(1+√5)/2 < c  <=>  b√5 < 2c - b.
bool phi_multiple_below(const Natural& b, const Natural& c)
{
    const Natural rhs = 2 * c - b;
    return rhs > 0 && 5 * b * b < rhs * rhs;
}

// x = ⌊nφ⌋ iff x <= nφ < x + 1.
bool is_floor_of_phi_multiple(const Natural& n, const Natural& x)
{
    return !phi_multiple_below(n, x) && phi_multiple_below(n, x + 1);
}

}  // namespace

TEST(FloorPhi, Examples)
{
    EXPECT_EQ(floor_phi(std::uint64_t{0}), 0u);
    EXPECT_EQ(floor_phi(std::uint64_t{1}), 1u);
    EXPECT_EQ(floor_phi(std::uint64_t{4}), 6u);
    EXPECT_EQ(floor_phi(std::uint64_t{5}), 8u);
    EXPECT_EQ(floor_div_phi(std::uint64_t{5}), 3u);
    EXPECT_EQ(floor_phi2(std::uint64_t{0}), 0u);
    EXPECT_EQ(floor_phi2(std::uint64_t{1}), 2u);
}

TEST(FloorPhi, BeattyInequalityExhaustive)
{
    for (std::uint64_t n = 0; n <= 20000; ++n) {
        ASSERT_TRUE(is_floor_of_phi_multiple(n, floor_phi(n))) << n;
    }
}

TEST(FloorPhi, Million)
{
    const Natural n = 1000000;
    const Natural x = floor_phi(n);
    EXPECT_EQ(x, n + floor_div_phi(n));
    EXPECT_TRUE(is_floor_of_phi_multiple(n, x));
    EXPECT_EQ(floor_phi(std::uint64_t{1000000}), static_cast<std::uint64_t>(x));
}

TEST(FloorPhi, LargeArguments)
{
    for (const char* text : {"2147483648", "99999999999", "18446744073709551615", "123456789123456789123456789"}) {
        const Natural n(text);
        ASSERT_TRUE(is_floor_of_phi_multiple(n, floor_phi(n))) << text;
    }
    const std::uint64_t big = 4000000000ull;
    EXPECT_EQ(Natural(floor_phi(big)), floor_phi(Natural(big)));
}

TEST(FloorPhi, IdentitiesAndGaps)
{
    std::uint64_t previous = floor_phi2(std::uint64_t{0});
    for (std::uint64_t k = 1; k <= 50; ++k) {
        const std::uint64_t v = floor_phi2(k);
        EXPECT_TRUE(v - previous == 2 || v - previous == 3) << k;
        previous = v;
    }
    for (std::uint64_t n = 0; n <= 5000; ++n) {
        ASSERT_EQ(floor_div_phi(n), floor_phi(n) - n);
        ASSERT_EQ(floor_phi2(n), floor_phi(n) + n);
    }
}

TEST(FloorPhi, NegativeRejected)
{
    EXPECT_THROW(floor_phi(Natural(-1)), std::invalid_argument);
}

TEST(Wythoff, ValueSetsPartitionThePositiveIntegers)
{
    for (std::uint64_t m = 1; m <= 20000; ++m) {
        ASSERT_NE(is_floor_phi_value(m), is_floor_phi2_value(m)) << m;
    }
    EXPECT_TRUE(is_floor_phi_value(0));
    EXPECT_TRUE(is_floor_phi2_value(0));
    EXPECT_TRUE(is_floor_phi2_value(2));
    EXPECT_TRUE(is_floor_phi2_value(5));
    EXPECT_FALSE(is_floor_phi2_value(4));
}

TEST(FloorLinear, AgreesWithExactComparison)
{
    // ⌊(a + bφ)/d⌋ = q iff q·d <= a + bφ < (q+1)·d; check both sides exactly.
    auto below = [](std::int64_t b, std::int64_t c) {  // bφ < c for any sign of b
        if (b >= 0) {
            return phi_multiple_below(b, c);
        }
        // bφ < c  <=>  |b|φ > -c; equality is impossible since φ is irrational
        return !phi_multiple_below(-b, -c);
    };
    for (std::int64_t a = -40; a <= 40; a += 3) {
        for (std::int64_t b = -40; b <= 40; ++b) {
            for (std::int64_t d = 1; d <= 4; ++d) {
                const std::int64_t q = floor_linear(a, b, d);
                // q·d - a <= bφ  and  bφ < (q+1)·d - a
                ASSERT_FALSE(below(b, q * d - a)) << a << " " << b << " " << d;
                ASSERT_TRUE(below(b, (q + 1) * d - a)) << a << " " << b << " " << d;
            }
        }
    }
    EXPECT_THROW(floor_linear(1, 1, 0), std::invalid_argument);
}

TEST(FractionalPart, MatchesExactDefinition)
{
    // {mφ} < 2 - φ  <=>  mφ - ⌊mφ⌋ < 2 - φ  <=>  (m+1)φ < ⌊mφ⌋ + 2.
    for (std::uint64_t m = 0; m <= 20000; ++m) {
        const bool exact = phi_multiple_below(m + 1, floor_phi(m) + 2);
        ASSERT_EQ(fractional_part_below_two_minus_phi(m), exact) << m;
    }
}
