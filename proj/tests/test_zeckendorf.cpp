#include "fibaut/zeckendorf.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace fibaut;
using namespace fibaut::zeck;

namespace {

// Brute-force Zeckendorf encoding: the unique canonical word of the right value,
// found by enumerating canonical words in increasing length.
std::string brute_encode(std::uint64_t n)
{
    if (n == 0) {
        return "0";
    }
    for (unsigned len = 1; len < 30; ++len) {
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << len); ++code) {
            std::string w;
            for (unsigned i = 0; i < len; ++i) {
                w += ((code >> (len - 1 - i)) & 1u) ? '1' : '0';
            }
            if (w[0] != '1' || w.find("11") != std::string::npos) {
                continue;
            }
            std::uint64_t v = 0;
            for (unsigned i = 0; i < len; ++i) {
                if (w[i] == '1') {
                    v += fibonacci64(len + 1 - i);
                }
            }
            if (v == n) {
                return w;
            }
        }
    }
    return "?";
}

}  // namespace

TEST(Fibonacci, SmallValues)
{
    const std::uint64_t expected[] = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55};
    for (unsigned i = 0; i < 11; ++i) {
        EXPECT_EQ(fibonacci64(i), expected[i]);
        EXPECT_EQ(fibonacci(i), Natural(expected[i]));
    }
    EXPECT_EQ(fibonacci64(93), 12200160415121876738ull);
    EXPECT_EQ(fibonacci(100), Natural("354224848179261915075"));
}

TEST(Encode, KnownRepresentations)
{
    EXPECT_EQ(encode(std::uint64_t{43}).str(), "10010001");
    EXPECT_EQ(encode(std::uint64_t{12}).str(), "10101");
    EXPECT_EQ(encode(std::uint64_t{0}).str(), "0");
    EXPECT_TRUE(encode(std::uint64_t{0}).is_zero());
    EXPECT_EQ(encode(std::uint64_t{1}).str(), "1");
    EXPECT_EQ(encode(std::uint64_t{2}).str(), "10");
    EXPECT_EQ(encode(std::uint64_t{4}).str(), "101");
}

TEST(Encode, MatchesBruteForce)
{
    for (std::uint64_t n = 0; n <= 400; ++n) {
        ASSERT_EQ(encode(n).str(), brute_encode(n)) << n;
    }
}

TEST(Encode, RoundTripExhaustive)
{
    for (std::uint64_t n = 0; n <= 10000; ++n) {
        const ZeckWord w = encode(n);
        ASSERT_TRUE(is_canonical(w.digits())) << n;
        ASSERT_EQ(decode(w.digits()), Natural(n));
        ASSERT_EQ(decode64(w.digits()), n);
    }
}

TEST(Encode, BigNumbers)
{
    const Natural big("123456789012345678901234567890");
    const ZeckWord w = encode(big);
    EXPECT_TRUE(is_canonical(w.digits()));
    EXPECT_EQ(decode(w.digits()), big);
    // F(100) is a single 1 followed by 98 zeros.
    const ZeckWord f = encode(fibonacci(100));
    EXPECT_EQ(f.size(), 99u);
    EXPECT_EQ(f.str(), "1" + std::string(98, '0'));
}

TEST(Encode, Uint64AgreesWithNatural)
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t n = rng();
        EXPECT_EQ(encode(n), encode(Natural(n)));
    }
}

TEST(Decode, Text)
{
    EXPECT_EQ(decode(std::string_view("10010001")), Natural(43));
    EXPECT_EQ(decode(std::string_view("0010101")), Natural(12));
    EXPECT_EQ(decode(std::string_view("")), Natural(0));
    EXPECT_EQ(decode(std::string_view("11")), Natural(3));  // non-canonical words still have a value
    EXPECT_THROW(decode(std::string_view("1021")), std::invalid_argument);
    EXPECT_THROW(decode(std::string_view("1 0")), std::invalid_argument);
}

TEST(Canonical, Predicate)
{
    EXPECT_TRUE(is_canonical(std::string_view("10010001")));
    EXPECT_TRUE(is_canonical(std::string_view("")));
    EXPECT_FALSE(is_canonical(std::string_view("0")));
    EXPECT_FALSE(is_canonical(std::string_view("0101")));
    EXPECT_FALSE(is_canonical(std::string_view("110")));
    EXPECT_THROW(ZeckWord(Digits{1, 1}), std::invalid_argument);
    EXPECT_THROW(ZeckWord(Digits{0, 1}), std::invalid_argument);
}

TEST(Normalize, PreservesValueOnRandomWords)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 5000; ++i) {
        const unsigned len = 1 + static_cast<unsigned>(rng() % 40);
        Digits d(len);
        for (auto& x : d) {
            x = static_cast<std::uint8_t>(rng() & 1u);
        }
        const ZeckWord w = normalize(d);
        ASSERT_TRUE(is_canonical(w.digits()));
        ASSERT_EQ(decode(w.digits()), decode(d));
    }
}

TEST(Normalize, Examples)
{
    EXPECT_EQ(normalize(std::string_view("11")).str(), "100");
    EXPECT_EQ(normalize(std::string_view("0111")).str(), "1001");
    EXPECT_EQ(normalize(std::string_view("000")).str(), "0");
    EXPECT_EQ(normalize(std::string_view("1111")).str(), "10100");
}

TEST(DigitsFromText, ZeroForms)
{
    EXPECT_TRUE(digits_from_text("").empty() || digits_from_text("") == Digits{});
    EXPECT_EQ(decode(digits_from_text("0")), Natural(0));
    EXPECT_THROW(digits_from_text("2"), std::invalid_argument);
}

TEST(Natural, ParseRejectsJunk)
{
    EXPECT_EQ(parse_natural("42"), Natural(42));
    EXPECT_THROW(parse_natural("-1"), std::invalid_argument);
    EXPECT_THROW(parse_natural("4x"), std::invalid_argument);
    EXPECT_THROW(parse_natural(""), std::invalid_argument);
}
