#include "fibaut/dfa.hpp"
#include "fibaut/relations.hpp"

#include <gtest/gtest.h>

#include <array>
#include <vector>

using namespace fibaut;

namespace {

// Every word over {0,1} of length n, with its value as a digit string
// (Fibonacci weights 1, 2, 3, 5, ... from the right) and validity.
struct Word {
    std::vector<std::uint8_t> digits;
    std::uint64_t value = 0;
    bool valid = true;
};

std::vector<Word> all_words(unsigned n)
{
    std::vector<std::uint64_t> weight(n);
    for (unsigned i = 0; i < n; ++i) {
        weight[i] = i < 2 ? i + 1 : weight[i - 1] + weight[i - 2];
    }
    std::vector<Word> out;
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        Word w;
        for (unsigned i = 0; i < n; ++i) {
            const auto d = static_cast<std::uint8_t>((bits >> (n - 1 - i)) & 1u);
            w.digits.push_back(d);
            if (d) {
                w.value += weight[n - 1 - i];
                if (i > 0 && w.digits[i - 1]) {
                    w.valid = false;
                }
            }
        }
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<Symbol> zip(const Word& a, const Word& b)
{
    std::vector<Symbol> out;
    for (std::size_t i = 0; i < a.digits.size(); ++i) {
        out.push_back(static_cast<Symbol>(a.digits[i] * 2 + b.digits[i]));
    }
    return out;
}

}  // namespace

TEST(Relations, Examples)
{
    EXPECT_TRUE(dfa::accepts(arith::lt(), {3, 4}));
    EXPECT_FALSE(dfa::accepts(arith::lt(), {4, 4}));
    EXPECT_FALSE(dfa::accepts(arith::lt(), {5, 4}));
    EXPECT_TRUE(dfa::accepts(arith::eq(), {9, 9}));
    EXPECT_FALSE(dfa::accepts(arith::eq(), {9, 10}));
    const std::array<Symbol, 2> eleven{1, 1}, ten{1, 0}, leading{0, 1};
    EXPECT_FALSE(arith::valid().accepts_word(eleven));
    EXPECT_TRUE(arith::valid().accepts_word(ten));
    EXPECT_TRUE(arith::valid().accepts_word(leading));
}

TEST(Relations, ValidOnAllWords)
{
    for (unsigned n = 0; n <= 12; ++n) {
        for (const Word& w : all_words(n)) {
            std::vector<Symbol> word(w.digits.begin(), w.digits.end());
            ASSERT_EQ(arith::valid().accepts_word(word), w.valid);
        }
    }
}

TEST(Relations, EqualAndLessOnAllWordPairs)
{
    for (unsigned n = 0; n <= 7; ++n) {
        const auto words = all_words(n);
        for (const Word& a : words) {
            for (const Word& b : words) {
                const auto word = zip(a, b);
                const bool both = a.valid && b.valid;
                ASSERT_EQ(arith::eq().accepts_word(word), both && a.value == b.value);
                ASSERT_EQ(arith::lt().accepts_word(word), both && a.value < b.value);
            }
        }
    }
}

TEST(Relations, Constants)
{
    for (std::uint64_t c = 0; c < 60; ++c) {
        const Dfa k = arith::constant(c);
        for (std::uint64_t v = 0; v < 100; ++v) {
            ASSERT_EQ(dfa::accepts(k, {v}), v == c);
        }
        EXPECT_TRUE(dfa::leading_zero_invariant(k));
    }
    const Natural big("1000000000000000000000");
    EXPECT_TRUE(dfa::accepts(arith::constant(big), std::array<Natural, 1>{big}));
    EXPECT_FALSE(dfa::accepts(arith::constant(big), std::array<Natural, 1>{big + 1}));
}
