#pragma once

// Zeckendorf (Fibonacci) numeration: msd-first bit strings where digit i of a
// length-t word has weight F(t+2-i).

#include "fibaut/natural.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fibaut::zeck {

using Digits = std::vector<std::uint8_t>;

/// A canonical Zeckendorf representation: no "11" factor and no leading zero.
/// Zero is the empty word internally and renders as "0".
class ZeckWord {
public:
    ZeckWord() = default;

    /// Throws std::invalid_argument unless `digits` is canonical.
    explicit ZeckWord(Digits digits);

    const Digits& digits() const { return digits_; }
    std::size_t size() const { return digits_.size(); }
    bool is_zero() const { return digits_.empty(); }

    std::string str() const;

    friend bool operator==(const ZeckWord&, const ZeckWord&) = default;

private:
    Digits digits_;
};

/// Fibonacci number F(i) with F(0)=0, F(1)=1.
Natural fibonacci(unsigned i);
/// F(i) for i <= 93 (the largest that fits 64 bits).
std::uint64_t fibonacci64(unsigned i);

ZeckWord encode(const Natural& n);
ZeckWord encode(std::uint64_t n);

/// Weighted Fibonacci sum of a 0/1 digit sequence; leading zeros and "11"
/// factors are allowed. Throws std::invalid_argument on a digit other than 0/1.
Natural decode(std::span<const std::uint8_t> digits);
/// Text form: '0'/'1' characters. Any other character is malformed input.
Natural decode(std::string_view text);

std::uint64_t decode64(std::span<const std::uint8_t> digits);

bool is_canonical(std::span<const std::uint8_t> digits);
bool is_canonical(std::string_view text);

/// Rewrites 011 -> 100 until no "11" remains, then strips leading zeros.
ZeckWord normalize(std::span<const std::uint8_t> digits);
ZeckWord normalize(std::string_view text);

/// Parses '0'/'1' text into digits; "0" and "" both denote zero.
Digits digits_from_text(std::string_view text);

}  // namespace fibaut::zeck
