#include "fibaut/zeckendorf.hpp"

#include <array>
#include <limits>
#include <stdexcept>

namespace fibaut {

Natural parse_natural(std::string_view text)
{
    if (text.empty()) {
        throw std::invalid_argument("empty natural");
    }
    Natural n = 0;
    for (char ch : text) {
        if (ch < '0' || ch > '9') {
            throw std::invalid_argument("not a natural: " + std::string(text));
        }
        n = n * 10 + (ch - '0');
    }
    return n;
}

void require_natural(const Natural& n, const char* what)
{
    if (n < 0) {
        throw std::invalid_argument(std::string(what) + ": negative value " + n.str());
    }
}

}  // namespace fibaut

namespace fibaut::zeck {

namespace {

constexpr unsigned kMaxFib64 = 93;

constexpr std::array<std::uint64_t, kMaxFib64 + 1> make_fib_table()
{
    std::array<std::uint64_t, kMaxFib64 + 1> t{};
    t[0] = 0;
    t[1] = 1;
    for (unsigned i = 2; i <= kMaxFib64; ++i) {
        t[i] = t[i - 1] + t[i - 2];
    }
    return t;
}

constexpr auto kFib = make_fib_table();

void check_binary(std::span<const std::uint8_t> digits)
{
    for (std::uint8_t d : digits) {
        if (d > 1) {
            throw std::invalid_argument("malformed Zeckendorf digit " + std::to_string(d));
        }
    }
}

}  // namespace

ZeckWord::ZeckWord(Digits digits) : digits_(std::move(digits))
{
    check_binary(digits_);
    if (!is_canonical(digits_)) {
        throw std::invalid_argument("non-canonical Zeckendorf word");
    }
}

std::string ZeckWord::str() const
{
    if (digits_.empty()) {
        return "0";
    }
    std::string out;
    out.reserve(digits_.size());
    for (std::uint8_t d : digits_) {
        out.push_back(static_cast<char>('0' + d));
    }
    return out;
}

Natural fibonacci(unsigned i)
{
    if (i <= kMaxFib64) {
        return Natural(kFib[i]);
    }
    Natural a = kFib[kMaxFib64 - 1];
    Natural b = kFib[kMaxFib64];
    for (unsigned k = kMaxFib64; k < i; ++k) {
        Natural c = a + b;
        a = std::move(b);
        b = std::move(c);
    }
    return b;
}

std::uint64_t fibonacci64(unsigned i)
{
    if (i > kMaxFib64) {
        throw std::out_of_range("fibonacci64 index " + std::to_string(i));
    }
    return kFib[i];
}

ZeckWord encode(std::uint64_t n)
{
    if (n == 0) {
        return {};
    }
    // Largest i with F(i) <= n; the word then has i-1 digits.
    unsigned top = 2;
    while (top + 1 <= kMaxFib64 && kFib[top + 1] <= n) {
        ++top;
    }
    Digits digits(top - 1, 0);
    for (unsigned i = top; i >= 2; --i) {
        if (kFib[i] <= n) {
            n -= kFib[i];
            digits[top - i] = 1;
        }
    }
    return ZeckWord(std::move(digits));
}

ZeckWord encode(const Natural& n)
{
    require_natural(n, "encode");
    if (n <= std::numeric_limits<std::uint64_t>::max()) {
        return encode(static_cast<std::uint64_t>(n));
    }
    std::vector<Natural> fib{0, 1};
    while (fib.back() <= n) {
        fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
    }
    const unsigned top = static_cast<unsigned>(fib.size()) - 2;
    Digits digits(top - 1, 0);
    Natural rest = n;
    for (unsigned i = top; i >= 2; --i) {
        if (fib[i] <= rest) {
            rest -= fib[i];
            digits[top - i] = 1;
        }
    }
    return ZeckWord(std::move(digits));
}

Natural decode(std::span<const std::uint8_t> digits)
{
    check_binary(digits);
    // Horner-style: appending digit c maps (v, v') to (v + v' + c, v + c),
    // where v' is the value with every weight index lowered by one.
    Natural v = 0;
    Natural lower = 0;
    for (std::uint8_t c : digits) {
        Natural next = v + lower + c;
        lower = v + c;
        v = std::move(next);
    }
    return v;
}

std::uint64_t decode64(std::span<const std::uint8_t> digits)
{
    check_binary(digits);
    std::uint64_t v = 0;
    std::uint64_t lower = 0;
    for (std::uint8_t c : digits) {
        const std::uint64_t next = v + lower + c;
        lower = v + c;
        v = next;
    }
    return v;
}

Digits digits_from_text(std::string_view text)
{
    Digits digits;
    digits.reserve(text.size());
    for (char ch : text) {
        if (ch != '0' && ch != '1') {
            throw std::invalid_argument("malformed Zeckendorf digit '" + std::string(1, ch) + "'");
        }
        digits.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return digits;
}

Natural decode(std::string_view text) { return decode(digits_from_text(text)); }

bool is_canonical(std::span<const std::uint8_t> digits)
{
    if (!digits.empty() && digits.front() == 0) {
        return false;
    }
    for (std::size_t i = 1; i < digits.size(); ++i) {
        if (digits[i] == 1 && digits[i - 1] == 1) {
            return false;
        }
    }
    return true;
}

bool is_canonical(std::string_view text) { return is_canonical(digits_from_text(text)); }

ZeckWord normalize(std::span<const std::uint8_t> digits)
{
    check_binary(digits);
    // One spare leading zero so a leading "11" has room to carry.
    Digits w;
    w.reserve(digits.size() + 1);
    w.push_back(0);
    w.insert(w.end(), digits.begin(), digits.end());

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 2 < w.size(); ++i) {
            if (w[i] == 0 && w[i + 1] == 1 && w[i + 2] == 1) {
                w[i] = 1;
                w[i + 1] = 0;
                w[i + 2] = 0;
                changed = true;
            }
        }
        if (w.size() >= 2 && w[0] == 1 && w[1] == 1) {
            w.insert(w.begin(), 0);
            changed = true;
        }
    }
    std::size_t lead = 0;
    while (lead < w.size() && w[lead] == 0) {
        ++lead;
    }
    return ZeckWord(Digits(w.begin() + static_cast<std::ptrdiff_t>(lead), w.end()));
}

ZeckWord normalize(std::string_view text) { return normalize(digits_from_text(text)); }

}  // namespace fibaut::zeck
