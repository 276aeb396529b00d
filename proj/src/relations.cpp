#include "fibaut/relations.hpp"

#include "fibaut/zeckendorf.hpp"

#include <array>

namespace fibaut::arith {

const Dfa& valid()
{
    // 0: last digit 0, 1: last digit 1, 2: saw "11".
    static const Dfa a(1, 0, {1, 1, 0}, {0, 1, 0, 2, 2, 2});
    return a;
}

namespace {

Dfa both_valid(const Dfa& rel)
{
    const std::array<unsigned, 1> on0{0};
    const std::array<unsigned, 1> on1{1};
    const std::array<unsigned, 2> id{0, 1};
    const Dfa v0 = dfa::product(rel, valid(), kAnd, id, on0);
    return dfa::product(v0, valid(), kAnd, id, on1);
}

}  // namespace

const Dfa& eq()
{
    // 0: equal so far, 1: differed. Symbols 00,01,10,11.
    static const Dfa a = both_valid(Dfa(2, 0, {1, 0}, {0, 1, 1, 0, 1, 1, 1, 1}));
    return a;
}

const Dfa& lt()
{
    // 0: equal so far, 1: first < second, 2: first > second.
    static const Dfa a = both_valid(Dfa(2, 0, {0, 1, 0}, {0, 1, 2, 0, 1, 1, 1, 1, 2, 2, 2, 2}));
    return a;
}

Dfa constant(const Natural& c)
{
    const auto digits = zeck::encode(c).digits();
    const State len = static_cast<State>(digits.size());
    // State i: matched i digits of the representation; state len+1 is dead.
    const State dead = len + 1;
    std::vector<std::uint8_t> finals(len + 2, 0);
    finals[len] = 1;
    std::vector<State> delta(2 * (len + 2), dead);
    delta[0] = 0;  // leading zeros
    for (State i = 0; i < len; ++i) {
        delta[2 * i + digits[i]] = i + 1;
    }
    if (len == 0) {
        delta[0] = 0;
    }
    return dfa::minimize(Dfa(1, 0, std::move(finals), std::move(delta)));
}

}  // namespace fibaut::arith
