#pragma once

// Complete DFAs over k-track binary tuple alphabets.
//
// A symbol is the tuple (b_0, ..., b_{k-1}) read as the binary number
// b_0 b_1 ... b_{k-1}, so track 0 is the most significant bit. Words are read
// most significant position first; integers of different lengths are padded
// with leading zeros. Every operation in this header keeps languages
// leading-zero invariant: w is accepted iff (0,...,0)·w is.

#include "fibaut/natural.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fibaut {

using State = std::uint32_t;
using Symbol = std::uint32_t;

constexpr unsigned kMaxArity = 16;

inline unsigned track_bit(Symbol s, unsigned track, unsigned arity)
{
    return (s >> (arity - 1 - track)) & 1u;
}

class Dfa {
public:
    /// The 0-track automaton that rejects everything.
    Dfa();

    /// `delta` is row-major: delta[q * 2^arity + s]. Throws ContractError if
    /// the table is not total or refers to missing states.
    Dfa(unsigned arity, State initial, std::vector<std::uint8_t> finals, std::vector<State> delta);

    unsigned arity() const { return arity_; }
    Symbol alphabet_size() const { return Symbol{1} << arity_; }
    State state_count() const { return static_cast<State>(finals_.size()); }
    State initial() const { return initial_; }
    bool is_final(State q) const { return finals_[q] != 0; }
    State next(State q, Symbol s) const { return delta_[static_cast<std::size_t>(q) * alphabet_size() + s]; }

    std::span<const State> row(State q) const
    {
        return {delta_.data() + static_cast<std::size_t>(q) * alphabet_size(), alphabet_size()};
    }
    const std::vector<std::uint8_t>& finals() const { return finals_; }
    const std::vector<State>& transitions() const { return delta_; }

    State run(State from, std::span<const Symbol> word) const;
    bool accepts_word(std::span<const Symbol> word) const { return is_final(run(initial_, word)); }

    friend bool operator==(const Dfa&, const Dfa&) = default;

private:
    unsigned arity_ = 0;
    State initial_ = 0;
    std::vector<std::uint8_t> finals_;
    std::vector<State> delta_;
};

/// Truth table of a binary Boolean connective: bit (2*a + b) is op(a, b).
struct BoolOp {
    std::uint8_t table;
    bool operator()(bool a, bool b) const { return ((table >> ((a ? 2 : 0) + (b ? 1 : 0))) & 1u) != 0; }
};

inline constexpr BoolOp kAnd{0b1000};
inline constexpr BoolOp kOr{0b1110};
inline constexpr BoolOp kImplies{0b1011};
inline constexpr BoolOp kIff{0b1001};
inline constexpr BoolOp kXor{0b0110};

namespace dfa {

Dfa empty(unsigned arity);
Dfa universal(unsigned arity);

/// Encodes each input canonically, pads to a common length and runs `a`.
bool accepts(const Dfa& a, std::span<const Natural> inputs);
bool accepts(const Dfa& a, std::span<const std::uint64_t> inputs);
bool accepts(const Dfa& a, std::initializer_list<std::uint64_t> inputs);

/// Synchronous product. Operand track i is placed on output track
/// align_a[i] (resp. align_b[i]); together the alignments must cover the
/// output tracks 0..k-1 and each be injective. Result is minimized.
Dfa product(const Dfa& a, const Dfa& b, BoolOp op, std::span<const unsigned> align_a,
            std::span<const unsigned> align_b);

/// Same-arity product with identity alignment.
Dfa product(const Dfa& a, const Dfa& b, BoolOp op);

Dfa complement(const Dfa& a);

/// Existential projection of one track: NFA projection, leading-zero
/// closure of the initial set, subset construction, minimization.
Dfa project(const Dfa& a, unsigned track);

/// Minimal complete DFA with canonical breadth-first state numbering.
Dfa minimize(const Dfa& a);

bool equivalent(const Dfa& a, const Dfa& b);
bool is_empty(const Dfa& a);

/// Accepted tuples whose canonical encodings have length <= max_len, sorted
/// lexicographically as integer tuples.
std::vector<std::vector<std::uint64_t>> enumerate(const Dfa& a, unsigned max_len);

/// Input track i moves to output track map[i]. Output tracks nobody maps to
/// are unconstrained (cylindrification); input tracks sharing an output are
/// forced equal. Result is minimized.
Dfa remap_tracks(const Dfa& a, std::span<const unsigned> map, unsigned out_arity);

Dfa add_track(const Dfa& a, unsigned position);
/// Input track i becomes output track perm[i].
Dfa permute_tracks(const Dfa& a, std::span<const unsigned> perm);

/// Count of states after dropping a non-accepting sink, if the automaton has one.
State states_without_sink(const Dfa& a);
bool has_sink(const Dfa& a);

/// Checked on the minimal automaton: delta(q0, 0...0) == q0.
bool leading_zero_invariant(const Dfa& a);

/// Bit-exact text format: arity, states, initial, finals, then one
/// `from tuple to` line per transition sorted by (from, tuple).
std::string to_text(const Dfa& a);
Dfa from_text(std::string_view text);

std::string to_dot(const Dfa& a, std::string_view name);

std::string symbol_string(Symbol s, unsigned arity);

}  // namespace dfa
}  // namespace fibaut
