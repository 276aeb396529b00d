#pragma once

// Bounded Myhill-Nerode guessing. Two prefixes are identified when they
// agree on every extension of length <= k that the oracle can answer; the
// classes, discovered breadth-first, become the states of a candidate DFA.

#include "fibaut/dfa.hpp"
#include "fibaut/logic/store.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fibaut::learn {

/// Black-box language over `arity`-track words. `query` receives the decoded
/// value of each track and is only called for Zeckendorf-valid tracks whose
/// values lie within `bounds` (nullopt = unbounded). The target language is
/// assumed leading-zero invariant.
struct MembershipOracle {
    unsigned arity = 1;
    std::function<bool(std::span<const std::uint64_t>)> query;
    std::vector<std::optional<std::uint64_t>> bounds;
    std::string envelope;
};

/// A prefix the oracle cannot classify.
class EnvelopeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DepthResult {
    unsigned depth = 0;
    /// Classes found before minimization.
    State classes = 0;
    /// States of the minimized candidate (sink included).
    State states = 0;
    State states_without_sink = 0;
    /// Class decisions where several existing classes were compatible.
    std::size_t envelope_limited = 0;
    std::size_t queries = 0;
};

struct GuessReport {
    Dfa candidate;
    std::vector<DepthResult> steps;
    bool stabilized = false;
    unsigned prefix_bound = 0;
    std::string envelope;

    /// Plain-text summary; identical inputs give identical text.
    std::string summary() const;
};

/// Candidate for a single extension depth.
struct Candidate {
    Dfa dfa;
    DepthResult stats;
};

Candidate guess_at_depth(const MembershipOracle& oracle, unsigned prefix_bound, unsigned depth);

/// Runs every depth in `depths` (nonempty, strictly increasing). Stabilized
/// iff the last two depths give identical minimized candidates.
GuessReport guess(const MembershipOracle& oracle, unsigned prefix_bound, const std::vector<unsigned>& depths);

/// Existence and uniqueness of outputs for every input, checked in the logic
/// engine against the automaton stored under `name`.
bool verify_function(const std::string& name, const std::vector<unsigned>& input_tracks,
                     const std::vector<unsigned>& output_tracks, const logic::AutomatonStore& store);

/// Ready-made oracles.
MembershipOracle parity_oracle();
MembershipOracle addition_oracle();
MembershipOracle floor_phi_oracle();
/// A[x,y] = z on rows 0..rows-1 and columns 0..cols-1 of the Hurt-Sada array.
MembershipOracle array_oracle(std::uint64_t rows, std::uint64_t cols);

}  // namespace fibaut::learn
