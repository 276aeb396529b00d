#pragma once

// Property checks for the automaton kernel, each against an independent
// brute-force oracle. Used by the unit tests and the replication suite.

#include "fibaut/dfa.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace fibaut::props {

struct PropertyReport {
    std::size_t checks = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
    void expect(bool condition, const std::string& what);
};

/// Random complete DFA with state 0 initial. With `lz_invariant`, state 0
/// loops on the all-zero symbol, which makes the language leading-zero
/// invariant.
Dfa random_dfa(std::mt19937_64& rng, unsigned arity, State states, bool lz_invariant);

/// Number of Nerode classes by naive Moore refinement over reachable states.
State moore_state_count(const Dfa& a);

/// Compares project(a', track) with an explicit NFA simulation of a' on every
/// tuple of the remaining tracks with at most `max_len` digits, where a' is a
/// restricted to valid words on `track`. Leading zeros on the remaining tracks
/// are tried up to the number of states of a'.
bool projection_matches_brute_force(const Dfa& a, unsigned track, unsigned max_len, std::string* why = nullptr);

void check_boolean_laws(std::mt19937_64& rng, PropertyReport& report, unsigned rounds);
void check_minimization(std::mt19937_64& rng, PropertyReport& report, unsigned rounds);
void check_projection(std::mt19937_64& rng, PropertyReport& report, unsigned rounds, unsigned max_len);
void check_leading_zero_invariance(std::mt19937_64& rng, PropertyReport& report, unsigned rounds,
                                   const std::vector<std::pair<std::string, Dfa>>& corpus);

/// All of the above with a fixed seed; `corpus` adds named automata whose
/// leading-zero invariance, minimality and projections are checked too.
PropertyReport kernel_properties(std::uint64_t seed, const std::vector<std::pair<std::string, Dfa>>& corpus);

}  // namespace fibaut::props
