#pragma once

// Builds the reserved store entries valid, eq, lt, add, phin, noverphi and
// phi2n. The adder and phin are guessed from integer oracles and must pass
// their post-build checks; noverphi and phi2n are compiled from phin.

#include "fibaut/dfa.hpp"
#include "fibaut/learner.hpp"
#include "fibaut/logic/store.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fibaut::arith {

struct BaseConfig {
    unsigned adder_prefix_bound = 12;
    std::vector<unsigned> adder_depths{3, 4, 5};
    unsigned phin_prefix_bound = 12;
    std::vector<unsigned> phin_depths{4, 5, 6};
    /// Adder is checked on every pair x, y <= this.
    std::uint64_t adder_exhaustive_limit = 2000;
    /// phin is checked on every n whose representation has at most this many digits.
    unsigned phin_digits = 25;
};

struct BaseReport {
    learn::GuessReport adder;
    learn::GuessReport phin;
    /// Names of the post-build checks that passed, in order.
    std::vector<std::string> checks;
};

/// Throws VerificationError naming the failed check.
BaseReport build_base(logic::AutomatonStore& store, const BaseConfig& config = {});

/// True iff every reserved name is present.
bool has_base(const logic::AutomatonStore& store);

/// First disagreement with integer addition on x, y <= limit: (x,y,x+y) must
/// be accepted and (x,y,x+y±d), d in {1,2}, rejected.
std::optional<std::string> check_adder_exhaustive(const Dfa& adder, std::uint64_t limit);

/// First disagreement with floor_phi over all accepted pairs (n, x) with n of
/// at most `digits` digits, plus a check that every such n occurs exactly once.
std::optional<std::string> check_phin_exhaustive(const Dfa& phin, unsigned digits);

}  // namespace fibaut::arith
