#pragma once

// Hand-built base relations over Zeckendorf-valid tracks.

#include "fibaut/dfa.hpp"
#include "fibaut/natural.hpp"

namespace fibaut::arith {

/// 1 track: words with no "11" factor (leading zeros allowed).
const Dfa& valid();
/// 2 tracks: both valid and equal in value.
const Dfa& eq();
/// 2 tracks: both valid and first < second.
const Dfa& lt();
/// 1 track: 0*·encode(c).
Dfa constant(const Natural& c);

}  // namespace fibaut::arith
