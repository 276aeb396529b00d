#pragma once

#include "fibaut/logic/ast.hpp"

#include <string_view>
#include <vector>

namespace fibaut::logic {

/// Parses a script of `def NAME "?msd_fib FORMULA":` and
/// `eval NAME "?msd_fib FORMULA":` commands. `#` starts a comment that runs
/// to the end of the line (outside quotes). Throws ParseError.
std::vector<Command> parse_script(std::string_view source);

/// Parses the body of one quoted formula, including the `?msd_fib` prefix.
FormulaPtr parse_formula(std::string_view text);

}  // namespace fibaut::logic
