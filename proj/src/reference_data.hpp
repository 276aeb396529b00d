#pragma once

#include <string_view>

// Golden files from tests/golden, embedded at configure time.
namespace fibaut::reference {

std::string_view array_rows();
std::string_view sequences();
std::string_view antidiagonals();

}  // namespace fibaut::reference
