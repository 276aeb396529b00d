#include "fibaut/kernels.hpp"

#include <bit>
#include <cassert>

namespace fibaut::kernels::scalar {

bool compatible(RowView a, RowView b)
{
    assert(a.known.size() == b.known.size());
    const std::size_t n = a.known.size();
    for (std::size_t i = 0; i < n; ++i) {
        if ((a.known[i] & b.known[i] & (a.value[i] ^ b.value[i])) != 0) {
            return false;
        }
    }
    return true;
}

std::size_t agreement(RowView a, RowView b)
{
    assert(a.known.size() == b.known.size());
    std::size_t count = 0;
    const std::size_t n = a.known.size();
    for (std::size_t i = 0; i < n; ++i) {
        count += static_cast<std::size_t>(
            std::popcount(a.known[i] & b.known[i] & ~(a.value[i] ^ b.value[i])));
    }
    return count;
}

}  // namespace fibaut::kernels::scalar
