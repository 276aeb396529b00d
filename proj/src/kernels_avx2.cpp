#include "fibaut/kernels.hpp"

#include <bit>
#include <cassert>

#if defined(__x86_64__) || defined(_M_X64)
#define FIBAUT_X86 1
#include <immintrin.h>
#else
#define FIBAUT_X86 0
#endif

namespace fibaut::kernels::avx2 {

#if FIBAUT_X86

bool available() { return __builtin_cpu_supports("avx2"); }

__attribute__((target("avx2"))) bool compatible(RowView a, RowView b)
{
    assert(a.known.size() == b.known.size());
    const std::size_t n = a.known.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i ka = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.known.data() + i));
        const __m256i kb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.known.data() + i));
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.value.data() + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.value.data() + i));
        const __m256i clash = _mm256_and_si256(_mm256_and_si256(ka, kb), _mm256_xor_si256(va, vb));
        if (!_mm256_testz_si256(clash, clash)) {
            return false;
        }
    }
    for (; i < n; ++i) {
        if ((a.known[i] & b.known[i] & (a.value[i] ^ b.value[i])) != 0) {
            return false;
        }
    }
    return true;
}

__attribute__((target("avx2,popcnt"))) std::size_t agreement(RowView a, RowView b)
{
    assert(a.known.size() == b.known.size());
    const std::size_t n = a.known.size();
    std::size_t count = 0;
    std::size_t i = 0;
    alignas(32) std::uint64_t lanes[4];
    for (; i + 4 <= n; i += 4) {
        const __m256i ka = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.known.data() + i));
        const __m256i kb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.known.data() + i));
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.value.data() + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.value.data() + i));
        // known_a & known_b & ~(va ^ vb)
        const __m256i same = _mm256_andnot_si256(_mm256_xor_si256(va, vb), _mm256_and_si256(ka, kb));
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), same);
        count += static_cast<std::size_t>(__builtin_popcountll(lanes[0]) + __builtin_popcountll(lanes[1]) +
                                          __builtin_popcountll(lanes[2]) + __builtin_popcountll(lanes[3]));
    }
    for (; i < n; ++i) {
        count += static_cast<std::size_t>(
            std::popcount(a.known[i] & b.known[i] & ~(a.value[i] ^ b.value[i])));
    }
    return count;
}

#else

bool available() { return false; }
bool compatible(RowView a, RowView b) { return scalar::compatible(a, b); }
std::size_t agreement(RowView a, RowView b) { return scalar::agreement(a, b); }

#endif

}  // namespace fibaut::kernels::avx2
