#pragma once

// Bitset kernels for the learner's observation rows. Each row is a pair of
// bitsets: `known` marks positions the oracle answered, `value` holds the
// answers (bits outside `known` are zero). Scalar and AVX2 variants compute
// identical results; the dispatcher picks one at runtime.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace fibaut::kernels {

struct RowView {
    std::span<const std::uint64_t> known;
    std::span<const std::uint64_t> value;
};

enum class Isa { scalar, avx2 };

/// True iff the rows agree wherever both are known.
using CompatibleFn = bool (*)(RowView, RowView);
/// Number of positions known in both rows with equal answers.
using AgreementFn = std::size_t (*)(RowView, RowView);

namespace scalar {
bool compatible(RowView a, RowView b);
std::size_t agreement(RowView a, RowView b);
}  // namespace scalar

namespace avx2 {
bool available();
bool compatible(RowView a, RowView b);
std::size_t agreement(RowView a, RowView b);
}  // namespace avx2

Isa active_isa();
/// Overrides runtime detection; requesting avx2 on a CPU without it throws.
void force_isa(Isa isa);
std::string_view isa_name(Isa isa);

bool compatible(RowView a, RowView b);
std::size_t agreement(RowView a, RowView b);

}  // namespace fibaut::kernels
