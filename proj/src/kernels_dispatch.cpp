#include "fibaut/kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace fibaut::kernels {

namespace {

Isa detect() { return avx2::available() ? Isa::avx2 : Isa::scalar; }

std::atomic<Isa>& current()
{
    static std::atomic<Isa> isa{detect()};
    return isa;
}

}  // namespace

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void force_isa(Isa isa)
{
    if (isa == Isa::avx2 && !avx2::available()) {
        throw std::runtime_error("AVX2 requested but not supported by this CPU");
    }
    current().store(isa, std::memory_order_relaxed);
}

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool compatible(RowView a, RowView b)
{
    return active_isa() == Isa::avx2 ? avx2::compatible(a, b) : scalar::compatible(a, b);
}

std::size_t agreement(RowView a, RowView b)
{
    return active_isa() == Isa::avx2 ? avx2::agreement(a, b) : scalar::agreement(a, b);
}

}  // namespace fibaut::kernels
