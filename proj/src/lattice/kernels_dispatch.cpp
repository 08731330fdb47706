#include "s4embed/kernels.hpp"

#include <atomic>

namespace s4embed::kernels {
namespace {

constexpr Table kScalar{&scalar::scaled_add, &scalar::feasible};
constexpr Table kAvx2{&avx2::scaled_add, &avx2::feasible};

std::atomic<Isa>& current() {
    static std::atomic<Isa> isa{avx2_supported() ? Isa::Avx2 : Isa::Scalar};
    return isa;
}

}  // namespace

bool avx2_supported() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok;
#else
    return false;
#endif
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

Isa force_isa(Isa isa) {
    if (isa == Isa::Avx2 && !avx2_supported()) isa = Isa::Scalar;
    current().store(isa, std::memory_order_relaxed);
    return isa;
}

const Table& table() { return active_isa() == Isa::Avx2 ? kAvx2 : kScalar; }

}  // namespace s4embed::kernels
