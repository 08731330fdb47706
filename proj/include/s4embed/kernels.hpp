#pragma once

#include <cstddef>
#include <cstdint>

// Inner loops of the lattice search. All operands are int64 arrays whose
// values fit in 32 bits (products are formed in 64 bits).

namespace s4embed::kernels {

enum class Isa { Scalar, Avx2 };

// out[i] = in[i] + x * col[i]
using ScaledAddFn = void (*)(std::int64_t* out, const std::int64_t* in, const std::int64_t* col, std::int64_t x,
                             std::size_t n);
// true iff (t[i] - p[i])^2 <= rem * tail[i] for every i < n
using FeasibleFn = bool (*)(const std::int64_t* t, const std::int64_t* p, const std::int64_t* tail, std::int64_t rem,
                            std::size_t n);

namespace scalar {
void scaled_add(std::int64_t* out, const std::int64_t* in, const std::int64_t* col, std::int64_t x, std::size_t n);
bool feasible(const std::int64_t* t, const std::int64_t* p, const std::int64_t* tail, std::int64_t rem, std::size_t n);
}  // namespace scalar

namespace avx2 {
void scaled_add(std::int64_t* out, const std::int64_t* in, const std::int64_t* col, std::int64_t x, std::size_t n);
bool feasible(const std::int64_t* t, const std::int64_t* p, const std::int64_t* tail, std::int64_t rem, std::size_t n);
}  // namespace avx2

bool avx2_supported();
Isa active_isa();
// Test hook; requesting Avx2 on a machine without it keeps Scalar. Returns the isa in effect.
Isa force_isa(Isa isa);

struct Table {
    ScaledAddFn scaled_add;
    FeasibleFn feasible;
};

const Table& table();

}  // namespace s4embed::kernels
