#include "s4embed/kernels.hpp"

namespace s4embed::kernels::scalar {

void scaled_add(std::int64_t* out, const std::int64_t* in, const std::int64_t* col, std::int64_t x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = in[i] + x * col[i];
}

bool feasible(const std::int64_t* t, const std::int64_t* p, const std::int64_t* tail, std::int64_t rem, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t d = t[i] - p[i];
        if (d * d > rem * tail[i]) return false;
    }
    return true;
}

}  // namespace s4embed::kernels::scalar
