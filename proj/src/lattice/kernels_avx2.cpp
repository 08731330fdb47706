#include "s4embed/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define S4EMBED_HAVE_X86 1
#endif

namespace s4embed::kernels::avx2 {

#ifdef S4EMBED_HAVE_X86

__attribute__((target("avx2"))) void scaled_add(std::int64_t* out, const std::int64_t* in, const std::int64_t* col,
                                                 std::int64_t x, std::size_t n) {
    const __m256i vx = _mm256_set1_epi64x(x);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i));
        const __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(col + i));
        const __m256i prod = _mm256_mul_epi32(c, vx);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_add_epi64(a, prod));
    }
    for (; i < n; ++i) out[i] = in[i] + x * col[i];
}

__attribute__((target("avx2"))) bool feasible(const std::int64_t* t, const std::int64_t* p, const std::int64_t* tail,
                                              std::int64_t rem, std::size_t n) {
    const __m256i vr = _mm256_set1_epi64x(rem);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i vt = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(t + i));
        const __m256i vp = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
        const __m256i vtail = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(tail + i));
        const __m256i d = _mm256_sub_epi64(vt, vp);
        const __m256i lhs = _mm256_mul_epi32(d, d);
        const __m256i rhs = _mm256_mul_epi32(vtail, vr);
        if (!_mm256_testz_si256(_mm256_cmpgt_epi64(lhs, rhs), _mm256_cmpgt_epi64(lhs, rhs))) return false;
    }
    for (; i < n; ++i) {
        const std::int64_t d = t[i] - p[i];
        if (d * d > rem * tail[i]) return false;
    }
    return true;
}

#else

void scaled_add(std::int64_t* out, const std::int64_t* in, const std::int64_t* col, std::int64_t x, std::size_t n) {
    scalar::scaled_add(out, in, col, x, n);
}

bool feasible(const std::int64_t* t, const std::int64_t* p, const std::int64_t* tail, std::int64_t rem, std::size_t n) {
    return scalar::feasible(t, p, tail, rem, n);
}

#endif

}  // namespace s4embed::kernels::avx2
