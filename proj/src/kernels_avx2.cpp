// AVX2 variants of the bitvector kernels. Compiled with -mavx2 and only
// reached after a runtime cpuid check, so no target attributes needed here.
#include "ramsey/bitvec.hpp"

#include <immintrin.h>

namespace ramsey::kern {

namespace {

bool and_is_zero_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i p = _mm256_and_si256(va, vb);
        if (!_mm256_testz_si256(p, p)) return false;
    }
    for (; i < n; ++i)
        if (a[i] & b[i]) return false;
    return true;
}

void and_assign_avx2(std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(a + i), _mm256_and_si256(va, vb));
    }
    for (; i < n; ++i) a[i] &= b[i];
}

void or_assign_avx2(std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(a + i), _mm256_or_si256(va, vb));
    }
    for (; i < n; ++i) a[i] |= b[i];
}

bool is_zero_avx2(const std::uint64_t* a, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        if (!_mm256_testz_si256(va, va)) return false;
    }
    for (; i < n; ++i)
        if (a[i]) return false;
    return true;
}

// Hardware popcnt on the scalar words already saturates here; keep the loop
// unrolled rather than emulating a vector popcount.
std::uint64_t popcount_avx2(const std::uint64_t* a, std::size_t n) {
    std::uint64_t c0 = 0, c1 = 0, c2 = 0, c3 = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        c0 += std::uint64_t(std::popcount(a[i]));
        c1 += std::uint64_t(std::popcount(a[i + 1]));
        c2 += std::uint64_t(std::popcount(a[i + 2]));
        c3 += std::uint64_t(std::popcount(a[i + 3]));
    }
    for (; i < n; ++i) c0 += std::uint64_t(std::popcount(a[i]));
    return c0 + c1 + c2 + c3;
}

}  // namespace

const Ops& avx2_ops() {
    static const Ops table{
        "avx2",         and_is_zero_avx2, and_assign_avx2,
        or_assign_avx2, is_zero_avx2,     popcount_avx2,
    };
    return table;
}

bool avx2_supported() { return __builtin_cpu_supports("avx2"); }

}  // namespace ramsey::kern
