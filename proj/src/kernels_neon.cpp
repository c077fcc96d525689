// NEON variants for aarch64 builds. Same contract as the scalar table.
#include "ramsey/bitvec.hpp"

#if defined(RAMSEY_HAVE_NEON)
#include <arm_neon.h>

namespace ramsey::kern {

namespace {

bool and_is_zero_neon(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64x2_t p = vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
        if ((vgetq_lane_u64(p, 0) | vgetq_lane_u64(p, 1)) != 0) return false;
    }
    for (; i < n; ++i)
        if (a[i] & b[i]) return false;
    return true;
}

void and_assign_neon(std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_u64(a + i, vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    for (; i < n; ++i) a[i] &= b[i];
}

void or_assign_neon(std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_u64(a + i, vorrq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    for (; i < n; ++i) a[i] |= b[i];
}

bool is_zero_neon(const std::uint64_t* a, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64x2_t v = vld1q_u64(a + i);
        if ((vgetq_lane_u64(v, 0) | vgetq_lane_u64(v, 1)) != 0) return false;
    }
    for (; i < n; ++i)
        if (a[i]) return false;
    return true;
}

std::uint64_t popcount_neon(const std::uint64_t* a, std::size_t n) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += std::uint64_t(std::popcount(a[i]));
    return c;
}

}  // namespace

const Ops& neon_ops() {
    static const Ops table{
        "neon",         and_is_zero_neon, and_assign_neon,
        or_assign_neon, is_zero_neon,     popcount_neon,
    };
    return table;
}

}  // namespace ramsey::kern
#endif
