#include "ramsey/bitvec.hpp"

namespace ramsey::kern {

namespace {

bool and_is_zero_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] & b[i]) return false;
    return true;
}

void and_assign_scalar(std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) a[i] &= b[i];
}

void or_assign_scalar(std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) a[i] |= b[i];
}

bool is_zero_scalar(const std::uint64_t* a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i]) return false;
    return true;
}

std::uint64_t popcount_scalar(const std::uint64_t* a, std::size_t n) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += std::uint64_t(std::popcount(a[i]));
    return c;
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops table{
        "scalar",        and_is_zero_scalar, and_assign_scalar,
        or_assign_scalar, is_zero_scalar,    popcount_scalar,
    };
    return table;
}

}  // namespace ramsey::kern
