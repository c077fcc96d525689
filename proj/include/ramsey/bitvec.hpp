#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace ramsey {

// Word-span kernels behind the BitVec operations. The scalar table is the
// reference; SIMD tables must be bit-for-bit equivalent (see unit_bitvec).
namespace kern {

struct Ops {
    const char* name;
    bool (*and_is_zero)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
    void (*and_assign)(std::uint64_t* a, const std::uint64_t* b, std::size_t n);
    void (*or_assign)(std::uint64_t* a, const std::uint64_t* b, std::size_t n);
    bool (*is_zero)(const std::uint64_t* a, std::size_t n);
    std::uint64_t (*popcount)(const std::uint64_t* a, std::size_t n);
};

const Ops& scalar_ops();
#if defined(RAMSEY_HAVE_AVX2)
const Ops& avx2_ops();
bool avx2_supported();
#endif
#if defined(RAMSEY_HAVE_NEON)
const Ops& neon_ops();
#endif

// Active table. Selected once at startup: RAMSEY_KERNELS env var if set
// ("scalar", "avx2", "neon", "auto"), otherwise the best supported backend.
const Ops& ops();

// Force a backend by name; returns false if unknown/unsupported. Not safe to
// call while other threads are inside kernel calls.
bool set_backend(std::string_view name);

std::vector<std::string_view> available_backends();

}  // namespace kern

// Heap-allocated bitset used for witness and pair-compatibility vectors.
// Bits at positions >= size() are kept zero so kernels can run whole words.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t bits, bool value = false) { assign(bits, value); }

    void assign(std::size_t bits, bool value) {
        nbits_ = bits;
        words_.assign((bits + 63) / 64, value ? ~std::uint64_t{0} : 0);
        clear_tail();
    }

    std::size_t size() const { return nbits_; }
    std::size_t word_count() const { return words_.size(); }
    const std::uint64_t* data() const { return words_.data(); }
    std::uint64_t* data() { return words_.data(); }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    bool and_is_zero(const BitVec& o) const {
        return kern::ops().and_is_zero(data(), o.data(), word_count());
    }
    BitVec& operator&=(const BitVec& o) {
        kern::ops().and_assign(data(), o.data(), word_count());
        return *this;
    }
    BitVec& operator|=(const BitVec& o) {
        kern::ops().or_assign(data(), o.data(), word_count());
        return *this;
    }
    bool none() const { return kern::ops().is_zero(data(), word_count()); }
    std::size_t count() const { return kern::ops().popcount(data(), word_count()); }

    // First set bit at position >= from, or -1.
    long next_set_bit(std::size_t from) const {
        if (from >= nbits_) return -1;
        std::size_t w = from >> 6;
        std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (word != 0) return long((w << 6) + std::countr_zero(word));
            if (++w == words_.size()) return -1;
            word = words_[w];
        }
    }

    bool operator==(const BitVec& o) const = default;

private:
    void clear_tail() {
        if (nbits_ & 63) words_.back() &= ~std::uint64_t{0} >> (64 - (nbits_ & 63));
    }

    std::vector<std::uint64_t> words_;
    std::size_t nbits_ = 0;
};

}  // namespace ramsey
