#include "graphrecover/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace graphrecover::simd {
namespace {

template <typename Load>
inline std::uint64_t reduce(std::size_t n, Load load, const Word *tail_a, const Word *tail_b,
                            const Word *tail_m, int op)
{
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const uint8x16_t counts = vcntq_u8(vreinterpretq_u8_u64(load(i)));
        acc = vaddq_u64(acc, vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(counts))));
    }
    std::uint64_t c = vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1);
    for (; i < n; ++i) {
        Word w = tail_a[i];
        if (op == 1)
            w &= tail_b[i];
        else if (op == 2)
            w ^= tail_b[i];
        else if (op == 3)
            w = (w ^ tail_b[i]) & tail_m[i];
        c += static_cast<std::uint64_t>(__builtin_popcountll(w));
    }
    return c;
}

std::uint64_t popcount_neon(const Word *a, std::size_t n)
{
    return reduce(n, [a](std::size_t i) { return vld1q_u64(a + i); }, a, nullptr, nullptr, 0);
}

std::uint64_t popcount_and_neon(const Word *a, const Word *b, std::size_t n)
{
    return reduce(
        n, [a, b](std::size_t i) { return vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)); }, a, b,
        nullptr, 1);
}

std::uint64_t popcount_xor_neon(const Word *a, const Word *b, std::size_t n)
{
    return reduce(
        n, [a, b](std::size_t i) { return veorq_u64(vld1q_u64(a + i), vld1q_u64(b + i)); }, a, b,
        nullptr, 2);
}

std::uint64_t popcount_xor_and_neon(const Word *a, const Word *b, const Word *m, std::size_t n)
{
    return reduce(
        n,
        [a, b, m](std::size_t i) {
            return vandq_u64(veorq_u64(vld1q_u64(a + i), vld1q_u64(b + i)), vld1q_u64(m + i));
        },
        a, b, m, 3);
}

const KernelTable table{
    Isa::neon, popcount_neon, popcount_and_neon, popcount_xor_neon, popcount_xor_and_neon,
};

} // namespace

namespace detail {
const KernelTable *neon_table() { return &table; }
} // namespace detail

} // namespace graphrecover::simd

#else

namespace graphrecover::simd::detail {
const KernelTable *neon_table() { return nullptr; }
} // namespace graphrecover::simd::detail

#endif
