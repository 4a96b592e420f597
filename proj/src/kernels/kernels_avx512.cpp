#include "graphrecover/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#define GR_AVX512 __attribute__((target("avx512f,avx512vpopcntdq,popcnt")))

namespace graphrecover::simd {
namespace {

template <typename Load, typename Tail>
GR_AVX512 inline std::uint64_t reduce(std::size_t n, Load load, Tail tail)
{
    __m512i acc = _mm512_setzero_si512();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8)
        acc = _mm512_add_epi64(acc, _mm512_popcnt_epi64(load(i)));
    std::uint64_t c = static_cast<std::uint64_t>(_mm512_reduce_add_epi64(acc));
    for (; i < n; ++i)
        c += static_cast<std::uint64_t>(_mm_popcnt_u64(tail(i)));
    return c;
}

GR_AVX512 std::uint64_t popcount_avx512(const Word *a, std::size_t n)
{
    return reduce(
        n, [a](std::size_t i) GR_AVX512 { return _mm512_loadu_si512(a + i); },
        [a](std::size_t i) { return a[i]; });
}

GR_AVX512 std::uint64_t popcount_and_avx512(const Word *a, const Word *b, std::size_t n)
{
    return reduce(
        n,
        [a, b](std::size_t i) GR_AVX512 {
            return _mm512_and_si512(_mm512_loadu_si512(a + i), _mm512_loadu_si512(b + i));
        },
        [a, b](std::size_t i) { return a[i] & b[i]; });
}

GR_AVX512 std::uint64_t popcount_xor_avx512(const Word *a, const Word *b, std::size_t n)
{
    return reduce(
        n,
        [a, b](std::size_t i) GR_AVX512 {
            return _mm512_xor_si512(_mm512_loadu_si512(a + i), _mm512_loadu_si512(b + i));
        },
        [a, b](std::size_t i) { return a[i] ^ b[i]; });
}

GR_AVX512 std::uint64_t popcount_xor_and_avx512(const Word *a, const Word *b, const Word *m,
                                                std::size_t n)
{
    return reduce(
        n,
        [a, b, m](std::size_t i) GR_AVX512 {
            // 0x28 = (A ^ B) & C
            return _mm512_ternarylogic_epi64(_mm512_loadu_si512(a + i), _mm512_loadu_si512(b + i),
                                             _mm512_loadu_si512(m + i), 0x28);
        },
        [a, b, m](std::size_t i) { return (a[i] ^ b[i]) & m[i]; });
}

const KernelTable table{
    Isa::avx512, popcount_avx512, popcount_and_avx512, popcount_xor_avx512,
    popcount_xor_and_avx512,
};

} // namespace

namespace detail {
const KernelTable *avx512_table()
{
    __builtin_cpu_init();
    if (__builtin_cpu_supports("avx512f") && __builtin_cpu_supports("avx512vpopcntdq"))
        return &table;
    return nullptr;
}
} // namespace detail

} // namespace graphrecover::simd

#else

namespace graphrecover::simd::detail {
const KernelTable *avx512_table() { return nullptr; }
} // namespace graphrecover::simd::detail

#endif
