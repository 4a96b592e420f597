#include "graphrecover/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <bit>

// Nibble-lookup popcount (Mula et al.) with vpsadbw accumulation. Compiled
// with per-function target attributes so the rest of the build stays
// baseline x86-64.

#define GR_AVX2 __attribute__((target("avx2,popcnt")))

namespace graphrecover::simd {
namespace {

GR_AVX2 inline __m256i popcount_bytes(__m256i v)
{
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    return _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
}

GR_AVX2 inline std::uint64_t horizontal_sum(__m256i acc)
{
    return static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 0)) +
           static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 1)) +
           static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 2)) +
           static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 3));
}

// Op maps the operand vectors of one 4-word block to the vector to count.
template <typename Load, typename Tail>
GR_AVX2 inline std::uint64_t reduce(std::size_t n, Load load, Tail tail)
{
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    // Byte counters saturate after 31 additions of <= 8; flush every 8 blocks.
    while (i + 4 <= n) {
        __m256i local = _mm256_setzero_si256();
        for (int j = 0; j < 8 && i + 4 <= n; ++j, i += 4)
            local = _mm256_add_epi8(local, popcount_bytes(load(i)));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(local, _mm256_setzero_si256()));
    }
    std::uint64_t c = horizontal_sum(acc);
    for (; i < n; ++i)
        c += static_cast<std::uint64_t>(_mm_popcnt_u64(tail(i)));
    return c;
}

GR_AVX2 std::uint64_t popcount_avx2(const Word *a, std::size_t n)
{
    return reduce(
        n,
        [a](std::size_t i) GR_AVX2 {
            return _mm256_loadu_si256(reinterpret_cast<const __m256i *>(a + i));
        },
        [a](std::size_t i) { return a[i]; });
}

GR_AVX2 std::uint64_t popcount_and_avx2(const Word *a, const Word *b, std::size_t n)
{
    return reduce(
        n,
        [a, b](std::size_t i) GR_AVX2 {
            return _mm256_and_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i *>(a + i)),
                                    _mm256_loadu_si256(reinterpret_cast<const __m256i *>(b + i)));
        },
        [a, b](std::size_t i) { return a[i] & b[i]; });
}

GR_AVX2 std::uint64_t popcount_xor_avx2(const Word *a, const Word *b, std::size_t n)
{
    return reduce(
        n,
        [a, b](std::size_t i) GR_AVX2 {
            return _mm256_xor_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i *>(a + i)),
                                    _mm256_loadu_si256(reinterpret_cast<const __m256i *>(b + i)));
        },
        [a, b](std::size_t i) { return a[i] ^ b[i]; });
}

GR_AVX2 std::uint64_t popcount_xor_and_avx2(const Word *a, const Word *b, const Word *m,
                                            std::size_t n)
{
    return reduce(
        n,
        [a, b, m](std::size_t i) GR_AVX2 {
            const __m256i x =
                _mm256_xor_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i *>(a + i)),
                                 _mm256_loadu_si256(reinterpret_cast<const __m256i *>(b + i)));
            return _mm256_and_si256(x, _mm256_loadu_si256(reinterpret_cast<const __m256i *>(m + i)));
        },
        [a, b, m](std::size_t i) { return (a[i] ^ b[i]) & m[i]; });
}

const KernelTable table{
    Isa::avx2, popcount_avx2, popcount_and_avx2, popcount_xor_avx2, popcount_xor_and_avx2,
};

} // namespace

namespace detail {
const KernelTable *avx2_table()
{
    __builtin_cpu_init();
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt"))
        return &table;
    return nullptr;
}
} // namespace detail

} // namespace graphrecover::simd

#else

namespace graphrecover::simd::detail {
const KernelTable *avx2_table() { return nullptr; }
} // namespace graphrecover::simd::detail

#endif
