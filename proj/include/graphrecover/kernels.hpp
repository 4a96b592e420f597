#pragma once

// Popcount kernels over packed 64-bit bit rows.
//
// Every kernel has a portable scalar reference and, where the target allows,
// vectorized variants (AVX2, AVX-512 VPOPCNTDQ, NEON). The active variant is
// picked once at startup from the CPU feature bits and may be overridden with
// GRAPHRECOVER_KERNEL=scalar|avx2|avx512|neon or select_isa().

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace graphrecover::simd {

using Word = std::uint64_t;

enum class Isa { scalar, avx2, avx512, neon };

std::string_view isa_name(Isa isa);

struct KernelTable {
    Isa isa;
    std::uint64_t (*popcount)(const Word *a, std::size_t n);
    std::uint64_t (*popcount_and)(const Word *a, const Word *b, std::size_t n);
    std::uint64_t (*popcount_xor)(const Word *a, const Word *b, std::size_t n);
    /// popcount((a ^ b) & m)
    std::uint64_t (*popcount_xor_and)(const Word *a, const Word *b, const Word *m, std::size_t n);
};

/// The table for `isa`, or nullptr when it was not compiled in or the CPU
/// lacks the instructions.
const KernelTable *kernels_for(Isa isa);

/// Variants usable on this machine, scalar first.
std::vector<Isa> available_isas();

const KernelTable &active_kernels();
Isa active_isa();

/// Switches the process-wide variant. Returns false (and changes nothing)
/// when `isa` is unavailable.
bool select_isa(Isa isa);

inline std::uint64_t popcount(std::span<const Word> a)
{
    return active_kernels().popcount(a.data(), a.size());
}

inline std::uint64_t popcount_and(std::span<const Word> a, std::span<const Word> b)
{
    return active_kernels().popcount_and(a.data(), b.data(), a.size());
}

inline std::uint64_t popcount_xor(std::span<const Word> a, std::span<const Word> b)
{
    return active_kernels().popcount_xor(a.data(), b.data(), a.size());
}

inline std::uint64_t popcount_xor_and(std::span<const Word> a, std::span<const Word> b,
                                      std::span<const Word> m)
{
    return active_kernels().popcount_xor_and(a.data(), b.data(), m.data(), a.size());
}

namespace detail {
extern const KernelTable scalar_table;
const KernelTable *avx2_table();
const KernelTable *avx512_table();
const KernelTable *neon_table();
} // namespace detail

} // namespace graphrecover::simd
