#include "graphrecover/kernels.hpp"

#include <bit>

namespace graphrecover::simd {
namespace {

std::uint64_t popcount_scalar(const Word *a, std::size_t n)
{
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < n; ++i)
        c += static_cast<std::uint64_t>(std::popcount(a[i]));
    return c;
}

std::uint64_t popcount_and_scalar(const Word *a, const Word *b, std::size_t n)
{
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < n; ++i)
        c += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    return c;
}

std::uint64_t popcount_xor_scalar(const Word *a, const Word *b, std::size_t n)
{
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < n; ++i)
        c += static_cast<std::uint64_t>(std::popcount(a[i] ^ b[i]));
    return c;
}

std::uint64_t popcount_xor_and_scalar(const Word *a, const Word *b, const Word *m, std::size_t n)
{
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < n; ++i)
        c += static_cast<std::uint64_t>(std::popcount((a[i] ^ b[i]) & m[i]));
    return c;
}

} // namespace

namespace detail {
const KernelTable scalar_table{
    Isa::scalar, popcount_scalar, popcount_and_scalar, popcount_xor_scalar, popcount_xor_and_scalar,
};
} // namespace detail

} // namespace graphrecover::simd
