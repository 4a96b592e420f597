#include "graphrecover/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace graphrecover::simd {
namespace {

const KernelTable *best_available()
{
    if (const auto *t = detail::avx512_table())
        return t;
    if (const auto *t = detail::avx2_table())
        return t;
    if (const auto *t = detail::neon_table())
        return t;
    return &detail::scalar_table;
}

const KernelTable *initial_table()
{
    if (const char *env = std::getenv("GRAPHRECOVER_KERNEL")) {
        const std::string_view name{env};
        for (Isa isa : {Isa::scalar, Isa::avx2, Isa::avx512, Isa::neon})
            if (name == isa_name(isa))
                if (const auto *t = kernels_for(isa))
                    return t;
    }
    return best_available();
}

std::atomic<const KernelTable *> &active_slot()
{
    static std::atomic<const KernelTable *> slot{initial_table()};
    return slot;
}

} // namespace

std::string_view isa_name(Isa isa)
{
    switch (isa) {
    case Isa::scalar:
        return "scalar";
    case Isa::avx2:
        return "avx2";
    case Isa::avx512:
        return "avx512";
    case Isa::neon:
        return "neon";
    }
    return "unknown";
}

const KernelTable *kernels_for(Isa isa)
{
    switch (isa) {
    case Isa::scalar:
        return &detail::scalar_table;
    case Isa::avx2:
        return detail::avx2_table();
    case Isa::avx512:
        return detail::avx512_table();
    case Isa::neon:
        return detail::neon_table();
    }
    return nullptr;
}

std::vector<Isa> available_isas()
{
    std::vector<Isa> out;
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::avx512, Isa::neon})
        if (kernels_for(isa) != nullptr)
            out.push_back(isa);
    return out;
}

const KernelTable &active_kernels() { return *active_slot().load(std::memory_order_relaxed); }

Isa active_isa() { return active_kernels().isa; }

bool select_isa(Isa isa)
{
    const auto *t = kernels_for(isa);
    if (t == nullptr)
        return false;
    active_slot().store(t, std::memory_order_relaxed);
    return true;
}

} // namespace graphrecover::simd
