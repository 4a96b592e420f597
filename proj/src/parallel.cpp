#include "graphrecover/parallel.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <string_view>

namespace graphrecover {

namespace {

std::atomic<std::size_t> override_count{0};

std::size_t default_count()
{
    if (const char *env = std::getenv("GRAPHRECOVER_THREADS")) {
        std::string_view s{env};
        std::size_t n = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
        if (ec == std::errc{} && ptr == s.data() + s.size() && n > 0)
            return n;
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

} // namespace

std::size_t thread_count()
{
    const std::size_t n = override_count.load(std::memory_order_relaxed);
    return n != 0 ? n : default_count();
}

void set_thread_count(std::size_t n) { override_count.store(n, std::memory_order_relaxed); }

} // namespace graphrecover
