#include "gasketdim/runtime.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace gasketdim {

namespace {

constexpr int kBuiltinLevelCap = 30;

int read_level_cap_from_env() {
    const char* raw = std::getenv("GASKETDIM_LEVEL_CAP");
    if (raw == nullptr || *raw == '\0') {
        return kBuiltinLevelCap;
    }
    char* end = nullptr;
    long value = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || value <= 0) {
        return kBuiltinLevelCap;
    }
    // The environment may only lower the cap.
    return value < kBuiltinLevelCap ? static_cast<int>(value) : kBuiltinLevelCap;
}

std::atomic<unsigned> g_threads{1};

} // namespace

int level_cap() {
    static const int cap = read_level_cap_from_env();
    return cap;
}

void require_level(int level, const char* what) {
    if (level < 0) {
        throw std::invalid_argument(std::string(what) + ": level must be non-negative");
    }
    if (level > level_cap()) {
        throw std::invalid_argument(std::string(what) + ": level " + std::to_string(level) +
                                    " exceeds cap " + std::to_string(level_cap()));
    }
}

void set_thread_count(unsigned n) {
    g_threads.store(n == 0 ? 1 : n);
}

unsigned thread_count() {
    return g_threads.load();
}

namespace detail {

void parallel_chunks(std::int64_t count,
                     const std::function<void(std::int64_t, std::int64_t, std::int64_t)>& body) {
    if (count <= 0) {
        return;
    }
    const std::int64_t chunks = (count + kParallelChunk - 1) / kParallelChunk;
    const unsigned workers = thread_count();
    if (workers <= 1 || chunks == 1) {
        for (std::int64_t c = 0; c < chunks; ++c) {
            const std::int64_t begin = c * kParallelChunk;
            body(c, begin, std::min(count, begin + kParallelChunk));
        }
        return;
    }
    std::atomic<std::int64_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::int64_t c = next.fetch_add(1);
            if (c >= chunks) {
                return;
            }
            const std::int64_t begin = c * kParallelChunk;
            body(c, begin, std::min(count, begin + kParallelChunk));
        }
    };
    std::vector<std::thread> pool;
    const unsigned spawned = static_cast<unsigned>(
        std::min<std::int64_t>(chunks, static_cast<std::int64_t>(workers)));
    pool.reserve(spawned);
    for (unsigned t = 0; t < spawned; ++t) {
        pool.emplace_back(worker);
    }
    for (auto& th : pool) {
        th.join();
    }
}

} // namespace detail

void parallel_for(std::int64_t count, const std::function<void(std::int64_t)>& body) {
    detail::parallel_chunks(count, [&](std::int64_t, std::int64_t begin, std::int64_t end) {
        for (std::int64_t i = begin; i < end; ++i) {
            body(i);
        }
    });
}

double parallel_sum(std::int64_t count, const std::function<double(std::int64_t)>& term) {
    if (count <= 0) {
        return 0.0;
    }
    const std::int64_t chunks = (count + detail::kParallelChunk - 1) / detail::kParallelChunk;
    std::vector<double> partial(static_cast<std::size_t>(chunks), 0.0);
    detail::parallel_chunks(count, [&](std::int64_t c, std::int64_t begin, std::int64_t end) {
        double acc = 0.0;
        for (std::int64_t i = begin; i < end; ++i) {
            acc += term(i);
        }
        partial[static_cast<std::size_t>(c)] = acc;
    });
    double total = 0.0;
    for (double p : partial) {
        total += p;
    }
    return total;
}

} // namespace gasketdim
