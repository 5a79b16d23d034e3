#pragma once

#include <cstdint>
#include <functional>

namespace gasketdim {

/// Hard cap on subdivision levels. GASKETDIM_LEVEL_CAP in the environment
/// lowers this (values above the built-in cap of 30 are ignored).
int level_cap();

void require_level(int level, const char* what);

/// Worker threads used by the parallel helpers. Default 1.
void set_thread_count(unsigned n);
unsigned thread_count();

namespace detail {

// Chunk geometry is fixed (independent of the thread count) so that any
// chunk-ordered reduction gives identical results for 1 or N threads.
inline constexpr std::int64_t kParallelChunk = 16384;

void parallel_chunks(std::int64_t count,
                     const std::function<void(std::int64_t chunk_index,
                                              std::int64_t begin,
                                              std::int64_t end)>& body);

} // namespace detail

/// Runs body(i) for i in [0, count). Bodies must write to disjoint state.
void parallel_for(std::int64_t count, const std::function<void(std::int64_t)>& body);

/// Sums body(i) over [0, count) with a fixed chunk decomposition: chunk
/// subtotals are accumulated sequentially within each chunk and combined in
/// chunk order, so the result does not depend on the thread count.
double parallel_sum(std::int64_t count, const std::function<double(std::int64_t)>& term);

} // namespace gasketdim
