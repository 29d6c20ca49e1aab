#pragma once

#include <cstdint>
#include <functional>

namespace bimsa {

// Number of worker threads used by parallel_for. Defaults to the hardware
// concurrency, overridable via set_num_threads or the BIMSA_THREADS env var.
int num_threads();
void set_num_threads(int n);

// Runs fn(begin, end) over a static partition of [begin, end) into contiguous
// chunks, one chunk per worker. Every index is processed by exactly one
// thread, so results are identical for any thread count as long as fn writes
// only to locations derived from its own indices.
void parallel_for(int64_t begin, int64_t end,
                  const std::function<void(int64_t, int64_t)>& fn);

} // namespace bimsa
