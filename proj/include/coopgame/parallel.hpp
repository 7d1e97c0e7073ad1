#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace coopgame {

/// Runs fn(i) for i in [begin, end) across `jobs` threads in disjoint blocks.
/// Callers write results into per-index slots, so the outcome is identical to
/// the sequential run regardless of the thread count.
inline void parallel_for(std::uint32_t begin, std::uint32_t end, int jobs,
                         const std::function<void(std::uint32_t)>& fn) {
  if (jobs < 1) jobs = 1;
  const std::uint32_t count = end > begin ? end - begin : 0;
  if (jobs == 1 || count < 2) {
    for (std::uint32_t i = begin; i < end; ++i) fn(i);
    return;
  }
  const std::uint32_t workers = std::min<std::uint32_t>(jobs, count);
  std::vector<std::thread> pool;
  for (std::uint32_t w = 0; w < workers; ++w) {
    const std::uint32_t lo = begin + static_cast<std::uint32_t>(
                                         static_cast<std::uint64_t>(count) * w / workers);
    const std::uint32_t hi = begin + static_cast<std::uint32_t>(
                                         static_cast<std::uint64_t>(count) * (w + 1) / workers);
    pool.emplace_back([lo, hi, &fn] {
      for (std::uint32_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace coopgame
