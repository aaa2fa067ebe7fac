#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

namespace ivp {

// Smallest index in [0, total) where probe returns false, or nullopt. The
// probe must be a pure function of the index. With jobs > 1 the range is
// swept in chunks by strided workers; the reported index is the minimum over
// each chunk, so the result does not depend on scheduling.
template <class Probe>
std::optional<std::uint64_t> first_failing_index(std::uint64_t total, unsigned jobs,
                                                 const Probe& probe) {
  if (jobs <= 1) {
    for (std::uint64_t i = 0; i < total; ++i)
      if (!probe(i)) return i;
    return std::nullopt;
  }
  const std::uint64_t chunk = static_cast<std::uint64_t>(jobs) * 512;
  for (std::uint64_t base = 0; base < total; base += chunk) {
    const std::uint64_t end = std::min(base + chunk, total);
    std::atomic<std::uint64_t> best{UINT64_MAX};
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        for (std::uint64_t i = base + w; i < end; i += jobs) {
          if (i > best.load(std::memory_order_relaxed)) break;  // can only lose
          if (!probe(i)) {
            std::uint64_t cur = best.load(std::memory_order_relaxed);
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            break;
          }
        }
      });
    }
    for (auto& t : workers) t.join();
    const std::uint64_t found = best.load();
    if (found != UINT64_MAX) return found;
  }
  return std::nullopt;
}

}  // namespace ivp
