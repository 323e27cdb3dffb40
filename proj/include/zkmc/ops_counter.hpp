#pragma once

#include <atomic>
#include <cstdint>

namespace zkmc::ops {

// Coarse operation metrics for the cost-shape benchmarks. Deterministic:
// counts are incremented by analytically known amounts per call site, so two
// runs of the same workload report identical numbers regardless of threading.
struct Counters {
    std::atomic<uint64_t> group_ops{0};   // point additions/doublings
    std::atomic<uint64_t> pairings{0};
    std::atomic<uint64_t> field_muls{0};  // Fr multiplications in polynomial kernels
};

Counters& counters();

inline void count_group(uint64_t n) {
    counters().group_ops.fetch_add(n, std::memory_order_relaxed);
}
inline void count_pairing(uint64_t n) {
    counters().pairings.fetch_add(n, std::memory_order_relaxed);
}
inline void count_field(uint64_t n) {
    counters().field_muls.fetch_add(n, std::memory_order_relaxed);
}

struct Snapshot {
    uint64_t group_ops, pairings, field_muls;
};

Snapshot snapshot();
void reset();

}  // namespace zkmc::ops
