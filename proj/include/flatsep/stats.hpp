#pragma once

#include <cstdint>

namespace flatsep {

/// Work counters threaded through the solvers, deterministic by
/// construction: enumerations either run to completion regardless of how
/// the work is partitioned across workers, or stop only on fixed-size
/// batch boundaries, so the totals never depend on the worker count.
struct Stats {
  std::uint64_t candidates = 0;  // search nodes / patterns / subsets / splits
  std::uint64_t lps = 0;         // simplex solves
};

inline void bump_candidates(Stats* stats, std::uint64_t n = 1) {
  if (stats != nullptr) stats->candidates += n;
}

}  // namespace flatsep
