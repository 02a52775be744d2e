#ifndef LOCC_CYCLE_ENUM_HPP
#define LOCC_CYCLE_ENUM_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "locc/graph.hpp"

namespace locc {

/// Guards for the cycle enumerators. A run that would emit more than
/// max_cycles cycles aborts with ResourceLimitError.
struct CycleEnumLimits {
    std::int64_t max_cycles = 5'000'000;
};

/// Enumerates every simple cycle of g with length in [min_len, max_len],
/// each exactly once, as a canonical vertex sequence (least vertex first,
/// second vertex smaller than last). Cycles are emitted in DFS order:
/// grouped by their least vertex in increasing order, then lexicographically
/// by the canonical sequence. Return false from the callback to stop early.
void enumerate_cycles(const Graph& g, int min_len, int max_len,
                      const std::function<bool(const std::vector<Vertex>&)>& emit,
                      const CycleEnumLimits& limits = {});

/// Same but restricted to induced (chordless) cycles.
void enumerate_induced_cycles(const Graph& g, int min_len, int max_len,
                              const std::function<bool(const std::vector<Vertex>&)>& emit,
                              const CycleEnumLimits& limits = {});

/// Collects all cycles of length at most max_len.
std::vector<std::vector<Vertex>> all_cycles_up_to(const Graph& g, int max_len,
                                                  const CycleEnumLimits& limits = {});

} // namespace locc

#endif
