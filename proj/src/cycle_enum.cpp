#include "locc/cycle_enum.hpp"

#include <algorithm>

#include "locc/error.hpp"

namespace locc {

namespace {

// Both enumerators root each cycle at its least vertex and emit it in the
// direction whose second vertex is smaller than its last, so every cycle
// appears exactly once and the emission order is lexicographic over
// canonical sequences.
struct CycleDfs {
    const Graph& g;
    int min_len;
    int max_len;
    bool induced;
    const std::function<bool(const std::vector<Vertex>&)>& emit;
    std::int64_t budget;
    std::vector<Vertex> path;
    std::vector<char> on_path;
    bool stopped = false;

    CycleDfs(const Graph& g, int min_len, int max_len, bool induced,
             const std::function<bool(const std::vector<Vertex>&)>& emit, std::int64_t budget)
        : g(g), min_len(min_len), max_len(max_len), induced(induced), emit(emit),
          budget(budget), on_path(g.vertex_count(), 0) {}

    void run() {
        for (Vertex root = 0; root < g.vertex_count() && !stopped; ++root) {
            path = {root};
            on_path.assign(g.vertex_count(), 0);
            on_path[root] = 1;
            extend();
        }
    }

    bool try_emit() {
        const int len = static_cast<int>(path.size());
        if (len < std::max(3, min_len) || len > max_len) return true;
        if (path[1] >= path.back()) return true; // reverse direction, skip
        if (--budget < 0) throw ResourceLimitError("cycle enumeration cap exceeded");
        if (!emit(path)) {
            stopped = true;
            return false;
        }
        return true;
    }

    // True when w has a chord to an earlier path vertex (excluding the
    // closing adjacency to the root, handled by the caller).
    bool chord_to_interior(Vertex w) const {
        for (size_t i = 1; i + 1 < path.size(); ++i)
            if (g.has_edge(w, path[i])) return true;
        return false;
    }

    void extend() {
        if (stopped) return;
        const Vertex root = path[0];
        const Vertex last = path.back();
        for (Vertex w : g.neighbors(last)) {
            if (stopped) return;
            if (w == root) {
                if (!induced && path.size() >= 3)
                    if (!try_emit()) return;
                continue;
            }
            if (w < root || on_path[w]) continue;
            if (static_cast<int>(path.size()) >= max_len) continue;
            if (induced) {
                if (chord_to_interior(w)) continue;
                if (g.has_edge(w, root)) {
                    // Closing vertex: path + w is a chordless cycle.
                    path.push_back(w);
                    if (!try_emit()) return;
                    path.pop_back();
                    continue;
                }
            }
            path.push_back(w);
            on_path[w] = 1;
            extend();
            on_path[w] = 0;
            path.pop_back();
        }
    }
};

} // namespace

void enumerate_cycles(const Graph& g, int min_len, int max_len,
                      const std::function<bool(const std::vector<Vertex>&)>& emit,
                      const CycleEnumLimits& limits) {
    if (max_len < 3) return;
    CycleDfs dfs(g, min_len, max_len, /*induced=*/false, emit, limits.max_cycles);
    dfs.run();
}

void enumerate_induced_cycles(const Graph& g, int min_len, int max_len,
                              const std::function<bool(const std::vector<Vertex>&)>& emit,
                              const CycleEnumLimits& limits) {
    if (max_len < 3) return;
    CycleDfs dfs(g, min_len, max_len, /*induced=*/true, emit, limits.max_cycles);
    dfs.run();
}

std::vector<std::vector<Vertex>> all_cycles_up_to(const Graph& g, int max_len,
                                                  const CycleEnumLimits& limits) {
    std::vector<std::vector<Vertex>> out;
    enumerate_cycles(
        g, 3, max_len,
        [&](const std::vector<Vertex>& c) {
            out.push_back(c);
            return true;
        },
        limits);
    return out;
}

} // namespace locc
