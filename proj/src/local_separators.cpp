#include "locc/local_separators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "locc/chordality.hpp"
#include "locc/cyclespace.hpp"
#include "locc/error.hpp"

namespace locc {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<char> membership(int n, const std::vector<Vertex>& x) {
    std::vector<char> in(n, 0);
    for (Vertex v : x) in[v] = 1;
    return in;
}

} // namespace

int LocalComponents::part_of(EdgeId e) const {
    for (size_t i = 0; i < partition.size(); ++i)
        if (std::binary_search(partition[i].begin(), partition[i].end(), e))
            return static_cast<int>(i);
    return -1;
}

std::vector<EdgeId> edge_boundary(const Graph& g, const std::vector<Vertex>& x) {
    std::vector<char> in = membership(g.vertex_count(), x);
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (in[g.edge(e).u] != in[g.edge(e).v]) out.push_back(e);
    return out;
}

LocalComponents local_components(const Graph& g, const std::vector<Vertex>& x, Radius r,
                                 const CycleEnumLimits& limits) {
    if (x.empty()) throw PreconditionError("local_components: X must be nonempty");
    if (!r.infinite && r.value < 0)
        throw PreconditionError("local_components: r must be >= 0 or infinity");

    LocalComponents lc;
    lc.x = x;
    std::sort(lc.x.begin(), lc.x.end());
    lc.x.erase(std::unique(lc.x.begin(), lc.x.end()), lc.x.end());
    lc.r = r;
    lc.boundary = edge_boundary(g, lc.x);

    std::vector<int> boundary_index(g.edge_count(), -1);
    for (size_t i = 0; i < lc.boundary.size(); ++i) boundary_index[lc.boundary[i]] = static_cast<int>(i);
    Dsu dsu(static_cast<int>(lc.boundary.size()));
    std::vector<char> in_x = membership(g.vertex_count(), lc.x);

    if (r.infinite) {
        // Componental cuts: boundary edges grouped by the component of
        // G - X their outside endpoint lies in.
        std::vector<Vertex> rest;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (!in_x[v]) rest.push_back(v);
        InducedSubgraph sub = induced_subgraph(g, rest);
        std::vector<int> comp_of(g.vertex_count(), -1);
        auto comps = components(sub.graph);
        for (size_t c = 0; c < comps.size(); ++c)
            for (Vertex v : comps[c]) comp_of[sub.vertex_map[v]] = static_cast<int>(c);
        std::map<int, EdgeId> first_in_comp;
        for (EdgeId e : lc.boundary) {
            Vertex outside = in_x[g.edge(e).u] ? g.edge(e).v : g.edge(e).u;
            auto [it, inserted] = first_in_comp.try_emplace(comp_of[outside], e);
            if (!inserted) dsu.unite(boundary_index[e], boundary_index[it->second]);
        }
    } else {
        // For each cycle of length <= r that meets both X and its
        // complement, each arc of O - X relates the two edges of O joining
        // the arc's ends back into X.
        enumerate_cycles(
            g, 3, r.value,
            [&](const std::vector<Vertex>& o) {
                const int len = static_cast<int>(o.size());
                bool any_in = false, any_out = false;
                for (Vertex v : o) (in_x[v] ? any_in : any_out) = true;
                if (!any_in || !any_out) return true;
                for (int i = 0; i < len; ++i) {
                    if (in_x[o[i]]) continue;
                    if (in_x[o[(i - 1 + len) % len]]) {
                        // i starts an arc; walk to its end.
                        int j = i;
                        while (!in_x[o[(j + 1) % len]]) j = (j + 1) % len;
                        EdgeId e1 = g.edge_id(o[(i - 1 + len) % len], o[i]);
                        EdgeId e2 = g.edge_id(o[j], o[(j + 1) % len]);
                        dsu.unite(boundary_index[e1], boundary_index[e2]);
                    }
                }
                return true;
            },
            limits);
    }

    std::map<int, std::vector<EdgeId>> parts;
    for (size_t i = 0; i < lc.boundary.size(); ++i)
        parts[dsu.find(static_cast<int>(i))].push_back(lc.boundary[i]);
    for (auto& [root, edges] : parts) {
        std::sort(edges.begin(), edges.end());
        lc.partition.push_back(std::move(edges));
    }
    std::sort(lc.partition.begin(), lc.partition.end());
    return lc;
}

bool is_local_separator(const Graph& g, const std::vector<Vertex>& x, Radius r) {
    return local_components(g, x, r).partition.size() >= 2;
}

namespace {

void check_separation_preconditions(const Graph& g, const std::vector<Vertex>& x, Vertex u,
                                    Vertex w, Vertex v) {
    if (!g.has_edge(u, v)) throw PreconditionError("locally_separates: uv must be an edge");
    if (!g.has_edge(v, w)) throw PreconditionError("locally_separates: vw must be an edge");
    if (u == w || g.has_edge(u, w))
        throw PreconditionError("locally_separates: u and w must be at distance exactly 2");
    bool v_in = false, u_in = false, w_in = false;
    for (Vertex a : x) {
        v_in |= a == v;
        u_in |= a == u;
        w_in |= a == w;
    }
    if (!v_in) throw PreconditionError("locally_separates: v must be in X");
    if (u_in || w_in) throw PreconditionError("locally_separates: u and w must avoid X");
}

} // namespace

bool locally_separates(const Graph& g, const std::vector<Vertex>& x, Vertex u, Vertex w,
                       Vertex v, int r) {
    check_separation_preconditions(g, x, u, w, v);
    LocalComponents lc = local_components(g, x, Radius::finite(r));
    return lc.part_of(g.edge_id(u, v)) != lc.part_of(g.edge_id(v, w));
}

std::vector<Vertex> minimize_separator(const Graph& g, const std::vector<Vertex>& x, Vertex u,
                                       Vertex w, Vertex v, int r) {
    if (!locally_separates(g, x, u, w, v, r))
        throw PreconditionError("minimize_separator: X does not locally separate u and w");
    std::vector<Vertex> cur = x;
    std::sort(cur.begin(), cur.end());
    cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (size_t i = 0; i < cur.size(); ++i) {
            if (cur[i] == v) continue;
            std::vector<Vertex> smaller = cur;
            smaller.erase(smaller.begin() + i);
            if (locally_separates(g, smaller, u, w, v, r)) {
                cur = std::move(smaller);
                shrunk = true;
                break;
            }
        }
    }
    return cur;
}

std::vector<MinimalLocalSeparator> minimal_local_separators(const Graph& g, int r,
                                                            const SeparatorEnumLimits& limits) {
    const int n = g.vertex_count();
    if (n > limits.max_vertices_local)
        throw ResourceLimitError("minimal_local_separators: exhaustive enumeration capped at n <= " +
                                 std::to_string(limits.max_vertices_local));

    // Partition lookups are memoized per X; separation depends on nothing else.
    std::map<std::uint32_t, LocalComponents> memo;
    auto parts_for = [&](std::uint32_t mask) -> const LocalComponents& {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        std::vector<Vertex> x;
        for (Vertex a = 0; a < n; ++a)
            if (mask & (1u << a)) x.push_back(a);
        return memo.emplace(mask, local_components(g, x, Radius::finite(r))).first->second;
    };
    auto separates = [&](std::uint32_t mask, Vertex u, Vertex w, Vertex v) {
        const LocalComponents& lc = parts_for(mask);
        return lc.part_of(g.edge_id(u, v)) != lc.part_of(g.edge_id(v, w));
    };

    std::map<std::vector<Vertex>, SeparatorWitness> found;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex w = u + 1; w < n; ++w) {
            if (g.has_edge(u, w)) continue;
            for (Vertex v : g.neighbors(u)) {
                if (!g.has_edge(v, w)) continue;
                // All X with v in X, avoiding u and w.
                std::uint32_t free_mask = 0;
                for (Vertex a = 0; a < n; ++a)
                    if (a != u && a != w && a != v) free_mask |= 1u << a;
                std::vector<std::uint32_t> separating;
                for (std::uint32_t sub = free_mask;; sub = (sub - 1) & free_mask) {
                    std::uint32_t mask = sub | (1u << v);
                    if (separates(mask, u, w, v)) separating.push_back(mask);
                    if (sub == 0) break;
                }
                for (std::uint32_t mask : separating) {
                    bool minimal = true;
                    for (std::uint32_t other : separating)
                        if (other != mask && (other & mask) == other) {
                            minimal = false;
                            break;
                        }
                    if (!minimal) continue;
                    std::vector<Vertex> x;
                    for (Vertex a = 0; a < n; ++a)
                        if (mask & (1u << a)) x.push_back(a);
                    found.try_emplace(x, SeparatorWitness{u, w, v, x, r});
                }
            }
        }

    std::vector<MinimalLocalSeparator> out;
    for (auto& [x, witness] : found) out.push_back(MinimalLocalSeparator{x, witness});
    return out;
}

CliqueSeparatorVerdict all_minimal_separators_cliques(const Graph& g, int r,
                                                      const SeparatorEnumLimits& limits) {
    CliqueSeparatorVerdict verdict;
    verdict.all_cliques = true;
    for (auto& sep : minimal_local_separators(g, r, limits)) {
        if (!is_clique(g, sep.x)) {
            verdict.all_cliques = false;
            verdict.counterexample = sep;
            return verdict;
        }
    }
    return verdict;
}

std::vector<std::vector<Vertex>> global_minimal_separators(const Graph& g,
                                                           const SeparatorEnumLimits& limits) {
    const int n = g.vertex_count();
    if (n > limits.max_vertices_global)
        throw ResourceLimitError("global_minimal_separators: exhaustive enumeration capped at n <= " +
                                 std::to_string(limits.max_vertices_global));

    auto separated = [&](std::uint32_t mask, Vertex u, Vertex w) {
        // BFS from u in G - X; separated iff w unreached.
        std::vector<Vertex> stack{u};
        std::vector<char> seen(n, 0);
        seen[u] = 1;
        while (!stack.empty()) {
            Vertex a = stack.back();
            stack.pop_back();
            for (Vertex b : g.neighbors(a)) {
                if (seen[b] || (mask & (1u << b))) continue;
                if (b == w) return false;
                seen[b] = 1;
                stack.push_back(b);
            }
        }
        return true;
    };

    std::set<std::vector<Vertex>> out;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex w = u + 1; w < n; ++w) {
            if (g.has_edge(u, w)) continue;
            std::uint32_t free_mask = 0;
            for (Vertex a = 0; a < n; ++a)
                if (a != u && a != w) free_mask |= 1u << a;
            std::vector<std::uint32_t> separating;
            for (std::uint32_t sub = free_mask;; sub = (sub - 1) & free_mask) {
                if (separated(sub, u, w)) separating.push_back(sub);
                if (sub == 0) break;
            }
            for (std::uint32_t mask : separating) {
                bool minimal = true;
                for (std::uint32_t other : separating)
                    if (other != mask && (other & mask) == other) {
                        minimal = false;
                        break;
                    }
                if (!minimal) continue;
                std::vector<Vertex> x;
                for (Vertex a = 0; a < n; ++a)
                    if (mask & (1u << a)) x.push_back(a);
                out.insert(std::move(x));
            }
        }
    return {out.begin(), out.end()};
}

bool dirac_check(const Graph& g, const SeparatorEnumLimits& limits) {
    for (const auto& sep : global_minimal_separators(g, limits))
        if (!is_clique(g, sep)) return false;
    return true;
}

TightReport tight_report(const Graph& g, const std::vector<Vertex>& x, Radius r) {
    LocalComponents lc = local_components(g, x, r);
    TightReport report;
    report.x = lc.x;
    int full_count = 0;
    for (const auto& part : lc.partition) {
        std::vector<char> touched(g.vertex_count(), 0);
        for (EdgeId e : part) {
            touched[g.edge(e).u] = 1;
            touched[g.edge(e).v] = 1;
        }
        bool full = true;
        for (Vertex v : lc.x)
            if (!touched[v]) {
                full = false;
                break;
            }
        report.part_full.push_back(full);
        full_count += full;
    }
    report.tight = full_count >= 2;
    return report;
}

std::optional<TightNoncliqueWitness> search_tight_nonclique_witness(
    int r, const std::function<std::optional<Graph>()>& next) {
    long long scanned = 0;
    while (auto g = next()) {
        ++scanned;
        const int n = g->vertex_count();
        if (n > 30) throw ResourceLimitError("search_tight_nonclique_witness: graph too large");
        if (!is_r_locally_chordal(*g, r, LocalChordalityStrategy::Theorem1).locally_chordal)
            continue;
        // A tight separator with >= 2 parts needs relations among distinct
        // boundary edges, hence at least one short cycle.
        if (all_cycles_up_to(*g, r).empty()) continue;
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            std::vector<Vertex> x;
            for (Vertex a = 0; a < n; ++a)
                if (mask & (1u << a)) x.push_back(a);
            if (is_clique(*g, x)) continue;
            TightReport report = tight_report(*g, x, Radius::finite(r));
            if (!report.tight) continue;
            LocalComponents lc = local_components(*g, x, Radius::finite(r));
            if (lc.partition.size() < 2) continue;
            TightNoncliqueWitness witness;
            witness.graph = *g;
            witness.x = x;
            for (size_t i = 0; i < lc.partition.size(); ++i)
                if (report.part_full[i]) witness.full_parts.push_back(lc.partition[i]);
            witness.graphs_scanned = scanned;
            return witness;
        }
    }
    return std::nullopt;
}

bool lemma_local_to_ball_separator(const Graph& g, const std::vector<Vertex>& x, Vertex u,
                                   Vertex w, Vertex v, int r) {
    if (!locally_separates(g, x, u, w, v, r))
        throw PreconditionError("lemma_local_to_ball_separator: X must locally separate u and w");
    Ball b = ball(g, {v}, r);
    std::vector<char> blocked(b.subgraph.vertex_count(), 0);
    DistanceMap dm = distances(g, {v});
    for (Vertex a : x) {
        if (!dm.reachable(a) || dm.dist[a] > r / 2) continue; // outside N^{floor(r/2)}[v]
        if (b.host_to_sub[a] >= 0) blocked[b.host_to_sub[a]] = 1;
    }
    int su = b.host_to_sub[u], sw = b.host_to_sub[w];
    if (su < 0 || sw < 0) throw Error("internal: u or w missing from the ball around v");
    if (blocked[su] || blocked[sw]) return false;
    std::vector<Vertex> stack{su};
    std::vector<char> seen(b.subgraph.vertex_count(), 0);
    seen[su] = 1;
    while (!stack.empty()) {
        Vertex a = stack.back();
        stack.pop_back();
        for (Vertex c : b.subgraph.neighbors(a)) {
            if (seen[c] || blocked[c]) continue;
            if (c == sw) return false;
            seen[c] = 1;
            stack.push_back(c);
        }
    }
    return true;
}

} // namespace locc
