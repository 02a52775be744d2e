#include "locc/cyclespace.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "locc/cycle_enum.hpp"
#include "locc/error.hpp"

namespace locc {

// ---- EdgeVector -----------------------------------------------------------

EdgeVector EdgeVector::from_edges(const Graph& g, const std::vector<EdgeId>& edges) {
    EdgeVector v(g.edge_count());
    for (EdgeId e : edges) {
        if (e < 0 || e >= g.edge_count())
            throw PreconditionError("EdgeVector: edge id out of range");
        v.flip(e);
    }
    return v;
}

EdgeVector EdgeVector::from_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
    if (!is_cycle_of(g, cycle)) throw PreconditionError("EdgeVector: not a cycle of the graph");
    EdgeVector v(g.edge_count());
    for (size_t i = 0; i < cycle.size(); ++i)
        v.flip(g.edge_id(cycle[i], cycle[(i + 1) % cycle.size()]));
    return v;
}

bool EdgeVector::empty() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

int EdgeVector::popcount() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

int EdgeVector::lowest_set() const {
    for (size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
    return -1;
}

EdgeVector& EdgeVector::operator^=(const EdgeVector& o) {
    if (m_ != o.m_) throw PreconditionError("EdgeVector: size mismatch");
    for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

std::vector<EdgeId> EdgeVector::edge_ids() const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < m_; ++e)
        if (test(e)) out.push_back(e);
    return out;
}

bool EdgeVector::even_degrees(const Graph& g) const {
    std::vector<int> deg(g.vertex_count(), 0);
    for (EdgeId e = 0; e < m_; ++e)
        if (test(e)) {
            ++deg[g.edge(e).u];
            ++deg[g.edge(e).v];
        }
    for (int d : deg)
        if (d % 2) return false;
    return true;
}

// ---- Gf2Span ---------------------------------------------------------------

namespace {

void xor_combo(std::vector<int>& combo, const std::vector<int>& other) {
    std::vector<int> merged;
    std::set_symmetric_difference(combo.begin(), combo.end(), other.begin(), other.end(),
                                  std::back_inserter(merged));
    combo = std::move(merged);
}

} // namespace

bool Gf2Span::add(const EdgeVector& v, int generator_id) {
    EdgeVector cur = v;
    std::vector<int> combo{generator_id};
    for (const Row& row : rows_)
        if (cur.test(row.pivot)) {
            cur ^= row.vec;
            xor_combo(combo, row.combo);
        }
    int pivot = cur.lowest_set();
    if (pivot < 0) return false;
    rows_.push_back(Row{std::move(cur), pivot, std::move(combo)});
    return true;
}

std::optional<std::vector<int>> Gf2Span::express(const EdgeVector& v) const {
    EdgeVector cur = v;
    std::vector<int> combo;
    for (const Row& row : rows_)
        if (cur.test(row.pivot)) {
            cur ^= row.vec;
            xor_combo(combo, row.combo);
        }
    if (!cur.empty()) return std::nullopt;
    return combo;
}

// ---- triangles ---------------------------------------------------------------

EdgeVector triangle_vector(const Graph& g, const Triangle& t) {
    auto [a, b, c] = t.v;
    EdgeId e1 = g.edge_id(a, b), e2 = g.edge_id(a, c), e3 = g.edge_id(b, c);
    if (e1 < 0 || e2 < 0 || e3 < 0)
        throw PreconditionError("triangle_vector: not a triangle of the graph");
    return EdgeVector::from_edges(g, {e1, e2, e3});
}

TriangleSet triangles(const Graph& g) {
    TriangleSet out;
    for (const auto& e : g.edges()) {
        // Common neighbors above v keep each triangle unique and sorted.
        const auto& nu = g.neighbors(e.u);
        const auto& nv = g.neighbors(e.v);
        std::vector<Vertex> common;
        std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                              std::back_inserter(common));
        for (Vertex w : common)
            if (w > e.v) out.push_back(Triangle{{e.u, e.v, w}});
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---- fundamental basis ---------------------------------------------------------

CycleBasis fundamental_basis(const Graph& g) {
    CycleBasis basis;
    const int n = g.vertex_count();
    std::vector<int> parent_edge(n, -1);
    std::vector<Vertex> parent(n, -1);
    std::vector<char> visited(n, 0);
    std::vector<char> in_forest(g.edge_count(), 0);

    for (Vertex root = 0; root < n; ++root) {
        if (visited[root]) continue;
        visited[root] = 1;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            const auto& nb = g.neighbors(v);
            const auto& ei = g.incident_edges(v);
            for (size_t i = 0; i < nb.size(); ++i)
                if (!visited[nb[i]]) {
                    visited[nb[i]] = 1;
                    parent[nb[i]] = v;
                    parent_edge[nb[i]] = ei[i];
                    in_forest[ei[i]] = 1;
                    queue.push_back(nb[i]);
                }
        }
    }

    auto path_to_root = [&](Vertex v) {
        EdgeVector vec(g.edge_count());
        for (Vertex a = v; parent[a] != -1; a = parent[a]) vec.flip(parent_edge[a]);
        return vec;
    };

    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (in_forest[e]) {
            basis.forest_edges.push_back(e);
            continue;
        }
        auto [u, v] = g.edge(e);
        EdgeVector vec = path_to_root(u);
        vec ^= path_to_root(v);
        vec.flip(e);
        basis.non_forest_edges.push_back(e);
        basis.vectors.push_back(std::move(vec));
    }
    return basis;
}

// ---- triangle span operations ----------------------------------------------------

namespace {

Gf2Span triangle_span(const Graph& g, const TriangleSet& ts) {
    Gf2Span span(g.edge_count());
    for (size_t i = 0; i < ts.size(); ++i) span.add(triangle_vector(g, ts[i]), static_cast<int>(i));
    return span;
}

} // namespace

std::optional<TriangleSet> express_in_triangles(const Graph& g, const EdgeVector& z) {
    if (z.size() != g.edge_count())
        throw PreconditionError("express_in_triangles: vector/graph size mismatch");
    if (!z.even_degrees(g))
        throw PreconditionError(
            "express_in_triangles: vector is not in the cycle space (odd degree)");
    TriangleSet ts = triangles(g);
    Gf2Span span = triangle_span(g, ts);
    auto combo = span.express(z);
    if (!combo) return std::nullopt;
    TriangleSet out;
    for (int id : *combo) out.push_back(ts[id]);
    return out;
}

std::variant<TriangleSet, Hole> chord_split_decomposition(const Graph& g,
                                                          const std::vector<Vertex>& cycle,
                                                          int r) {
    if (r < 3) throw PreconditionError("chord_split_decomposition: r must be >= 3");
    if (!is_cycle_of(g, cycle))
        throw PreconditionError("chord_split_decomposition: input is not a cycle of the graph");
    if (static_cast<int>(cycle.size()) > r)
        throw PreconditionError("chord_split_decomposition: cycle longer than r");

    TriangleSet out;
    std::deque<std::vector<Vertex>> work{cycle};
    while (!work.empty()) {
        std::vector<Vertex> o = std::move(work.front());
        work.pop_front();
        const int len = static_cast<int>(o.size());
        if (len == 3) {
            Triangle t{{o[0], o[1], o[2]}};
            std::sort(t.v.begin(), t.v.end());
            out.push_back(t);
            continue;
        }
        // Lexicographically least chord of o in g.
        int bi = -1, bj = -1;
        Vertex bu = -1, bv = -1;
        for (int i = 0; i < len; ++i)
            for (int j = i + 2; j < len; ++j) {
                if (i == 0 && j == len - 1) continue;
                if (!g.has_edge(o[i], o[j])) continue;
                Vertex u = std::min(o[i], o[j]), v = std::max(o[i], o[j]);
                if (bu == -1 || std::pair{u, v} < std::pair{bu, bv}) {
                    bu = u;
                    bv = v;
                    bi = i;
                    bj = j;
                }
            }
        if (bi < 0) return Hole{canonical_cycle(o)};
        std::vector<Vertex> o1(o.begin() + bi, o.begin() + bj + 1);
        std::vector<Vertex> o2(o.begin() + bj, o.end());
        o2.insert(o2.end(), o.begin(), o.begin() + bi + 1);
        work.push_back(std::move(o1));
        work.push_back(std::move(o2));
    }
    std::sort(out.begin(), out.end());
    return out;
}

ShortCycleGenerationResult short_cycles_generated_by_triangles(
    const Graph& g, int r, const ShortCycleCheckLimits& limits) {
    if (r < 3) throw PreconditionError("short_cycles_generated_by_triangles: r must be >= 3");
    if (g.vertex_count() > limits.max_vertices || r > limits.max_r)
        throw ResourceLimitError(
            "short_cycles_generated_by_triangles: exhaustive cycle enumeration is capped at n <= " +
            std::to_string(limits.max_vertices) + ", r <= " + std::to_string(limits.max_r));

    Gf2Span span = triangle_span(g, triangles(g));
    ShortCycleGenerationResult res;
    res.all_generated = true;
    enumerate_cycles(g, 3, r, [&](const std::vector<Vertex>& c) {
        if (!span.contains(EdgeVector::from_cycle(g, c))) {
            res.all_generated = false;
            res.witness_cycle = c;
            return false;
        }
        return true;
    });
    return res;
}

bool chordal_via_cyclespace(const Graph& g) {
    if (find_induced_wheel(g)) return false;
    Gf2Span span = triangle_span(g, triangles(g));
    for (const EdgeVector& v : fundamental_basis(g).vectors)
        if (!span.contains(v)) return false;
    return true;
}

} // namespace locc
