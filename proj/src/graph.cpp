#include "locc/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "locc/error.hpp"

namespace locc {

Graph Graph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    if (n < 0) throw PreconditionError("vertex count must be nonnegative");
    std::set<Edge> dedup;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw PreconditionError("edge endpoint out of range: (" + std::to_string(u) +
                                    "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v)
            throw PreconditionError("self-loop at vertex " + std::to_string(u));
        dedup.insert(u < v ? Edge{u, v} : Edge{v, u});
    }
    Graph g;
    g.n_ = n;
    g.edges_.assign(dedup.begin(), dedup.end());
    g.adj_.resize(n);
    g.adj_eid_.resize(n);
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.edges_.size()); ++e) {
        auto [u, v] = g.edges_[e];
        g.adj_[u].push_back(v);
        g.adj_eid_[u].push_back(e);
        g.adj_[v].push_back(u);
        g.adj_eid_[v].push_back(e);
    }
    // Neighbors are already sorted because edges_ is sorted lexicographically
    // and we append smaller-endpoint edges first, but endpoints interleave;
    // sort explicitly to keep the invariant obvious.
    for (Vertex v = 0; v < n; ++v) {
        std::vector<int> order(g.adj_[v].size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return g.adj_[v][a] < g.adj_[v][b]; });
        std::vector<Vertex> nb(order.size());
        std::vector<EdgeId> ei(order.size());
        for (size_t i = 0; i < order.size(); ++i) {
            nb[i] = g.adj_[v][order[i]];
            ei[i] = g.adj_eid_[v][order[i]];
        }
        g.adj_[v] = std::move(nb);
        g.adj_eid_[v] = std::move(ei);
    }
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (!has_vertex(u) || !has_vertex(v) || u == v) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

EdgeId Graph::edge_id(Vertex u, Vertex v) const {
    if (!has_vertex(u) || !has_vertex(v) || u == v) return -1;
    const auto& nb = adj_[u];
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v) return -1;
    return adj_eid_[u][it - nb.begin()];
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != n_)
        throw PreconditionError("label count must match vertex count");
    labels_ = std::move(labels);
}

// ---- graph6 ------------------------------------------------------------

namespace {

constexpr std::string_view kG6Header = ">>graph6<<";

int g6_char(std::string_view text, size_t pos) {
    if (pos >= text.size())
        throw ParseError("graph6: unexpected end of input at byte " + std::to_string(pos));
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126)
        throw ParseError("graph6: character out of printable range (byte " +
                         std::to_string(pos) + ", value " + std::to_string(int(c)) + ")");
    return c - 63;
}

} // namespace

Graph parse_graph6(std::string_view text) {
    if (text.substr(0, kG6Header.size()) == kG6Header) text.remove_prefix(kG6Header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw ParseError("graph6: empty input");

    size_t pos = 0;
    long long n = 0;
    if (static_cast<unsigned char>(text[pos]) == 126) {
        ++pos;
        if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126)
            throw ParseError("graph6: 8-byte vertex counts exceed the supported limit "
                             "(byte 1)");
        for (int i = 0; i < 3; ++i) n = (n << 6) | g6_char(text, pos++);
        if (n < 63)
            throw ParseError("graph6: malformed length prefix (long form used for n < 63)");
    } else {
        n = g6_char(text, pos++);
    }
    if (n > kMaxGraph6Vertices)
        throw ParseError("graph6: vertex count " + std::to_string(n) +
                         " exceeds the supported limit " + std::to_string(kMaxGraph6Vertices));

    const long long nbits = n * (n - 1) / 2;
    const long long nbytes = (nbits + 5) / 6;
    if (static_cast<long long>(text.size()) - static_cast<long long>(pos) != nbytes)
        throw ParseError("graph6: malformed length prefix: expected " + std::to_string(nbytes) +
                         " adjacency bytes, got " +
                         std::to_string(text.size() - pos) + " (byte " + std::to_string(pos) +
                         ")");

    std::vector<std::pair<Vertex, Vertex>> edges;
    int word = 0;
    int bits_left = 0;
    size_t word_pos = pos;
    long long bit_index = 0;
    for (Vertex col = 1; col < n; ++col) {
        for (Vertex row = 0; row < col; ++row) {
            if (bits_left == 0) {
                word_pos = pos;
                word = g6_char(text, pos++);
                bits_left = 6;
            }
            if (word & (1 << (bits_left - 1))) edges.emplace_back(row, col);
            --bits_left;
            ++bit_index;
        }
    }
    if (bits_left > 0 && (word & ((1 << bits_left) - 1)) != 0)
        throw ParseError("graph6: trailing padding bits nonzero (byte " +
                         std::to_string(word_pos) + ")");
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + 63));
        out.push_back(static_cast<char>((n & 0x3f) + 63));
    }
    int word = 0;
    int nbits = 0;
    for (Vertex col = 1; col < n; ++col) {
        for (Vertex row = 0; row < col; ++row) {
            word = (word << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(word + 63));
                word = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((word << (6 - nbits)) + 63));
    return out;
}

// ---- edge list ---------------------------------------------------------

Graph parse_edge_list(std::string_view text, EdgeListHeader header) {
    struct Line {
        long long a, b;
        int number;
    };
    std::vector<Line> lines;
    int line_no = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        std::string_view line = text.substr(
            start, end == std::string_view::npos ? std::string_view::npos : end - start);
        ++line_no;
        std::string buf(line);
        std::istringstream is(buf);
        long long a, b;
        if (is >> a) {
            if (!(is >> b))
                throw ParseError("edge list: line " + std::to_string(line_no) +
                                 ": expected two integers");
            std::string rest;
            if (is >> rest)
                throw ParseError("edge list: line " + std::to_string(line_no) +
                                 ": trailing tokens");
            lines.push_back({a, b, line_no});
        }
        if (end == std::string_view::npos) break;
        start = end + 1;
    }

    bool has_header = false;
    if (!lines.empty()) {
        const auto& first = lines.front();
        bool plausible = first.a >= 0 && first.b >= 0 &&
                         static_cast<long long>(lines.size()) - 1 == first.b;
        if (plausible)
            for (size_t i = 1; i < lines.size(); ++i)
                if (lines[i].a >= first.a || lines[i].b >= first.a) plausible = false;
        switch (header) {
            case EdgeListHeader::Auto: has_header = plausible; break;
            case EdgeListHeader::Require:
                if (lines.empty()) throw ParseError("edge list: missing n m header");
                has_header = true;
                break;
            case EdgeListHeader::Forbid: has_header = false; break;
        }
    }

    long long n = 0;
    size_t first_edge = 0;
    if (has_header) {
        n = lines.front().a;
        first_edge = 1;
    } else {
        for (const auto& l : lines) n = std::max({n, l.a + 1, l.b + 1});
    }
    if (n > kMaxGraph6Vertices)
        throw ParseError("edge list: vertex count " + std::to_string(n) +
                         " exceeds the supported limit");

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (size_t i = first_edge; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (l.a == l.b)
            throw ParseError("edge list: line " + std::to_string(l.number) +
                             ": self-loop at vertex " + std::to_string(l.a));
        if (l.a < 0 || l.b < 0 || l.a >= n || l.b >= n)
            throw ParseError("edge list: line " + std::to_string(l.number) +
                             ": vertex index out of range");
        edges.emplace_back(static_cast<Vertex>(l.a), static_cast<Vertex>(l.b));
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string emit_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

// ---- distances, balls, neighborhoods ------------------------------------

DistanceMap distances(const Graph& g, const std::vector<Vertex>& sources) {
    if (sources.empty()) throw PreconditionError("distances: source set must be nonempty");
    DistanceMap dm;
    dm.sources = sources;
    dm.dist.assign(g.vertex_count(), DistanceMap::kUnreachable);
    std::deque<Vertex> queue;
    for (Vertex s : sources) {
        if (!g.has_vertex(s)) throw PreconditionError("distances: source out of range");
        if (dm.dist[s] == 0) continue;
        dm.dist[s] = 0;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(v))
            if (dm.dist[w] == DistanceMap::kUnreachable) {
                dm.dist[w] = dm.dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dm;
}

Ball ball(const Graph& g, const std::vector<Vertex>& center, int r) {
    if (center.empty()) throw PreconditionError("ball: center set must be nonempty");
    if (r < 0) throw PreconditionError("ball: radius parameter must be nonnegative");

    const int d = r / 2;
    std::vector<char> in_ball(g.vertex_count(), 0);
    std::vector<char> edge_in(g.edge_count(), 0);
    for (Vertex x : center) {
        DistanceMap dm = distances(g, {x});
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (dm.reachable(v) && dm.dist[v] <= d) in_ball[v] = 1;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edge(e);
            if (dm.reachable(u) && dm.reachable(v) && dm.dist[u] + dm.dist[v] < r)
                edge_in[e] = 1;
        }
    }

    Ball b;
    b.host = &g;
    b.center = center;
    b.radius_parameter = r;
    b.host_to_sub.assign(g.vertex_count(), -1);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (in_ball[v]) {
            b.host_to_sub[v] = static_cast<int>(b.vertex_map.size());
            b.vertex_map.push_back(v);
        }
    std::vector<std::pair<Vertex, Vertex>> sub_edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (edge_in[e]) {
            auto [u, v] = g.edge(e);
            sub_edges.emplace_back(b.host_to_sub[u], b.host_to_sub[v]);
        }
    b.subgraph = Graph::from_edges(static_cast<int>(b.vertex_map.size()), sub_edges);
    b.edge_map.resize(b.subgraph.edge_count());
    for (EdgeId e = 0; e < b.subgraph.edge_count(); ++e) {
        auto [u, v] = b.subgraph.edge(e);
        b.edge_map[e] = g.edge_id(b.vertex_map[u], b.vertex_map[v]);
    }
    return b;
}

std::vector<Vertex> neighborhood(const Graph& g, const std::vector<Vertex>& x, int d,
                                 bool closed) {
    if (x.empty()) throw PreconditionError("neighborhood: X must be nonempty");
    if (d < 0) throw PreconditionError("neighborhood: depth must be nonnegative");
    DistanceMap dm = distances(g, x);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (!dm.reachable(v)) continue;
        if (closed ? dm.dist[v] <= d : dm.dist[v] == d) out.push_back(v);
    }
    return out;
}

// ---- girth ---------------------------------------------------------------

std::optional<GirthResult> girth(const Graph& g) {
    std::optional<GirthResult> best;
    std::vector<int> dist(g.vertex_count());
    std::vector<Vertex> parent(g.vertex_count());

    auto consider = [&](const std::vector<Vertex>& cycle) {
        std::vector<Vertex> canon = canonical_cycle(cycle);
        if (!best || canon.size() < best->cycle.size() ||
            (canon.size() == best->cycle.size() && canon < best->cycle)) {
            best = GirthResult{static_cast<int>(canon.size()), canon};
        }
    };

    for (Vertex root = 0; root < g.vertex_count(); ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[root] = 0;
        parent[root] = -1;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(v)) {
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if (w != parent[v] && dist[w] >= dist[v]) {
                    // Non-tree edge; the two root paths plus vw close a cycle
                    // through their lowest common ancestor.
                    std::vector<Vertex> pv, pw;
                    for (Vertex a = v; a != -1; a = parent[a]) pv.push_back(a);
                    for (Vertex a = w; a != -1; a = parent[a]) pw.push_back(a);
                    std::vector<char> on_pv(g.vertex_count(), 0);
                    for (Vertex a : pv) on_pv[a] = 1;
                    Vertex lca = -1;
                    for (Vertex a : pw)
                        if (on_pv[a]) {
                            lca = a;
                            break;
                        }
                    std::vector<Vertex> cycle;
                    for (Vertex a : pv) {
                        cycle.push_back(a);
                        if (a == lca) break;
                    }
                    std::vector<Vertex> back;
                    for (Vertex a : pw) {
                        if (a == lca) break;
                        back.push_back(a);
                    }
                    cycle.insert(cycle.end(), back.rbegin(), back.rend());
                    if (cycle.size() >= 3) consider(cycle);
                }
            }
        }
    }
    return best;
}

// ---- subgraphs, components ----------------------------------------------

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& s) {
    InducedSubgraph out;
    out.host_to_sub.assign(g.vertex_count(), -1);
    std::vector<Vertex> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v : sorted) {
        if (!g.has_vertex(v)) throw PreconditionError("induced_subgraph: vertex out of range");
        out.host_to_sub[v] = static_cast<int>(out.vertex_map.size());
        out.vertex_map.push_back(v);
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : g.edges())
        if (out.host_to_sub[e.u] >= 0 && out.host_to_sub[e.v] >= 0)
            edges.emplace_back(out.host_to_sub[e.u], out.host_to_sub[e.v]);
    out.graph = Graph::from_edges(static_cast<int>(out.vertex_map.size()), edges);
    return out;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
    std::vector<std::vector<Vertex>> comps;
    std::vector<char> seen(g.vertex_count(), 0);
    for (Vertex root = 0; root < g.vertex_count(); ++root) {
        if (seen[root]) continue;
        std::vector<Vertex> comp;
        std::deque<Vertex> queue{root};
        seen[root] = 1;
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// ---- helpers --------------------------------------------------------------

bool is_clique(const Graph& g, const std::vector<Vertex>& s) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (s[i] != s[j] && !g.has_edge(s[i], s[j])) return false;
    return true;
}

bool is_forest(const Graph& g) {
    return g.edge_count() == g.vertex_count() - static_cast<int>(components(g).size());
}

std::vector<Vertex> canonical_cycle(const std::vector<Vertex>& cycle) {
    const size_t k = cycle.size();
    if (k == 0) return {};
    size_t min_pos = 0;
    for (size_t i = 1; i < k; ++i)
        if (cycle[i] < cycle[min_pos]) min_pos = i;
    std::vector<Vertex> fwd(k), bwd(k);
    for (size_t i = 0; i < k; ++i) {
        fwd[i] = cycle[(min_pos + i) % k];
        bwd[i] = cycle[(min_pos + k - i) % k];
    }
    return std::min(fwd, bwd);
}

bool is_cycle_of(const Graph& g, const std::vector<Vertex>& cycle) {
    const size_t k = cycle.size();
    if (k < 3) return false;
    std::set<Vertex> uniq(cycle.begin(), cycle.end());
    if (uniq.size() != k) return false;
    for (size_t i = 0; i < k; ++i)
        if (!g.has_edge(cycle[i], cycle[(i + 1) % k])) return false;
    return true;
}

} // namespace locc
