#ifndef LOCC_GRAPH_HPP
#define LOCC_GRAPH_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace locc {

using Vertex = int;
using EdgeId = int;

/// Unordered edge stored with u < v.
struct Edge {
    Vertex u;
    Vertex v;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph with dense 0-based vertex indices.
///
/// Edges carry stable indices in lexicographic order over (u,v), u < v,
/// so GF(2) edge vectors and certificates are reproducible. Instances are
/// immutable after construction and safe to share across threads.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicate edges collapse;
    /// self-loops are rejected.
    static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    /// Edge ids parallel to neighbors(v).
    const std::vector<EdgeId>& incident_edges(Vertex v) const { return adj_eid_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }

    bool has_vertex(Vertex v) const { return v >= 0 && v < n_; }
    bool has_edge(Vertex u, Vertex v) const;
    /// Edge id for {u,v}, or -1 when not adjacent.
    EdgeId edge_id(Vertex u, Vertex v) const;

    /// Presentation-only vertex labels; empty when unlabeled.
    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::vector<EdgeId>> adj_eid_;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
};

/// Multi-source BFS distances from a vertex set S.
struct DistanceMap {
    static constexpr int kUnreachable = -1;

    std::vector<Vertex> sources;
    std::vector<int> dist; // kUnreachable when not reachable

    bool reachable(Vertex v) const { return dist[v] != kUnreachable; }
};

/// Ball of radius r/2 around a vertex set X, extracted as a subgraph of
/// the host together with the maps back into it.
///
/// A host vertex v lies in the ball iff min_{x in X} d(x,v) <= floor(r/2);
/// a host edge uv lies in it iff d(x,u) + d(x,v) < r for some x in X.
struct Ball {
    const Graph* host = nullptr;
    std::vector<Vertex> center;
    int radius_parameter = 0; // the integer r; ball radius is r/2

    Graph subgraph;
    std::vector<Vertex> vertex_map; // subgraph vertex -> host vertex
    std::vector<EdgeId> edge_map;   // subgraph edge -> host edge

    /// Host vertex -> subgraph vertex, or -1 when outside the ball.
    std::vector<int> host_to_sub;
};

// ---- parsing / emission ----------------------------------------------

/// Largest vertex count accepted from external graph6 input.
inline constexpr int kMaxGraph6Vertices = 100000;

/// Decodes one graph6 line (optional ">>graph6<<" header allowed).
/// Errors carry the byte offset of the offending character.
Graph parse_graph6(std::string_view text);

/// Encodes in standard graph6 (6-bit big-endian groups, value+63,
/// upper-triangle column order).
std::string emit_graph6(const Graph& g);

enum class EdgeListHeader { Auto, Require, Forbid };

/// Parses whitespace-separated "u v" lines; the first line may be an
/// "n m" header. In Auto mode the first line counts as a header when the
/// remaining line count equals m and every endpoint is < n.
Graph parse_edge_list(std::string_view text, EdgeListHeader header = EdgeListHeader::Auto);

std::string emit_edge_list(const Graph& g);

// ---- distances, balls, neighborhoods ---------------------------------

/// Exact multi-source BFS distances. S must be nonempty.
DistanceMap distances(const Graph& g, const std::vector<Vertex>& sources);

/// Ball of radius r/2 around X (nonempty), r >= 0.
Ball ball(const Graph& g, const std::vector<Vertex>& center, int r);

/// N^d[X] (closed = true) or N^d(X) (exactly distance d).
std::vector<Vertex> neighborhood(const Graph& g, const std::vector<Vertex>& x, int d,
                                 bool closed);

// ---- girth, subgraphs, components ------------------------------------

/// Shortest cycle length and one witness cycle; nullopt for forests.
struct GirthResult {
    int girth;
    std::vector<Vertex> cycle; // canonical: least vertex first, second < last
};
std::optional<GirthResult> girth(const Graph& g);

/// Induced subgraph on S plus the map from new indices to host vertices.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> vertex_map;    // new index -> host vertex
    std::vector<int> host_to_sub;      // host vertex -> new index or -1
};
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& s);

/// Connected components as sorted vertex sets, ordered by least vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);

// ---- small helpers shared across modules -----------------------------

/// True when S is a clique of g (every pair adjacent).
bool is_clique(const Graph& g, const std::vector<Vertex>& s);

/// True when g has no cycle (m = n - #components).
bool is_forest(const Graph& g);

/// A canonical form of a cycle given as a vertex sequence: rotated so the
/// least vertex comes first and oriented so the second vertex is smaller
/// than the last.
std::vector<Vertex> canonical_cycle(const std::vector<Vertex>& cycle);

/// Checks that `cycle` is a simple cycle of g (length >= 3, consecutive
/// vertices adjacent, all distinct).
bool is_cycle_of(const Graph& g, const std::vector<Vertex>& cycle);

} // namespace locc

#endif
