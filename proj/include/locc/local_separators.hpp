#ifndef LOCC_LOCAL_SEPARATORS_HPP
#define LOCC_LOCAL_SEPARATORS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "locc/cycle_enum.hpp"
#include "locc/graph.hpp"

namespace locc {

/// Locality radius: a finite r >= 0 or infinity.
struct Radius {
    int value = 0;     // ignored when infinite
    bool infinite = false;

    static Radius finite(int r) { return Radius{r, false}; }
    static Radius inf() { return Radius{0, true}; }
};

/// Partition of the edge boundary of X into r-local components: the
/// equivalence classes of the transitive closure of "first and last edge
/// of an r-local X-walk".
struct LocalComponents {
    std::vector<Vertex> x;
    Radius r;
    std::vector<EdgeId> boundary;               // sorted edge ids of the boundary
    std::vector<std::vector<EdgeId>> partition; // sorted parts, ordered by least edge

    int part_of(EdgeId e) const; // index into partition, or -1
};

/// Witness that X r-locally separates u and w with respect to v.
struct SeparatorWitness {
    Vertex u, w;          // distance exactly 2
    Vertex v;             // common neighbor, v in X
    std::vector<Vertex> x;
    int r;
};

/// Fullness report: a part is full when every vertex of X is incident to
/// one of its edges; X is tight when at least two parts are full.
struct TightReport {
    std::vector<Vertex> x;
    std::vector<bool> part_full; // parallel to LocalComponents::partition
    bool tight = false;
};

/// Edges of g with exactly one endpoint in X.
std::vector<EdgeId> edge_boundary(const Graph& g, const std::vector<Vertex>& x);

/// r-local components at X. Finite r unions the two boundary edges around
/// every arc of O - X over all cycles O of length <= r; r = infinity uses
/// componental cuts. X must be nonempty.
LocalComponents local_components(const Graph& g, const std::vector<Vertex>& x, Radius r,
                                 const CycleEnumLimits& limits = {});

bool is_local_separator(const Graph& g, const std::vector<Vertex>& x, Radius r);

/// Whether uv and vw lie in distinct r-local components at X. Requires
/// uv, vw edges, u and w nonadjacent, v in X, u and w not in X.
bool locally_separates(const Graph& g, const std::vector<Vertex>& x, Vertex u, Vertex w,
                       Vertex v, int r);

/// Greedy descent to an inclusion-minimal subset of X (still containing v)
/// that r-locally separates u and w: removal attempts run in increasing
/// vertex order and restart after each success.
std::vector<Vertex> minimize_separator(const Graph& g, const std::vector<Vertex>& x, Vertex u,
                                       Vertex w, Vertex v, int r);

struct MinimalLocalSeparator {
    std::vector<Vertex> x; // sorted
    SeparatorWitness witness;
};

struct SeparatorEnumLimits {
    int max_vertices_local = 10;
    int max_vertices_global = 12;
};

/// All inclusion-minimal r-local separators by exhaustive subset
/// enumeration over every witness triple, deduplicated by X (one witness
/// retained each), sorted by X.
std::vector<MinimalLocalSeparator> minimal_local_separators(
    const Graph& g, int r, const SeparatorEnumLimits& limits = {});

struct CliqueSeparatorVerdict {
    bool all_cliques = false;
    std::optional<MinimalLocalSeparator> counterexample;
};

/// Whether every minimal r-local separator is a clique.
CliqueSeparatorVerdict all_minimal_separators_cliques(const Graph& g, int r,
                                                      const SeparatorEnumLimits& limits = {});

/// All inclusion-minimal u--v separators over all nonadjacent pairs, by
/// subset enumeration; sorted, deduplicated.
std::vector<std::vector<Vertex>> global_minimal_separators(
    const Graph& g, const SeparatorEnumLimits& limits = {});

/// Dirac's criterion: all global minimal separators are cliques.
bool dirac_check(const Graph& g, const SeparatorEnumLimits& limits = {});

TightReport tight_report(const Graph& g, const std::vector<Vertex>& x, Radius r);

struct TightNoncliqueWitness {
    Graph graph;
    std::vector<Vertex> x;
    std::vector<std::vector<EdgeId>> full_parts;
    long long graphs_scanned = 0;
};

/// Scans a graph stream for the first r-locally chordal graph with a tight
/// non-clique r-local separator. `next` yields graphs until nullopt.
std::optional<TightNoncliqueWitness> search_tight_nonclique_witness(
    int r, const std::function<std::optional<Graph>()>& next);

/// Lemma check: a set that r-locally separates u and w with respect to v,
/// intersected with N^{floor(r/2)}[v], separates u and w in the r/2-ball
/// around v. Requires locally_separates(g,x,u,w,v,r).
bool lemma_local_to_ball_separator(const Graph& g, const std::vector<Vertex>& x, Vertex u,
                                   Vertex w, Vertex v, int r);

} // namespace locc

#endif
