#ifndef LOCC_CYCLESPACE_HPP
#define LOCC_CYCLESPACE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "locc/chordality.hpp"
#include "locc/graph.hpp"

namespace locc {

/// GF(2) vector indexed by the host graph's edges; addition is symmetric
/// difference. Bits are packed into 64-bit words.
class EdgeVector {
public:
    EdgeVector() = default;
    explicit EdgeVector(int edge_count) : m_(edge_count), words_((edge_count + 63) / 64, 0) {}

    static EdgeVector from_edges(const Graph& g, const std::vector<EdgeId>& edges);
    /// Edge set of a cycle given as a vertex sequence.
    static EdgeVector from_cycle(const Graph& g, const std::vector<Vertex>& cycle);

    int size() const { return m_; }
    bool test(EdgeId e) const { return (words_[e >> 6] >> (e & 63)) & 1; }
    void set(EdgeId e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
    void flip(EdgeId e) { words_[e >> 6] ^= std::uint64_t{1} << (e & 63); }
    bool empty() const;
    int popcount() const;
    /// Lowest set edge index, or -1 when empty.
    int lowest_set() const;

    EdgeVector& operator^=(const EdgeVector& o);
    friend EdgeVector operator^(EdgeVector a, const EdgeVector& b) { return a ^= b; }
    friend bool operator==(const EdgeVector&, const EdgeVector&) = default;

    std::vector<EdgeId> edge_ids() const;

    /// True iff every vertex of g is incident to an even number of set
    /// edges, i.e. the vector lies in the binary cycle space.
    bool even_degrees(const Graph& g) const;

private:
    int m_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Incrementally reduced GF(2) basis over edge vectors. Each basis row
/// remembers which inserted generators combine to it, so span membership
/// queries can return the witnessing combination.
class Gf2Span {
public:
    explicit Gf2Span(int edge_count) : m_(edge_count) {}

    /// Reduces v against the basis; if independent, stores it tagged with
    /// generator_id. Returns true when the vector enlarged the span.
    bool add(const EdgeVector& v, int generator_id);

    int rank() const { return static_cast<int>(rows_.size()); }

    /// Generator ids whose XOR equals v, or nullopt when v is outside the
    /// span. Ids are returned sorted.
    std::optional<std::vector<int>> express(const EdgeVector& v) const;

    bool contains(const EdgeVector& v) const { return express(v).has_value(); }

private:
    struct Row {
        EdgeVector vec;
        int pivot;
        std::vector<int> combo; // sorted generator ids
    };
    int m_;
    std::vector<Row> rows_;
};

struct Triangle {
    std::array<Vertex, 3> v; // sorted ascending
    friend bool operator==(const Triangle&, const Triangle&) = default;
    friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

using TriangleSet = std::vector<Triangle>;

EdgeVector triangle_vector(const Graph& g, const Triangle& t);

/// All triangles of g in lexicographic order.
TriangleSet triangles(const Graph& g);

/// Fundamental cycle basis with respect to a BFS forest.
struct CycleBasis {
    std::vector<EdgeId> forest_edges;
    std::vector<EdgeId> non_forest_edges;   // parallel to vectors
    std::vector<EdgeVector> vectors;        // one cycle per non-forest edge
};
CycleBasis fundamental_basis(const Graph& g);

/// Triangle subset whose GF(2) sum is z, or nullopt when z is outside the
/// triangle span. z must have even degree at every vertex.
std::optional<TriangleSet> express_in_triangles(const Graph& g, const EdgeVector& z);

/// Constructive decomposition of a cycle into |O|-2 triangles by repeated
/// chord splitting; when some recursion step meets a chordless cycle of
/// length >= 4 that hole is returned instead.
std::variant<TriangleSet, Hole> chord_split_decomposition(const Graph& g,
                                                          const std::vector<Vertex>& cycle,
                                                          int r);

/// Enumeration caps for short_cycles_generated_by_triangles.
struct ShortCycleCheckLimits {
    int max_vertices = 12;
    int max_r = 10;
};

struct ShortCycleGenerationResult {
    bool all_generated = false;
    std::optional<std::vector<Vertex>> witness_cycle; // first non-generated cycle
};

/// True iff every cycle of length <= r lies in the GF(2) span of the
/// triangles. Enumerates all short cycles; guarded by `limits`.
ShortCycleGenerationResult short_cycles_generated_by_triangles(
    const Graph& g, int r, const ShortCycleCheckLimits& limits = {});

/// Chordality via the cycle-space characterization: wheel-free and every
/// fundamental basis vector lies in the triangle span.
bool chordal_via_cyclespace(const Graph& g);

} // namespace locc

#endif
