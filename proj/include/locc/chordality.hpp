#ifndef LOCC_CHORDALITY_HPP
#define LOCC_CHORDALITY_HPP

#include <optional>
#include <variant>
#include <vector>

#include "locc/graph.hpp"

namespace locc {

/// Perfect elimination ordering: for each order[i], its neighbors later in
/// the order form a clique.
struct EliminationOrder {
    std::vector<Vertex> order;
};

/// Induced cycle of length >= 4, stored canonically (least vertex first,
/// second vertex smaller than last).
struct Hole {
    std::vector<Vertex> cycle;
};

/// Induced wheel: hub adjacent to every vertex of an induced rim cycle of
/// length >= 4, hub not on the rim.
struct WheelWitness {
    Vertex hub;
    Hole rim;
};

/// Validity checks for the certificate types above.
bool verify_peo(const Graph& g, const EliminationOrder& peo);
bool verify_hole(const Graph& g, const Hole& hole);
bool verify_wheel(const Graph& g, const WheelWitness& wheel);

/// Either a verified PEO (chordal) or a verified hole (not chordal).
/// Recognition is maximum cardinality search; the hole comes from
/// chordless-path completion starting at the violating vertex.
std::variant<EliminationOrder, Hole> chordality_certificate(const Graph& g);

bool is_chordal(const Graph& g);

/// Lexicographically least hole of length in [4, r], or nullopt when g is
/// r-chordal. Requires r >= 3.
std::optional<Hole> find_short_hole(const Graph& g, int r);

/// Least induced wheel, found through non-chordal open neighborhoods:
/// g contains an induced W_n (n >= 4) iff G[N(v)] is non-chordal for some
/// hub v, and the hole there is the rim.
std::optional<WheelWitness> find_induced_wheel(const Graph& g);

enum class LocalChordalityStrategy { Direct, Theorem1 };

/// Outcome of an r-local chordality check. On failure exactly one witness
/// field is set: Direct returns a hole inside the ball around
/// failing_center; Theorem1 returns either a short hole of g or a wheel.
struct LocalChordalityResult {
    bool locally_chordal = false;
    std::optional<Vertex> failing_center;           // Direct only
    std::optional<std::vector<Vertex>> ball_vertices; // Direct only: ball around center
    std::optional<Hole> hole;                       // in ball (Direct) or in g (Theorem1)
    std::optional<WheelWitness> wheel;              // Theorem1 only
};

/// Checks that every ball of radius r/2 is chordal. Requires r >= 3.
LocalChordalityResult is_r_locally_chordal(const Graph& g, int r,
                                           LocalChordalityStrategy strategy);

/// True iff every ball of radius r/2 is a forest; equals girth(g) > r.
bool is_r_locally_acyclic(const Graph& g, int r);

} // namespace locc

#endif
