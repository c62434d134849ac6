#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "toricgb/graph.hpp"

namespace toric {

/// Walk given by its vertex sequence v_0, ..., v_L (closed iff v_L == v_0).
struct Walk {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    bool closed() const { return vertices.size() >= 2 && vertices.front() == vertices.back(); }
    bool even() const { return length() % 2 == 0; }
    std::pair<int, int> step(int i) const {
        return {vertices[static_cast<size_t>(i)], vertices[static_cast<size_t>(i) + 1]};
    }
};

/// Checks every step of w is an edge of g.
bool is_walk_of(const Graph& g, const Walk& w);

/// Pure-difference binomial y^plus - y^minus over the edge variables of one
/// graph; exponent vectors of length m. plus is the leading side only after
/// a term order has been applied.
struct Binomial {
    std::vector<int> plus, minus;

    int degree_plus() const;
    int degree_minus() const;
    bool operator==(const Binomial& o) const = default;
};

/// Vertex-degree balance: sum of plus-weighted incidences equals the
/// minus-weighted ones (membership in the toric ideal).
bool kernel_member(const Graph& g, const Binomial& b);

/// Sign normalization used for set semantics when no term order is in play:
/// the lexicographically larger exponent vector (by edge index) becomes plus.
Binomial sign_canonical(Binomial b);

/// 1-based pretty form, e.g. "y3*y4*y7*y9 - y5^2*y6*y8".
std::string pretty(const Binomial& b);

/// b_Gamma of a closed even walk: odd-position edges on the plus side,
/// even-position edges on the minus side, then common factors cancelled.
/// Throws when the walk is not closed, not even, uses a non-edge, or the
/// two sides cancel completely.
Binomial walk_binomial(const Graph& g, const Walk& w);

/// Circuits per the walk classification: even cycles, two odd cycles sharing
/// exactly one vertex, and bow-ties (vertex-disjoint odd cycles joined by a
/// path whose interior avoids both cycles). Sign-normalized, deduplicated,
/// sorted.
std::vector<Binomial> enumerate_circuits(const Graph& g);

struct GraverOptions {
    int max_edges = 14;  // refuse larger inputs by name
};

struct PrimitiveWalkRecord {
    Binomial binomial;  // sign-canonical
    Walk walk;          // a witness walk realizing it
};

/// Graver basis: binomials of primitive walks, computed by enumerating closed
/// even walks using each edge at most twice and filtering by primitivity.
std::vector<PrimitiveWalkRecord> enumerate_graver_walks(const Graph& g,
                                                        const GraverOptions& opt = {});
std::vector<Binomial> enumerate_graver(const Graph& g, const GraverOptions& opt = {});

struct PrimitivityResult {
    bool primitive = false;
    /// A nonzero kernel vector w != +-(plus - minus) with w+ <= plus and
    /// w- <= minus, when one exists.
    std::optional<Binomial> smaller;
};

/// Conformal minimality by brute-force enumeration of kernel vectors with
/// coordinates in [-minus_i, plus_i]. Rejects non-kernel input.
PrimitivityResult check_primitive(const Graph& g, const Binomial& b);
bool is_primitive(const Graph& g, const Binomial& b);

/// Two-coloring of the edges of |walk| by position parity. Fails (returning
/// the offending edge) iff some edge occupies both an odd and an even
/// position; failure certifies non-primitivity.
struct ParityColoring {
    bool ok = false;
    int conflicting_edge = -1;          // when !ok
    std::vector<int8_t> color_by_edge;  // -1 unused, 0 odd positions, 1 even positions
};
ParityColoring parity_coloring(const Graph& g, const Walk& w);

// Shapes of primitive walks. Cycles are vertex lists without the repeated
// closing vertex, starting at their attachment vertex and following the walk
// direction; paths carry both endpoints.
struct EvenCycleShape {
    std::vector<int> cycle;
};
struct TwoOddCyclesShape {
    std::vector<int> c1, c2;  // both start at the shared vertex
    int shared_vertex = -1;
};
struct OddCyclePathShape {
    std::vector<std::vector<int>> cycles;  // h >= 2, cyclically adjacent ones disjoint
    std::vector<std::vector<int>> paths;   // paths[i] joins cycles[i] to cycles[(i+1)%h]
    bool degenerate_bowtie = false;        // h == 2 with paths[1] == reverse(paths[0])
};
using WalkShape = std::variant<EvenCycleShape, TwoOddCyclesShape, OddCyclePathShape>;

struct WalkClassification {
    WalkShape shape;
    Walk rotated;  // the rotation of the input that realizes the decomposition
};

enum class WalkType { EvenCycle, TwoOddCyclesOneVertex, OddCyclesWithPaths };
WalkType walk_type(const WalkClassification& c);

/// Classifies a primitive closed even walk as an even cycle, two odd cycles
/// with one common vertex, or an odd-cycle/path chain; the decomposition is
/// re-validated before returning. Non-primitive walks are rejected with the
/// conformally smaller kernel vector as evidence. Callers holding walks that
/// are already certified primitive (e.g. from enumerate_graver_walks) may
/// skip the recheck.
WalkClassification classify_primitive_walk(const Graph& g, const Walk& w,
                                           bool recheck_primitivity = true);

}  // namespace toric
