#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricgb/graph.hpp"

namespace toric {

enum class EdgeOrderingProvenance {
    RevlexDerived,        // from a vertex order via graded revlex
    LinearQuotientPeo,    // lex-sorted under a PEO-derived vertex order, verified
    LinearQuotientSearch, // found by exhaustive prefix search
    UserSupplied
};

std::string to_string(EdgeOrderingProvenance p);

/// A permutation of the edge indices: sequence[0] is the largest edge e_1.
struct EdgeOrdering {
    std::vector<int> sequence;
    EdgeOrderingProvenance provenance = EdgeOrderingProvenance::UserSupplied;
    /// The vertex permutation (largest vertex first, 0-based) behind a
    /// derived ordering.
    std::optional<std::vector<int>> vertex_order;
};

/// Edges sorted descending by their degree-2 vertex monomials under graded
/// reverse lexicographic order w.r.t. vertex_order (largest first, 0-based).
/// Distinct edges give distinct monomials, so there are no ties.
EdgeOrdering derive_edge_order(const Graph& g, const std::vector<int>& vertex_order);

/// Exponent vectors over a declared number of variables.
struct MonomialIdeal {
    int nvars = 0;
    std::vector<std::vector<int>> generators;
    bool minimalized = false;
};

/// Edge ideal I(G): one x_u*x_v generator per edge, in edge order.
MonomialIdeal edge_ideal(const Graph& g);

/// Removes generators divisible by another generator (and duplicates).
MonomialIdeal minimalize(MonomialIdeal ideal);

/// All k-fold products of generators, minimalized. k >= 1.
MonomialIdeal ideal_power(const MonomialIdeal& ideal, int k);

struct LinearQuotientCheck {
    bool ok = false;
    int failing_index = 0;  // 1-based position of the first failing generator
};

/// Checks the successive colon ideals (m_1..m_{i-1}) : (m_i) are generated in
/// degree 1, after minimalizing each quotient generator set. Requires
/// pairwise non-dividing generators of equal degree.
LinearQuotientCheck verify_linear_quotients(const std::vector<std::vector<int>>& mons);

struct PrefixGapFreeCheck {
    bool ok = false;
    int failing_prefix = 0;  // 1-based length of the first non-gap-free prefix
};

/// True iff every prefix subgraph {e_1..e_i} of the ordering is gap-free.
PrefixGapFreeCheck prefix_gap_free(const Graph& g, const EdgeOrdering& ord);

struct LinearQuotientSearchResult {
    std::optional<EdgeOrdering> ordering;
    /// Chordless cycle of the complement when no ordering can exist.
    std::optional<CycleWitness> obstruction;
};

/// Produces a verified linear quotient ordering of the edge monomials when
/// the complement is chordal: lex-descending under a PEO-derived vertex order
/// first, exhaustive prefix search as a fallback. NotFound (with the
/// chordless-cycle witness) when the complement is not chordal.
LinearQuotientSearchResult linear_quotient_ordering(const Graph& g);

/// Deterministic complete search for a linear quotient ordering of arbitrary
/// equigenerated monomials; nullopt when none exists.
std::optional<std::vector<int>> find_linear_quotient_permutation(
    const std::vector<std::vector<int>>& mons);

struct PowerReportEntry {
    int k = 0;
    bool pass = false;
    std::optional<int> failing_index;  // of the candidate ordering, when it failed
    bool used_fallback = false;
};

struct PowerLinearQuotientReport {
    bool applicable = false;  // complement chordal
    std::optional<CycleWitness> obstruction;
    std::vector<PowerReportEntry> entries;
    bool all_pass() const {
        if (!applicable) return false;
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
};

/// For k = 1..kmax: sorts the minimal generators of I(G)^k lex-descending
/// under the PEO-derived vertex order and verifies linear quotients, with the
/// exhaustive search as fallback before any k is reported failing.
PowerLinearQuotientReport power_linear_quotients(const Graph& g, int kmax);

}  // namespace toric
