#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricgb/toric.hpp"

namespace toric {

enum class OrderProvenance { RevlexDerived, LinearQuotient, UserSupplied };

std::string to_string(OrderProvenance p);

/// Pure lexicographic term order on the edge variables, given by a priority
/// permutation (highest variable first). Degree is never compared.
struct TermOrder {
    std::vector<int> priority;  // edge indices, highest first
    OrderProvenance provenance = OrderProvenance::UserSupplied;
    /// Vertex permutation the order was derived from, when applicable
    /// (highest vertex first, 0-based).
    std::optional<std::vector<int>> vertex_order;

    /// -1, 0, +1 comparison of exponent vectors.
    int compare(const std::vector<int>& a, const std::vector<int>& b) const;
    bool less(const std::vector<int>& a, const std::vector<int>& b) const {
        return compare(a, b) < 0;
    }
    /// y_{e1} < y_{e2} as single variables.
    bool less_edge(int e1, int e2) const {
        return rank_of(e1) > rank_of(e2);  // larger rank = lower priority
    }
    int rank_of(int edge) const { return rank_[static_cast<size_t>(edge)]; }

    static TermOrder lex(std::vector<int> priority, OrderProvenance prov,
                         std::optional<std::vector<int>> vertex_order = std::nullopt);

private:
    std::vector<int> rank_;  // edge -> position in priority (0 = highest)
};

/// Orients b so that plus is the tau-leading side. Throws on plus == minus.
Binomial orient(Binomial b, const TermOrder& tau);

struct GroebnerBasis {
    std::vector<Binomial> elements;  // each stored leading-side-first
    TermOrder order;
    bool reduced = false;
};

/// The unique reduced Groebner basis of the ideal generated by `gens` with
/// respect to tau. S-pair processing is specialized to binomials: the
/// S-polynomial of two binomials is a binomial, and normal forms of binomials
/// are binomials or zero. Generators must satisfy kernel membership for g.
GroebnerBasis reduced_groebner_basis(const Graph& g, std::vector<Binomial> gens,
                                     const TermOrder& tau);

/// Remainder of b on division by `basis` (elements leading-side-first):
/// nullopt encodes zero. Deterministic: first applicable reducer in basis
/// order, leading side reduced to completion before the trailing side.
std::optional<Binomial> normal_form(const Binomial& b, const std::vector<Binomial>& basis,
                                    const TermOrder& tau);

struct SquarefreeOffender {
    Binomial element;
    bool trailing_side = false;  // side carrying the exponent >= 2
    int edge = -1;
};

struct SquarefreeReport {
    bool initial_squarefree = false;
    bool doubly_squarefree = false;
    std::vector<SquarefreeOffender> offenders;
};

/// Requires a reduced basis. initial_squarefree iff every leading exponent
/// vector is 0/1-valued; doubly_squarefree additionally on trailing side.
SquarefreeReport squarefree_report(const GroebnerBasis& gb);

/// True iff every element of gb, sign-normalized, lies in `circuits`.
bool is_circuit_basis(const GroebnerBasis& gb, const std::vector<Binomial>& circuits);

struct SelfCheckReport {
    bool spairs_reduce_to_zero = false;
    bool graver_reduces_to_zero = false;
    bool ok() const { return spairs_reduce_to_zero && graver_reduces_to_zero; }
};

/// Engine-independent Buchberger certificate: every S-pair of the basis has
/// normal form zero, and every element of `graver` reduces to zero.
SelfCheckReport buchberger_self_check(const GroebnerBasis& gb,
                                      const std::vector<Binomial>& graver);

/// Hypothesis instance for the bow-tie reduction lemma: an edge of G joining
/// the two cycles of the bow-tie containing the leading edge of |walk|.
struct MainLemmaCandidate {
    Edge e_tilde;
    bool case_a = false;  // leading edge on the connecting path (vs. on a cycle)
};

/// All edges of g satisfying the lemma hypotheses for this type-(iii) walk
/// under tau.
std::vector<MainLemmaCandidate> mainlemma_candidates(const Graph& g, const Walk& walk,
                                                     const TermOrder& tau);
std::vector<MainLemmaCandidate> mainlemma_candidates(const Graph& g,
                                                     const WalkClassification& cls,
                                                     const TermOrder& tau);

/// Constructs, from a primitive type-(iii) walk and a qualifying edge e_tilde,
/// an even closed walk of type (i) or (ii) whose leading term divides the
/// input's, certifying that the input binomial is not in the reduced basis.
/// All hypotheses and both postconditions are verified; violations throw.
Walk mainlemma_witness(const Graph& g, const Walk& walk, const TermOrder& tau, Edge e_tilde);

}  // namespace toric
