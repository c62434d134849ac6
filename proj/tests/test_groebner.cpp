#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "toricgb/cli.hpp"
#include "toricgb/groebner.hpp"
#include "toricgb/linres.hpp"
#include "toricgb/toric.hpp"

using namespace toric;

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

std::set<Key> key_set(const std::vector<Binomial>& v) {
    std::set<Key> out;
    for (const Binomial& b : v) {
        Binomial c = sign_canonical(b);
        out.emplace(c.plus, c.minus);
    }
    return out;
}

Binomial bin_1based(int m, std::initializer_list<std::pair<int, int>> plus,
                    std::initializer_list<std::pair<int, int>> minus) {
    Binomial b;
    b.plus.assign(static_cast<size_t>(m), 0);
    b.minus.assign(static_cast<size_t>(m), 0);
    for (auto [e, c] : plus) b.plus[static_cast<size_t>(e - 1)] = c;
    for (auto [e, c] : minus) b.minus[static_cast<size_t>(e - 1)] = c;
    return b;
}

TermOrder natural_lex(int m) {
    std::vector<int> pri(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) pri[static_cast<size_t>(i)] = i;
    return TermOrder::lex(std::move(pri), OrderProvenance::UserSupplied);
}

// the nine published basis elements of the 6-vertex example, leading side first
std::vector<Binomial> published_gstar_rgb() {
    return {
        bin_1based(10, {{1, 1}, {10, 1}}, {{6, 1}, {8, 1}}),
        bin_1based(10, {{1, 1}, {5, 1}}, {{3, 1}, {4, 1}}),
        bin_1based(10, {{1, 1}, {9, 1}}, {{2, 1}, {8, 1}}),
        bin_1based(10, {{5, 1}, {10, 1}}, {{7, 1}, {9, 1}}),
        bin_1based(10, {{2, 1}, {7, 1}}, {{5, 1}, {6, 1}}),
        bin_1based(10, {{2, 1}, {10, 1}}, {{6, 1}, {9, 1}}),
        bin_1based(10, {{3, 1}, {4, 1}, {10, 1}}, {{5, 1}, {6, 1}, {8, 1}}),
        bin_1based(10, {{2, 1}, {5, 1}, {8, 1}}, {{3, 1}, {4, 1}, {9, 1}}),
        bin_1based(10, {{3, 1}, {4, 1}, {7, 1}, {9, 1}}, {{5, 2}, {6, 1}, {8, 1}}),
    };
}

TermOrder gstar_order(const Graph& g) {
    std::vector<int> vo{0, 1, 2, 3, 4, 5};
    EdgeOrdering ord = derive_edge_order(g, vo);
    return TermOrder::lex(ord.sequence, OrderProvenance::RevlexDerived, vo);
}

}  // namespace

TEST_CASE("TermOrder::lex compares by priority and rejects non-permutations") {
    TermOrder tau = natural_lex(3);
    CHECK(tau.compare({1, 0, 0}, {0, 5, 5}) > 0);
    CHECK(tau.compare({0, 1, 0}, {0, 0, 7}) > 0);
    CHECK(tau.compare({1, 1, 0}, {1, 1, 0}) == 0);
    CHECK(tau.less_edge(1, 0));
    CHECK_THROWS_AS(TermOrder::lex({0, 0, 2}, OrderProvenance::UserSupplied), Error);
}

TEST_CASE("normal_form examples") {
    Graph c4 = th::cycle_graph(4);
    TermOrder tau = natural_lex(4);
    Binomial b = orient(bin_1based(4, {{1, 1}, {3, 1}}, {{2, 1}, {4, 1}}), tau);

    CHECK_FALSE(normal_form(b, {b}, tau).has_value());

    // walking the cycle twice reduces to zero in two binomial steps
    Binomial twice = bin_1based(4, {{1, 2}, {3, 2}}, {{2, 2}, {4, 2}});
    CHECK_FALSE(normal_form(twice, {b}, tau).has_value());

    // something outside the ideal of b does not vanish
    Binomial other = bin_1based(4, {{2, 1}}, {{4, 1}});
    auto nf = normal_form(other, {b}, tau);
    CHECK(nf.has_value());
}

TEST_CASE("reduced basis of K3 is empty and of C4 is the single circuit") {
    Graph k3 = th::complete_graph(3);
    GroebnerBasis gb3 = reduced_groebner_basis(k3, enumerate_graver(k3), natural_lex(3));
    CHECK(gb3.elements.empty());
    SquarefreeReport sq3 = squarefree_report(gb3);
    CHECK(sq3.initial_squarefree);
    CHECK(sq3.doubly_squarefree);

    Graph c4 = th::cycle_graph(4);
    GroebnerBasis gb4 = reduced_groebner_basis(c4, enumerate_graver(c4), natural_lex(4));
    REQUIRE(gb4.elements.size() == 1);
    CHECK(sign_canonical(gb4.elements[0]) ==
          sign_canonical(bin_1based(4, {{1, 1}, {3, 1}}, {{2, 1}, {4, 1}})));
    SquarefreeReport sq4 = squarefree_report(gb4);
    CHECK(sq4.initial_squarefree);
    CHECK(sq4.doubly_squarefree);
    CHECK(is_circuit_basis(gb4, enumerate_circuits(c4)));
}

TEST_CASE("golden: the 6-vertex example reproduces the published reduced basis exactly") {
    Graph g = parse_graph(th::read_fixture("gstar.edges")).graph;
    TermOrder tau = gstar_order(g);
    // the derived order must list the edges exactly as published
    for (int i = 0; i < 10; ++i) CHECK(tau.priority[static_cast<size_t>(i)] == i);

    GroebnerBasis gb = reduced_groebner_basis(g, enumerate_graver(g), tau);
    REQUIRE(gb.elements.size() == 9);
    CHECK(key_set(gb.elements) == key_set(published_gstar_rgb()));

    // every element is stored leading-side-first
    for (const Binomial& b : gb.elements) CHECK(tau.compare(b.plus, b.minus) > 0);

    SquarefreeReport sq = squarefree_report(gb);
    CHECK(sq.initial_squarefree);
    CHECK_FALSE(sq.doubly_squarefree);
    REQUIRE(sq.offenders.size() == 1);
    CHECK(sq.offenders[0].trailing_side);
    CHECK(sq.offenders[0].edge == 4);  // y5
    CHECK(sign_canonical(sq.offenders[0].element) ==
          sign_canonical(bin_1based(10, {{3, 1}, {4, 1}, {7, 1}, {9, 1}},
                                    {{5, 2}, {6, 1}, {8, 1}})));

    CHECK(is_circuit_basis(gb, enumerate_circuits(g)));

    // every circuit reduces to zero against the published basis
    std::vector<Binomial> oriented;
    for (const Binomial& b : published_gstar_rgb()) oriented.push_back(orient(b, tau));
    for (const Binomial& c : enumerate_circuits(g))
        CHECK_FALSE(normal_form(c, oriented, tau).has_value());
}

TEST_CASE("reduced basis is invariant under generator shuffling") {
    Graph g = parse_graph(th::read_fixture("gstar.edges")).graph;
    TermOrder tau = gstar_order(g);
    std::vector<Binomial> grav = enumerate_graver(g);
    GroebnerBasis ref = reduced_groebner_basis(g, grav, tau);
    for (uint64_t seed : {1ull, 2ull, 3ull, 4ull, 5ull}) {
        Rng rng(seed);
        std::vector<Binomial> shuffled = grav;
        rng.shuffle(shuffled);
        GroebnerBasis gb = reduced_groebner_basis(g, shuffled, tau);
        CHECK(key_set(gb.elements) == key_set(ref.elements));
    }
}

TEST_CASE("basis elements are homogeneous and lie in the Graver basis, random orders") {
    Graph g = parse_graph(th::read_fixture("gstar.edges")).graph;
    std::vector<Binomial> grav = enumerate_graver(g);
    auto grav_keys = key_set(grav);
    Rng rng(2718);
    for (int t = 0; t < 12; ++t) {
        std::vector<int> pri(10);
        for (int i = 0; i < 10; ++i) pri[static_cast<size_t>(i)] = i;
        rng.shuffle(pri);
        TermOrder tau = TermOrder::lex(pri, OrderProvenance::UserSupplied);
        GroebnerBasis gb = reduced_groebner_basis(g, grav, tau);
        SelfCheckReport sc = buchberger_self_check(gb, grav);
        CHECK(sc.ok());
        for (const Binomial& b : gb.elements) {
            CHECK(b.degree_plus() == b.degree_minus());
            Binomial c = sign_canonical(b);
            CHECK(grav_keys.count({c.plus, c.minus}) == 1);
        }
    }
}

TEST_CASE("reduced_groebner_basis rejects foreign generators") {
    Graph c4 = th::cycle_graph(4);
    Binomial foreign = bin_1based(3, {{1, 1}}, {{2, 1}});
    CHECK_THROWS_WITH_AS(reduced_groebner_basis(c4, {foreign}, natural_lex(4)),
                         doctest::Contains("different graph"), Error);
    Binomial non_kernel = bin_1based(4, {{1, 1}}, {{2, 1}});
    CHECK_THROWS_WITH_AS(reduced_groebner_basis(c4, {non_kernel}, natural_lex(4)),
                         doctest::Contains("toric ideal"), Error);
}

TEST_CASE("squarefree_report requires a reduced basis") {
    GroebnerBasis gb;
    gb.order = natural_lex(4);
    gb.reduced = false;
    CHECK_THROWS_AS(squarefree_report(gb), Error);
}

TEST_CASE("is_circuit_basis flags a basis holding a non-circuit primitive binomial") {
    // two triangles joined by two vertex-disjoint 2-paths: the walk through
    // both paths is primitive of type (iii) but not support-minimal
    Graph g(8, {Edge(0, 1), Edge(1, 2), Edge(0, 2), Edge(3, 4), Edge(4, 5), Edge(3, 5),
                Edge(0, 6), Edge(6, 3), Edge(3, 7), Edge(7, 0)});
    auto grav = enumerate_graver(g);
    auto circ = enumerate_circuits(g);
    auto circ_keys = key_set(circ);
    std::vector<Binomial> extra;
    for (const Binomial& b : grav) {
        Binomial c = sign_canonical(b);
        if (!circ_keys.count({c.plus, c.minus})) extra.push_back(b);
    }
    REQUIRE(extra.size() == 1);  // exactly one non-circuit Graver element

    TermOrder tau = natural_lex(g.edge_count());
    GroebnerBasis honest = reduced_groebner_basis(g, grav, tau);
    CHECK(is_circuit_basis(honest, circ));

    GroebnerBasis doctored = honest;
    doctored.elements.push_back(orient(extra[0], tau));
    CHECK_FALSE(is_circuit_basis(doctored, circ));
}

TEST_CASE("mainlemma rejects walks of the wrong type and the excluded bridge") {
    // type (i) walk
    Graph c4 = th::cycle_graph(4);
    CHECK_THROWS_WITH_AS(
        mainlemma_witness(c4, th::walk_1based({1, 2, 3, 4, 1}), natural_lex(4), Edge(0, 1)),
        doctest::Contains("type (iii)"), Error);

    // bow-tie with a 2-path plus the direct bridge edge {1,4}
    Graph g = th::graph_1based(7, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6},
                                   {1, 7}, {7, 4}, {1, 4}});
    Walk bt = th::walk_1based({1, 2, 3, 1, 7, 4, 5, 6, 4, 7, 1});
    // priority: path edge {1,7} highest, bridge {1,4} lowest
    std::vector<int> pri{6, 0, 1, 2, 3, 4, 5, 7, 8};
    TermOrder tau = TermOrder::lex(pri, OrderProvenance::UserSupplied);
    CHECK_THROWS_WITH_AS(mainlemma_witness(g, bt, tau, Edge(0, 3)),
                         doctest::Contains("excluded bridge"), Error);

    // e_tilde not below the leading edge
    CHECK_THROWS_WITH_AS(mainlemma_witness(g, bt, tau, Edge(0, 6)),
                         doctest::Contains("leading edge"), Error);
}

TEST_CASE("mainlemma constructs a verified witness in case (a)") {
    // bow-tie: triangles {1,2,3},{4,5,6}, path 1-7-4, extra edge {2,5}
    Graph g = th::graph_1based(7, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6},
                                   {1, 7}, {7, 4}, {2, 5}});
    Walk bt = th::walk_1based({1, 2, 3, 1, 7, 4, 5, 6, 4, 7, 1});
    // leading edge {1,7} on the path; e_tilde = {2,5} far below
    std::vector<int> pri{6, 7, 0, 1, 2, 3, 4, 5, 8};
    TermOrder tau = TermOrder::lex(pri, OrderProvenance::UserSupplied);
    Walk gp = mainlemma_witness(g, bt, tau, Edge(1, 4));
    WalkClassification cls = classify_primitive_walk(g, gp);
    CHECK(walk_type(cls) != WalkType::OddCyclesWithPaths);
    Binomial a = orient(walk_binomial(g, gp), tau);
    Binomial b = orient(walk_binomial(g, bt), tau);
    for (size_t i = 0; i < a.plus.size(); ++i) CHECK(a.plus[i] <= b.plus[i]);
}

TEST_CASE("mainlemma constructs a verified witness in case (b)") {
    // leading edge on the first triangle, e_tilde incident to it
    Graph g = th::graph_1based(7, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6},
                                   {1, 7}, {7, 4}, {2, 5}});
    Walk bt = th::walk_1based({1, 2, 3, 1, 7, 4, 5, 6, 4, 7, 1});
    // leading edge {2,3} in C1; e_tilde = {2,5} shares vertex 2 with it
    std::vector<int> pri{1, 0, 2, 3, 4, 5, 6, 7, 8};
    TermOrder tau = TermOrder::lex(pri, OrderProvenance::UserSupplied);
    Walk gp = mainlemma_witness(g, bt, tau, Edge(1, 4));
    WalkClassification cls = classify_primitive_walk(g, gp);
    CHECK(walk_type(cls) != WalkType::OddCyclesWithPaths);
    Binomial a = orient(walk_binomial(g, gp), tau);
    Binomial b = orient(walk_binomial(g, bt), tau);
    for (size_t i = 0; i < a.plus.size(); ++i) CHECK(a.plus[i] <= b.plus[i]);
    CHECK(a != b);
}

TEST_CASE("mainlemma witnesses verify on sampled gap-free graphs") {
    Rng rng(606);
    int instances = 0;
    for (int t = 0; t < 15; ++t) {
        FamilyOptions fo;
        fo.n = 5 + rng.below(3);
        fo.seed = rng.next();
        fo.max_edges = 13;
        Graph g = generate_family(Family::GapFree, fo).graph;
        std::vector<int> vo(static_cast<size_t>(g.vertex_count()));
        for (int i = 0; i < g.vertex_count(); ++i) vo[static_cast<size_t>(i)] = i;
        Rng shuf(fo.seed ^ 0xF00Dull);
        shuf.shuffle(vo);
        EdgeOrdering ord = derive_edge_order(g, vo);
        TermOrder tau = TermOrder::lex(ord.sequence, OrderProvenance::RevlexDerived, vo);
        for (const auto& rec : enumerate_graver_walks(g)) {
            std::set<int> distinct(rec.walk.vertices.begin(), rec.walk.vertices.end() - 1);
            if (static_cast<int>(distinct.size()) == rec.walk.length()) continue;
            WalkClassification cls = classify_primitive_walk(g, rec.walk, false);
            if (walk_type(cls) != WalkType::OddCyclesWithPaths) continue;
            for (const MainLemmaCandidate& cand : mainlemma_candidates(g, cls, tau)) {
                ++instances;
                CHECK_NOTHROW((void)mainlemma_witness(g, rec.walk, tau, cand.e_tilde));
            }
        }
    }
    // the sample must actually exercise the lemma
    CHECK(instances > 0);
}

TEST_CASE("gap-free graphs: derived order gives squarefree initial ideals of circuits") {
    Rng rng(911);
    for (int t = 0; t < 20; ++t) {
        FamilyOptions fo;
        fo.n = 4 + rng.below(4);
        fo.seed = rng.next();
        fo.max_edges = 13;
        Graph g = generate_family(Family::GapFree, fo).graph;
        std::vector<int> vo(static_cast<size_t>(g.vertex_count()));
        for (int i = 0; i < g.vertex_count(); ++i) vo[static_cast<size_t>(i)] = i;
        EdgeOrdering ord = derive_edge_order(g, vo);
        TermOrder tau = TermOrder::lex(ord.sequence, OrderProvenance::RevlexDerived, vo);
        std::vector<Binomial> grav = enumerate_graver(g);
        GroebnerBasis gb = reduced_groebner_basis(g, grav, tau);
        SquarefreeReport sq = squarefree_report(gb);
        CHECK(sq.initial_squarefree);
        CHECK(is_circuit_basis(gb, enumerate_circuits(g)));
        // squarefree initial ideal found => normality's combinatorial criterion
        if (g.connected()) CHECK(odd_cycle_condition(g).holds);
    }
}

TEST_CASE("chordal-complement graphs: quotient-order bases are doubly squarefree") {
    Rng rng(1618);
    for (int t = 0; t < 20; ++t) {
        FamilyOptions fo;
        fo.n = 4 + rng.below(4);
        fo.seed = rng.next();
        fo.max_edges = 13;
        Graph g = generate_family(Family::ChordalComplement, fo).graph;
        LinearQuotientSearchResult lqr = linear_quotient_ordering(g);
        REQUIRE(lqr.ordering.has_value());
        std::vector<int> pri(lqr.ordering->sequence.rbegin(), lqr.ordering->sequence.rend());
        TermOrder tau =
            TermOrder::lex(pri, OrderProvenance::LinearQuotient, lqr.ordering->vertex_order);
        GroebnerBasis gb = reduced_groebner_basis(g, enumerate_graver(g), tau);
        CHECK(squarefree_report(gb).doubly_squarefree);
    }
}
