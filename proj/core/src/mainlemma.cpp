#include <algorithm>
#include <set>

#include "toricgb/groebner.hpp"

namespace toric {

namespace {

// Bow-tie {C1, p, C2} inside a type-(iii) walk: cycles listed from their
// attachment vertices, path carries both endpoints (path.front() on C1,
// path.back() on C2).
struct BowTie {
    std::vector<int> c1, path, c2;
};

std::vector<std::pair<int, int>> cycle_edges(const std::vector<int>& c) {
    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i < c.size(); ++i) out.push_back({c[i], c[(i + 1) % c.size()]});
    return out;
}

bool cycle_has_edge(const std::vector<int>& c, const Edge& e) {
    for (auto [a, b] : cycle_edges(c))
        if (Edge(a, b) == e) return true;
    return false;
}

bool path_has_edge(const std::vector<int>& p, const Edge& e) {
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (Edge(p[i], p[i + 1]) == e) return true;
    return false;
}

bool contains_vertex(const std::vector<int>& vs, int v) {
    return std::find(vs.begin(), vs.end(), v) != vs.end();
}

std::vector<int> reversed(const std::vector<int>& v) { return {v.rbegin(), v.rend()}; }

// Leading edge of |walk| under tau.
Edge leading_edge(const Graph& g, const Walk& w, const TermOrder& tau) {
    int best = -1;
    for (int i = 0; i < w.length(); ++i) {
        auto [a, b] = w.step(i);
        int e = g.edge_index(a, b);
        if (best < 0 || tau.less_edge(best, e)) best = e;
    }
    return g.edge(best);
}

// All bow-ties of the decomposition that contain e, in deterministic order.
std::vector<BowTie> bowties_containing(const OddCyclePathShape& shape, const Edge& e,
                                       bool on_path) {
    std::vector<BowTie> out;
    size_t h = shape.cycles.size();
    std::set<std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>> seen;
    auto push = [&](std::vector<int> c1, std::vector<int> p, std::vector<int> c2) {
        if (seen.emplace(c1, p, c2).second) out.push_back({std::move(c1), std::move(p), std::move(c2)});
    };
    for (size_t i = 0; i < h; ++i) {
        size_t nxt = (i + 1) % h;
        if (on_path && path_has_edge(shape.paths[i], e)) {
            push(shape.cycles[i], shape.paths[i], shape.cycles[nxt]);
            push(shape.cycles[nxt], reversed(shape.paths[i]), shape.cycles[i]);
        }
        if (!on_path && cycle_has_edge(shape.cycles[i], e)) {
            push(shape.cycles[i], shape.paths[i], shape.cycles[nxt]);
            size_t prev = (i + h - 1) % h;
            push(shape.cycles[i], reversed(shape.paths[prev]), shape.cycles[prev]);
        }
    }
    return out;
}

struct LemmaContext {
    const Graph& g;
    Walk walk;               // the rotated walk of the classification
    OddCyclePathShape shape;
    Edge e;                  // leading edge
    int8_t black = 0;        // parity color of e
    ParityColoring colors;
};

int8_t edge_color(const LemmaContext& ctx, int u, int v) {
    int idx = ctx.g.edge_index(u, v);
    return ctx.colors.color_by_edge[static_cast<size_t>(idx)];
}

// Path from c[i] to c[0] along the cycle, in the direction whose first edge
// has the requested color. 1-based lemma index i corresponds to c[i-1].
std::vector<int> cycle_walk_first_color(const LemmaContext& ctx, const std::vector<int>& c,
                                        size_t i0, int8_t color) {
    size_t len = c.size();
    size_t up = (i0 + 1) % len, down = (i0 + len - 1) % len;
    bool up_match = edge_color(ctx, c[i0], c[up]) == color;
    bool down_match = edge_color(ctx, c[i0], c[down]) == color;
    if (up_match == down_match)
        throw Error("mainlemma: cycle edges at the chosen vertex are not two-colored");
    std::vector<int> path{c[i0]};
    size_t cur = i0;
    while (cur != 0) {
        cur = up_match ? (cur + 1) % len : (cur + len - 1) % len;
        path.push_back(c[cur]);
    }
    return path;
}

// w': from c2[0] = v'_1 to c2[j-1] = v'_j, last edge of the requested color;
// j == 1 uses the color of the final path edge instead (full cycle when that
// edge is not black, empty path when it is).
std::vector<int> build_w_prime(const LemmaContext& ctx, const BowTie& bt, size_t j0) {
    const std::vector<int>& c2 = bt.c2;
    size_t len = c2.size();
    if (j0 == 0) {
        const auto& p = bt.path;
        int8_t last = edge_color(ctx, p[p.size() - 2], p.back());
        if (last != ctx.black) {
            std::vector<int> full{c2.begin(), c2.end()};
            full.push_back(c2[0]);
            return full;  // the whole cycle C2
        }
        return {c2[0]};  // empty path at v'_1
    }
    // ascending direction ends with edge {c2[j0-1], c2[j0]}; descending with
    // {c2[j0+1], c2[j0]}
    bool asc_match = edge_color(ctx, c2[j0 - 1], c2[j0]) == ctx.black;
    bool desc_match = edge_color(ctx, c2[(j0 + 1) % len], c2[j0]) == ctx.black;
    if (asc_match == desc_match)
        throw Error("mainlemma: cycle edges at the chosen vertex are not two-colored");
    std::vector<int> path{c2[0]};
    if (asc_match) {
        for (size_t k = 1; k <= j0; ++k) path.push_back(c2[k]);
    } else {
        for (size_t k = len - 1; k >= j0; --k) {
            path.push_back(c2[k]);
            if (k == j0) break;
        }
    }
    return path;
}

void append_tail(std::vector<int>& seq, const std::vector<int>& part) {
    for (size_t i = 1; i < part.size(); ++i) seq.push_back(part[i]);
}

size_t index_in(const std::vector<int>& c, int v) {
    auto it = std::find(c.begin(), c.end(), v);
    if (it == c.end()) throw Error("mainlemma: vertex not on the expected cycle");
    return static_cast<size_t>(it - c.begin());
}

Walk construct_case_a(const LemmaContext& ctx, const BowTie& bt, const Edge& e_tilde) {
    // endpoints: one on C1 (index i != 1), one on C2
    int vi = contains_vertex(bt.c1, e_tilde.u) ? e_tilde.u : e_tilde.v;
    int vj = e_tilde.other(vi);
    size_t i0 = index_in(bt.c1, vi), j0 = index_in(bt.c2, vj);
    if (i0 == 0) throw Error("mainlemma: case (a) requires the C1 endpoint away from the path");

    std::vector<int> w = cycle_walk_first_color(ctx, bt.c1, i0, ctx.black);
    std::vector<int> wp = build_w_prime(ctx, bt, j0);

    std::vector<int> seq{vj, vi};
    append_tail(seq, w);        // v_i ... v_1
    append_tail(seq, bt.path);  // v_1 ... v'_1
    append_tail(seq, wp);       // v'_1 ... v'_j
    return Walk{std::move(seq)};
}

Walk construct_case_b(const LemmaContext& ctx, const BowTie& bt, const Edge& e_tilde) {
    const std::vector<int>& c1 = bt.c1;
    size_t len = c1.size();
    // locate e = {v_i, v_{i+1}} along C1's traversal direction
    size_t i0 = len;  // 0-based index of v_i
    for (size_t k = 0; k < len; ++k) {
        if (Edge(c1[k], c1[(k + 1) % len]) == ctx.e) {
            i0 = k;
            break;
        }
    }
    if (i0 == len) throw Error("mainlemma: leading edge not on C1");
    int vi = c1[i0], vip1 = c1[(i0 + 1) % len];

    bool tilde_at_vi = e_tilde.contains(vi);
    bool tilde_at_vip1 = e_tilde.contains(vip1);
    if (tilde_at_vi == tilde_at_vip1)
        throw Error("mainlemma: case (b) requires e_tilde to meet exactly one endpoint of e");
    int vj = e_tilde.other(tilde_at_vi ? vi : vip1);
    size_t j0 = index_in(bt.c2, vj);
    std::vector<int> wp = build_w_prime(ctx, bt, j0);

    std::vector<int> seq;
    if (tilde_at_vi) {
        // w: v_{i+1} -> v_{i+2} -> ... -> v_1 (ascending; empty when v_{i+1} = v_1)
        seq.push_back(vip1);
        for (size_t k = (i0 + 2) % len; seq.back() != c1[0]; k = (k + 1) % len) {
            if (seq.size() > len + 1) throw Error("mainlemma: malformed cycle walk");
            seq.push_back(c1[k % len]);
        }
        append_tail(seq, bt.path);
        append_tail(seq, wp);
        seq.push_back(vi);    // via e_tilde
        seq.push_back(vip1);  // via e
    } else {
        // w: v_i -> v_{i-1} -> ... -> v_1 (descending; empty when v_i = v_1)
        seq.push_back(vi);
        for (size_t k = (i0 + len - 1) % len; seq.back() != c1[0]; k = (k + len - 1) % len) {
            if (seq.size() > len + 1) throw Error("mainlemma: malformed cycle walk");
            seq.push_back(c1[k]);
        }
        append_tail(seq, bt.path);
        append_tail(seq, wp);
        seq.push_back(vip1);  // via e_tilde
        seq.push_back(vi);    // via e
    }
    return Walk{std::move(seq)};
}

}  // namespace

std::vector<MainLemmaCandidate> mainlemma_candidates(const Graph& g, const Walk& walk,
                                                     const TermOrder& tau) {
    return mainlemma_candidates(g, classify_primitive_walk(g, walk), tau);
}

std::vector<MainLemmaCandidate> mainlemma_candidates(const Graph& g,
                                                     const WalkClassification& cls,
                                                     const TermOrder& tau) {
    std::vector<MainLemmaCandidate> out;
    if (walk_type(cls) != WalkType::OddCyclesWithPaths) return out;
    const auto& shape = std::get<OddCyclePathShape>(cls.shape);
    Edge e = leading_edge(g, cls.rotated, tau);
    int e_idx = g.edge_index(e.u, e.v);

    std::set<std::pair<Edge, bool>> seen;
    auto consider = [&](const BowTie& bt, bool case_a) {
        Edge bridge(bt.path.front(), bt.path.back());
        for (int x : bt.c1) {
            for (int y : bt.c2) {
                if (!g.adjacent(x, y)) continue;
                Edge cand(x, y);
                int ci = g.edge_index(cand.u, cand.v);
                if (!tau.less_edge(ci, e_idx)) continue;
                if (cand == bridge) continue;
                if (case_a) {
                    if (index_in(bt.c1, x) == 0 && index_in(bt.c2, y) == 0) continue;
                } else {
                    // case (b): e_tilde must meet exactly one endpoint of e
                    bool at_u = cand.contains(e.u), at_v = cand.contains(e.v);
                    if (at_u == at_v) continue;
                }
                if (seen.emplace(cand, case_a).second) out.push_back({cand, case_a});
            }
        }
    };

    bool on_path = false, on_cycle = false;
    for (const auto& p : shape.paths)
        if (path_has_edge(p, e)) on_path = true;
    for (const auto& c : shape.cycles)
        if (cycle_has_edge(c, e)) on_cycle = true;
    if (on_path)
        for (const BowTie& bt : bowties_containing(shape, e, true)) consider(bt, true);
    if (on_cycle)
        for (const BowTie& bt : bowties_containing(shape, e, false)) consider(bt, false);
    return out;
}

Walk mainlemma_witness(const Graph& g, const Walk& walk, const TermOrder& tau, Edge e_tilde) {
    WalkClassification cls = classify_primitive_walk(g, walk);
    if (walk_type(cls) != WalkType::OddCyclesWithPaths)
        throw Error("mainlemma: walk is not of type (iii)");
    if (g.edge_index(e_tilde.u, e_tilde.v) < 0)
        throw Error("mainlemma: e_tilde is not an edge of the graph");

    LemmaContext ctx{g, cls.rotated, std::get<OddCyclePathShape>(cls.shape), Edge{}, 0,
                     parity_coloring(g, cls.rotated)};
    ctx.e = leading_edge(g, ctx.walk, tau);
    int e_idx = g.edge_index(ctx.e.u, ctx.e.v);
    int t_idx = g.edge_index(e_tilde.u, e_tilde.v);
    if (t_idx == e_idx) throw Error("mainlemma: e_tilde equals the leading edge");
    if (!tau.less_edge(t_idx, e_idx))
        throw Error("mainlemma: e_tilde is not below the leading edge in the term order");
    ctx.black = ctx.colors.color_by_edge[static_cast<size_t>(e_idx)];

    bool on_path = false, on_cycle = false;
    for (const auto& p : ctx.shape.paths)
        if (path_has_edge(p, ctx.e)) on_path = true;
    for (const auto& c : ctx.shape.cycles)
        if (cycle_has_edge(c, ctx.e)) on_cycle = true;

    bool saw_excluded_bridge = false, saw_cycle_match = false;
    std::optional<Walk> gamma_prime;

    auto endpoints_split = [&](const BowTie& bt) {
        // exactly one endpoint on each cycle
        bool u1 = contains_vertex(bt.c1, e_tilde.u), v1 = contains_vertex(bt.c1, e_tilde.v);
        bool u2 = contains_vertex(bt.c2, e_tilde.u), v2 = contains_vertex(bt.c2, e_tilde.v);
        return (u1 && v2 && !v1 && !u2) || (v1 && u2 && !u1 && !v2);
    };

    if (on_path) {
        for (const BowTie& bt : bowties_containing(ctx.shape, ctx.e, true)) {
            if (!path_has_edge(bt.path, ctx.e)) continue;
            if (!endpoints_split(bt)) continue;
            saw_cycle_match = true;
            Edge bridge(bt.path.front(), bt.path.back());
            if (e_tilde == bridge) {
                saw_excluded_bridge = true;
                continue;
            }
            int on_c1 = contains_vertex(bt.c1, e_tilde.u) ? e_tilde.u : e_tilde.v;
            if (index_in(bt.c1, on_c1) == 0) continue;  // the swapped orientation handles this
            gamma_prime = construct_case_a(ctx, bt, e_tilde);
            break;
        }
    }
    if (!gamma_prime && on_cycle) {
        for (const BowTie& bt : bowties_containing(ctx.shape, ctx.e, false)) {
            if (!cycle_has_edge(bt.c1, ctx.e)) continue;
            if (!endpoints_split(bt)) continue;
            bool at_u = e_tilde.contains(ctx.e.u), at_v = e_tilde.contains(ctx.e.v);
            if (at_u == at_v) continue;
            saw_cycle_match = true;
            Edge bridge(bt.path.front(), bt.path.back());
            if (e_tilde == bridge) {
                saw_excluded_bridge = true;
                continue;
            }
            gamma_prime = construct_case_b(ctx, bt, e_tilde);
            break;
        }
    }

    if (!gamma_prime) {
        if (saw_excluded_bridge)
            throw Error("mainlemma: e_tilde is the excluded bridge {v_1, v'_1}");
        if (saw_cycle_match)
            throw Error("mainlemma: no admissible bow-tie orientation for e_tilde");
        throw Error("mainlemma: e_tilde does not join the two cycles of a bow-tie "
                    "containing the leading edge");
    }

    // postconditions: even closed primitive walk of type (i)/(ii), leading
    // term divides the input's, and the binomials differ
    const Walk& gp = *gamma_prime;
    if (!gp.closed() || !gp.even() || !is_walk_of(g, gp))
        throw Error("mainlemma: constructed walk is not a closed even walk of the graph");
    WalkClassification cls2 = classify_primitive_walk(g, gp);
    if (walk_type(cls2) == WalkType::OddCyclesWithPaths)
        throw Error("mainlemma: constructed walk is not of type (i) or (ii)");
    Binomial b_in = orient(walk_binomial(g, walk), tau);
    Binomial b_out = orient(walk_binomial(g, gp), tau);
    for (size_t k = 0; k < b_out.plus.size(); ++k)
        if (b_out.plus[k] > b_in.plus[k])
            throw Error("mainlemma: leading term of the constructed walk does not divide "
                        "the input's");
    if (b_out.plus == b_in.plus && b_out.minus == b_in.minus)
        throw Error("mainlemma: constructed walk reproduces the input binomial");
    return gp;
}

}  // namespace toric
