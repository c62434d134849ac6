#include "toricgb/toric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace toric {

bool is_walk_of(const Graph& g, const Walk& w) {
    if (w.vertices.empty()) return false;
    for (int v : w.vertices)
        if (v < 0 || v >= g.vertex_count()) return false;
    for (int i = 0; i < w.length(); ++i) {
        auto [a, b] = w.step(i);
        if (!g.adjacent(a, b)) return false;
    }
    return true;
}

int Binomial::degree_plus() const { return std::accumulate(plus.begin(), plus.end(), 0); }
int Binomial::degree_minus() const { return std::accumulate(minus.begin(), minus.end(), 0); }

bool kernel_member(const Graph& g, const Binomial& b) {
    if (static_cast<int>(b.plus.size()) != g.edge_count() ||
        static_cast<int>(b.minus.size()) != g.edge_count())
        return false;
    std::vector<long long> bal(static_cast<size_t>(g.vertex_count()), 0);
    for (int i = 0; i < g.edge_count(); ++i) {
        long long d = b.plus[static_cast<size_t>(i)] - b.minus[static_cast<size_t>(i)];
        bal[static_cast<size_t>(g.edge(i).u)] += d;
        bal[static_cast<size_t>(g.edge(i).v)] += d;
    }
    return std::all_of(bal.begin(), bal.end(), [](long long x) { return x == 0; });
}

Binomial sign_canonical(Binomial b) {
    if (std::lexicographical_compare(b.plus.begin(), b.plus.end(), b.minus.begin(),
                                     b.minus.end()))
        std::swap(b.plus, b.minus);
    return b;
}

namespace {

std::string side_string(const std::vector<int>& exps) {
    std::string out;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "y" + std::to_string(i + 1);
        if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
    }
    return out.empty() ? "1" : out;
}

}  // namespace

std::string pretty(const Binomial& b) {
    return side_string(b.plus) + " - " + side_string(b.minus);
}

Binomial walk_binomial(const Graph& g, const Walk& w) {
    if (!w.closed()) throw Error("walk_binomial: walk is not closed");
    if (!w.even()) throw Error("walk_binomial: walk has odd length");
    if (!is_walk_of(g, w)) throw Error("walk_binomial: not a walk of the graph");
    Binomial b;
    b.plus.assign(static_cast<size_t>(g.edge_count()), 0);
    b.minus.assign(static_cast<size_t>(g.edge_count()), 0);
    for (int i = 0; i < w.length(); ++i) {
        auto [a, c] = w.step(i);
        int e = g.edge_index(a, c);
        // 1-based position i+1: odd positions to plus, even to minus
        (i % 2 == 0 ? b.plus : b.minus)[static_cast<size_t>(e)] += 1;
    }
    for (size_t i = 0; i < b.plus.size(); ++i) {
        int c = std::min(b.plus[i], b.minus[i]);
        b.plus[i] -= c;
        b.minus[i] -= c;
    }
    if (b.plus == b.minus) throw Error("walk_binomial: the two sides cancel (zero binomial)");
    return b;
}

namespace {

// All simple cycles in canonical form: cycle[0] is its least vertex and
// cycle[1] < cycle.back(). Emitted as vertex lists without the closing vertex.
template <typename Emit>
void simple_cycle_dfs(const Graph& g, std::vector<int>& path, std::vector<char>& used,
                      Emit&& emit) {
    int root = path[0];
    if (path.size() >= 3 && g.adjacent(path.back(), root) && path[1] < path.back()) emit(path);
    for (int w : g.neighbors(path.back())) {
        if (w <= root || used[static_cast<size_t>(w)]) continue;
        path.push_back(w);
        used[static_cast<size_t>(w)] = 1;
        simple_cycle_dfs(g, path, used, emit);
        used[static_cast<size_t>(w)] = 0;
        path.pop_back();
    }
}

template <typename Emit>
void for_each_simple_cycle(const Graph& g, Emit&& emit) {
    std::vector<char> used(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<int> path;
    for (int s = 0; s < g.vertex_count(); ++s) {
        path.assign(1, s);
        used[static_cast<size_t>(s)] = 1;
        simple_cycle_dfs(g, path, used, emit);
        used[static_cast<size_t>(s)] = 0;
    }
}

std::vector<int> rotate_cycle(const std::vector<int>& cycle, int start_vertex) {
    auto it = std::find(cycle.begin(), cycle.end(), start_vertex);
    std::vector<int> out(it, cycle.end());
    out.insert(out.end(), cycle.begin(), it);
    return out;
}

void append_cycle(std::vector<int>& seq, const std::vector<int>& cycle_at_attach) {
    for (size_t i = 1; i < cycle_at_attach.size(); ++i) seq.push_back(cycle_at_attach[i]);
    seq.push_back(cycle_at_attach[0]);
}

void append_path(std::vector<int>& seq, const std::vector<int>& path) {
    for (size_t i = 1; i < path.size(); ++i) seq.push_back(path[i]);
}

// Simple paths from a vertex of c1 to a vertex of c2 whose interior avoids
// both cycles.
template <typename Emit>
void connecting_path_dfs(const Graph& g, const std::vector<char>& in_c1,
                         const std::vector<char>& in_c2, std::vector<int>& path,
                         std::vector<char>& used, Emit&& emit) {
    int cur = path.back();
    for (int w : g.neighbors(cur)) {
        if (in_c1[static_cast<size_t>(w)]) continue;
        if (in_c2[static_cast<size_t>(w)]) {
            path.push_back(w);
            emit(path);
            path.pop_back();
            continue;
        }
        if (used[static_cast<size_t>(w)]) continue;
        path.push_back(w);
        used[static_cast<size_t>(w)] = 1;
        connecting_path_dfs(g, in_c1, in_c2, path, used, emit);
        used[static_cast<size_t>(w)] = 0;
        path.pop_back();
    }
}

}  // namespace

std::vector<Binomial> enumerate_circuits(const Graph& g) {
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    std::vector<Binomial> out;
    auto record = [&](const Walk& w) {
        Binomial b = sign_canonical(walk_binomial(g, w));
        if (seen.emplace(b.plus, b.minus).second) out.push_back(std::move(b));
    };

    std::vector<std::vector<int>> even_cycles, odd_cycles;
    for_each_simple_cycle(g, [&](const std::vector<int>& cyc) {
        (cyc.size() % 2 == 0 ? even_cycles : odd_cycles).push_back(cyc);
    });

    for (const auto& cyc : even_cycles) {
        Walk w;
        w.vertices = cyc;
        w.vertices.push_back(cyc[0]);
        record(w);
    }

    int n = g.vertex_count();
    for (size_t i = 0; i < odd_cycles.size(); ++i) {
        std::vector<char> in_c1(static_cast<size_t>(n), 0);
        for (int v : odd_cycles[i]) in_c1[static_cast<size_t>(v)] = 1;
        for (size_t j = i + 1; j < odd_cycles.size(); ++j) {
            std::vector<int> shared;
            for (int v : odd_cycles[j])
                if (in_c1[static_cast<size_t>(v)]) shared.push_back(v);

            if (shared.size() == 1) {
                // two odd cycles with exactly one common vertex
                int a = shared[0];
                std::vector<int> seq{a};
                append_cycle(seq, rotate_cycle(odd_cycles[i], a));
                append_cycle(seq, rotate_cycle(odd_cycles[j], a));
                record(Walk{std::move(seq)});
            } else if (shared.empty()) {
                // bow-ties: {C1, p, C2, -p} over every admissible connecting path
                std::vector<char> in_c2(static_cast<size_t>(n), 0);
                for (int v : odd_cycles[j]) in_c2[static_cast<size_t>(v)] = 1;
                for (int a : odd_cycles[i]) {
                    std::vector<int> path{a};
                    std::vector<char> used(static_cast<size_t>(n), 0);
                    connecting_path_dfs(g, in_c1, in_c2, path, used,
                                        [&](const std::vector<int>& p) {
                                            int b_end = p.back();
                                            std::vector<int> seq{a};
                                            append_cycle(seq, rotate_cycle(odd_cycles[i], a));
                                            append_path(seq, p);
                                            append_cycle(seq,
                                                         rotate_cycle(odd_cycles[j], b_end));
                                            std::vector<int> rp(p.rbegin(), p.rend());
                                            append_path(seq, rp);
                                            record(Walk{std::move(seq)});
                                        });
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Binomial& a, const Binomial& b) {
        return std::make_pair(a.plus, a.minus) < std::make_pair(b.plus, b.minus);
    });
    return out;
}

namespace {

struct PrimitivitySearch {
    const Graph& g;
    std::vector<int> lo, hi, w, target;
    std::vector<long long> bal, rem_lo, rem_hi;
    std::optional<std::vector<int>> found;

    void run() { dfs(0); }

    bool prune(int v) const {
        return bal[static_cast<size_t>(v)] + rem_lo[static_cast<size_t>(v)] > 0 ||
               bal[static_cast<size_t>(v)] + rem_hi[static_cast<size_t>(v)] < 0;
    }

    void dfs(int i) {
        if (found) return;
        int m = static_cast<int>(lo.size());
        if (i == m) {
            bool zero = std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
            if (zero || w == target) return;
            bool neg = true;
            for (int k = 0; k < m; ++k)
                if (w[static_cast<size_t>(k)] != -target[static_cast<size_t>(k)]) neg = false;
            if (neg) return;
            found = w;
            return;
        }
        const Edge& e = g.edge(i);
        rem_lo[static_cast<size_t>(e.u)] -= lo[static_cast<size_t>(i)];
        rem_hi[static_cast<size_t>(e.u)] -= hi[static_cast<size_t>(i)];
        rem_lo[static_cast<size_t>(e.v)] -= lo[static_cast<size_t>(i)];
        rem_hi[static_cast<size_t>(e.v)] -= hi[static_cast<size_t>(i)];
        for (int x = lo[static_cast<size_t>(i)]; x <= hi[static_cast<size_t>(i)]; ++x) {
            bal[static_cast<size_t>(e.u)] += x;
            bal[static_cast<size_t>(e.v)] += x;
            w[static_cast<size_t>(i)] = x;
            if (!prune(e.u) && !prune(e.v)) dfs(i + 1);
            bal[static_cast<size_t>(e.u)] -= x;
            bal[static_cast<size_t>(e.v)] -= x;
            if (found) break;
        }
        w[static_cast<size_t>(i)] = 0;
        rem_lo[static_cast<size_t>(e.u)] += lo[static_cast<size_t>(i)];
        rem_hi[static_cast<size_t>(e.u)] += hi[static_cast<size_t>(i)];
        rem_lo[static_cast<size_t>(e.v)] += lo[static_cast<size_t>(i)];
        rem_hi[static_cast<size_t>(e.v)] += hi[static_cast<size_t>(i)];
    }
};

}  // namespace

PrimitivityResult check_primitive(const Graph& g, const Binomial& b) {
    if (b.plus == b.minus) throw Error("check_primitive: zero binomial");
    for (int x : b.plus)
        if (x < 0) throw Error("check_primitive: negative exponent");
    for (int x : b.minus)
        if (x < 0) throw Error("check_primitive: negative exponent");
    if (!kernel_member(g, b))
        throw Error("check_primitive: binomial is not in the toric ideal of the graph");

    int m = g.edge_count();
    PrimitivitySearch s{g, {}, {}, {}, {}, {}, {}, {}, {}};
    s.lo.resize(static_cast<size_t>(m));
    s.hi.resize(static_cast<size_t>(m));
    s.w.assign(static_cast<size_t>(m), 0);
    s.target.resize(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        s.lo[static_cast<size_t>(i)] = -b.minus[static_cast<size_t>(i)];
        s.hi[static_cast<size_t>(i)] = b.plus[static_cast<size_t>(i)];
        s.target[static_cast<size_t>(i)] =
            b.plus[static_cast<size_t>(i)] - b.minus[static_cast<size_t>(i)];
    }
    s.bal.assign(static_cast<size_t>(g.vertex_count()), 0);
    s.rem_lo.assign(static_cast<size_t>(g.vertex_count()), 0);
    s.rem_hi.assign(static_cast<size_t>(g.vertex_count()), 0);
    for (int i = 0; i < m; ++i) {
        const Edge& e = g.edge(i);
        s.rem_lo[static_cast<size_t>(e.u)] += s.lo[static_cast<size_t>(i)];
        s.rem_hi[static_cast<size_t>(e.u)] += s.hi[static_cast<size_t>(i)];
        s.rem_lo[static_cast<size_t>(e.v)] += s.lo[static_cast<size_t>(i)];
        s.rem_hi[static_cast<size_t>(e.v)] += s.hi[static_cast<size_t>(i)];
    }
    s.run();

    PrimitivityResult res;
    if (!s.found) {
        res.primitive = true;
        return res;
    }
    Binomial smaller;
    smaller.plus.assign(static_cast<size_t>(m), 0);
    smaller.minus.assign(static_cast<size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
        int x = (*s.found)[static_cast<size_t>(i)];
        if (x > 0) smaller.plus[static_cast<size_t>(i)] = x;
        if (x < 0) smaller.minus[static_cast<size_t>(i)] = -x;
    }
    res.primitive = false;
    res.smaller = std::move(smaller);
    return res;
}

bool is_primitive(const Graph& g, const Binomial& b) { return check_primitive(g, b).primitive; }

ParityColoring parity_coloring(const Graph& g, const Walk& w) {
    if (!w.closed() || !w.even()) throw Error("parity_coloring: walk must be closed and even");
    if (!is_walk_of(g, w)) throw Error("parity_coloring: not a walk of the graph");
    ParityColoring pc;
    pc.color_by_edge.assign(static_cast<size_t>(g.edge_count()), -1);
    pc.ok = true;
    for (int i = 0; i < w.length(); ++i) {
        auto [a, b] = w.step(i);
        int e = g.edge_index(a, b);
        int8_t color = static_cast<int8_t>(i % 2);
        int8_t& slot = pc.color_by_edge[static_cast<size_t>(e)];
        if (slot == -1) {
            slot = color;
        } else if (slot != color) {
            pc.ok = false;
            pc.conflicting_edge = e;
            return pc;
        }
    }
    return pc;
}

WalkType walk_type(const WalkClassification& c) {
    if (std::holds_alternative<EvenCycleShape>(c.shape)) return WalkType::EvenCycle;
    if (std::holds_alternative<TwoOddCyclesShape>(c.shape)) return WalkType::TwoOddCyclesOneVertex;
    return WalkType::OddCyclesWithPaths;
}

namespace {

Walk rotate_walk(const Walk& w, int r) {
    int L = w.length();
    Walk out;
    out.vertices.reserve(static_cast<size_t>(L) + 1);
    for (int i = 0; i <= L; ++i)
        out.vertices.push_back(w.vertices[static_cast<size_t>((r + i) % L)]);
    return out;
}

// Parses a rotated closed even walk into the cycle/path decomposition,
// following the constructive argument that classifies primitive walks.
// Returns nullopt when this rotation does not start at a cycle attachment.
std::optional<WalkShape> try_parse_shape(const Walk& w) {
    int L = w.length();
    auto at = [&](int i) { return w.vertices[static_cast<size_t>(i)]; };

    // First cycle: the first vertex repetition must close at position 0.
    {
        std::set<int> seen;
        seen.insert(at(0));
        int t = 1;
        for (; t <= L; ++t) {
            if (seen.count(at(t))) break;
            seen.insert(at(t));
        }
        if (at(t) != at(0)) return std::nullopt;
        std::vector<int> c1(w.vertices.begin(), w.vertices.begin() + t);
        if (t == L) return std::nullopt;  // simple even cycle, handled before rotation
        if (t % 2 == 0 || t < 3) return std::nullopt;

        std::vector<std::vector<int>> cycles{c1}, paths;
        std::set<int> cur_cycle(c1.begin(), c1.end());
        int cur_attach = at(0);
        int pos = t;

        while (pos < L) {
            std::vector<int> path_verts{cur_attach};
            std::set<int> local{cur_attach};
            bool advanced = false;
            for (int r = 1; pos + r <= L; ++r) {
                int x = at(pos + r);
                if (pos + r == L) {
                    // Walk end: the remaining segment is the final path back
                    // to the first attachment, or the second cycle of a
                    // two-odd-cycles walk.
                    if (x == cur_attach) {
                        if (cycles.size() != 1 || r % 2 == 0 || r < 3) return std::nullopt;
                        std::vector<int> c2(path_verts);
                        TwoOddCyclesShape shape;
                        shape.c1 = cycles[0];
                        shape.c2 = std::move(c2);
                        shape.shared_vertex = cur_attach;
                        return WalkShape{std::move(shape)};
                    }
                    if (cycles.size() < 2) return std::nullopt;
                    if (local.count(x)) return std::nullopt;  // final path not simple
                    path_verts.push_back(x);
                    paths.push_back(std::move(path_verts));
                    pos = L;
                    advanced = true;
                    break;
                }
                if (cur_cycle.count(x)) return std::nullopt;  // touches current cycle again
                if (local.count(x)) {
                    auto it = std::find(path_verts.begin(), path_verts.end(), x);
                    int i = static_cast<int>(it - path_verts.begin());
                    if (i == 0) return std::nullopt;  // cycle attached with no path
                    int clen = r - i;
                    if (clen % 2 == 0 || clen < 3) return std::nullopt;
                    std::vector<int> cyc(path_verts.begin() + i, path_verts.end());
                    std::vector<int> pth(path_verts.begin(), path_verts.begin() + i + 1);
                    cycles.push_back(cyc);
                    paths.push_back(std::move(pth));
                    cur_cycle = std::set<int>(cyc.begin(), cyc.end());
                    cur_attach = x;
                    pos = pos + r;
                    advanced = true;
                    break;
                }
                local.insert(x);
                path_verts.push_back(x);
            }
            if (!advanced) return std::nullopt;
        }

        if (cycles.size() < 2 || paths.size() != cycles.size()) return std::nullopt;
        // cyclically adjacent cycles must be vertex-disjoint; nothing further
        // is asserted about non-adjacent ones
        size_t h = cycles.size();
        for (size_t i = 0; i < h; ++i) {
            std::set<int> a(cycles[i].begin(), cycles[i].end());
            for (int v : cycles[(i + 1) % h])
                if (a.count(v)) return std::nullopt;
        }
        for (const auto& p : paths)
            if (p.size() < 2) return std::nullopt;

        OddCyclePathShape shape;
        shape.cycles = std::move(cycles);
        shape.paths = std::move(paths);
        if (shape.cycles.size() == 2) {
            std::vector<int> rev(shape.paths[1].rbegin(), shape.paths[1].rend());
            shape.degenerate_bowtie = (rev == shape.paths[0]);
        }
        return WalkShape{std::move(shape)};
    }
}

}  // namespace

WalkClassification classify_primitive_walk(const Graph& g, const Walk& w,
                                           bool recheck_primitivity) {
    if (!w.closed() || !w.even())
        throw Error("classify_primitive_walk: walk must be closed and even");
    if (!is_walk_of(g, w)) throw Error("classify_primitive_walk: not a walk of the graph");

    ParityColoring pc = parity_coloring(g, w);
    if (!pc.ok)
        throw Error("classify_primitive_walk: walk is not primitive (edge " +
                    std::to_string(pc.conflicting_edge + 1) +
                    " occupies both an odd and an even position)");
    if (recheck_primitivity) {
        Binomial b = walk_binomial(g, w);
        PrimitivityResult pr = check_primitive(g, b);
        if (!pr.primitive)
            throw Error("classify_primitive_walk: walk is not primitive (conformally smaller "
                        "kernel element " +
                        pretty(*pr.smaller) + ")");
    }

    int L = w.length();
    std::set<int> distinct(w.vertices.begin(), w.vertices.end() - 1);
    if (static_cast<int>(distinct.size()) == L) {
        WalkClassification c;
        EvenCycleShape shape;
        shape.cycle = std::vector<int>(w.vertices.begin(), w.vertices.end() - 1);
        c.shape = std::move(shape);
        c.rotated = w;
        return c;
    }

    for (int r = 0; r < L; ++r) {
        Walk rw = rotate_walk(w, r);
        if (auto shape = try_parse_shape(rw)) {
            WalkClassification c;
            c.shape = std::move(*shape);
            c.rotated = std::move(rw);
            return c;
        }
    }
    throw Error("classify_primitive_walk: no rotation admits a cycle/path decomposition");
}

}  // namespace toric
