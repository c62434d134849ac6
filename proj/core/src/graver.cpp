#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

#include "toricgb/toric.hpp"

namespace toric {

namespace {

// Closed even walk enumeration for the Graver basis.
//
// Each edge may be used at most twice, and only in one position parity: an
// edge hit in both parities makes the walk binomial's sides share a factor,
// so such walks never contribute primitive binomials. Walks are generated in
// canonical form (the least edge index used comes first, traversed from its
// smaller endpoint), levels of increasing length. A partial walk whose edge
// multiset already contains a previously found element can only complete to
// a conformally non-minimal vector and is cut; since shorter elements are
// complete before longer levels start, the surviving closed walks are
// exactly the primitive ones. The final primitivity filter re-checks each
// candidate independently.
struct WalkEnumerator {
    const Graph& g;
    int m, n, min_edge = 0, level = 0, start = 0;

    std::vector<std::vector<std::pair<int, int>>> incident;  // vertex -> (edge, other)
    std::vector<std::vector<int>> dist;

    std::vector<int8_t> exp_a, exp_b, cls, total;
    uint32_t mask_a = 0, mask_b = 0;
    std::vector<int> stack;

    struct Found {
        std::vector<int8_t> a, b;
        uint32_t mask_a, mask_b;
    };
    std::vector<Found> found;
    std::map<std::pair<std::vector<int>, std::vector<int>>, Walk> records;

    explicit WalkEnumerator(const Graph& graph)
        : g(graph), m(graph.edge_count()), n(graph.vertex_count()) {
        incident.assign(static_cast<size_t>(n), {});
        for (int i = 0; i < m; ++i) {
            incident[static_cast<size_t>(g.edge(i).u)].push_back({i, g.edge(i).v});
            incident[static_cast<size_t>(g.edge(i).v)].push_back({i, g.edge(i).u});
        }
        dist.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 1 << 20));
        for (int s = 0; s < n; ++s) {
            auto& d = dist[static_cast<size_t>(s)];
            d[static_cast<size_t>(s)] = 0;
            std::vector<int> queue{s};
            for (size_t qi = 0; qi < queue.size(); ++qi) {
                int v = queue[qi];
                for (int w : g.neighbors(v)) {
                    if (d[static_cast<size_t>(w)] > d[static_cast<size_t>(v)] + 1) {
                        d[static_cast<size_t>(w)] = d[static_cast<size_t>(v)] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        exp_a.assign(static_cast<size_t>(m), 0);
        exp_b.assign(static_cast<size_t>(m), 0);
        cls.assign(static_cast<size_t>(m), -1);
        total.assign(static_cast<size_t>(m), 0);
    }

    bool dominated() const {
        for (const Found& f : found) {
            if ((f.mask_a & ~mask_a) == 0 && (f.mask_b & ~mask_b) == 0) {
                bool ok = true;
                for (int i = 0; i < m && ok; ++i)
                    if (f.a[static_cast<size_t>(i)] > exp_a[static_cast<size_t>(i)] ||
                        f.b[static_cast<size_t>(i)] > exp_b[static_cast<size_t>(i)])
                        ok = false;
                if (ok) return true;
            }
            if ((f.mask_a & ~mask_b) == 0 && (f.mask_b & ~mask_a) == 0) {
                bool ok = true;
                for (int i = 0; i < m && ok; ++i)
                    if (f.a[static_cast<size_t>(i)] > exp_b[static_cast<size_t>(i)] ||
                        f.b[static_cast<size_t>(i)] > exp_a[static_cast<size_t>(i)])
                        ok = false;
                if (ok) return true;
            }
        }
        return false;
    }

    void record() {
        Binomial b;
        b.plus.assign(exp_a.begin(), exp_a.end());
        b.minus.assign(exp_b.begin(), exp_b.end());
        b = sign_canonical(std::move(b));
        auto key = std::make_pair(b.plus, b.minus);
        if (records.count(key)) return;
        records.emplace(std::move(key), Walk{stack});
        found.push_back({exp_a, exp_b, mask_a, mask_b});
    }

    void dfs(int cur, int pos) {
        if (pos == level) {
            if (cur == start) record();
            return;
        }
        int remaining = level - pos - 1;
        for (auto [e, nxt] : incident[static_cast<size_t>(cur)]) {
            if (e < min_edge || total[static_cast<size_t>(e)] == 2) continue;
            int8_t c = static_cast<int8_t>(pos % 2);
            int8_t& slot = cls[static_cast<size_t>(e)];
            if (slot != -1 && slot != c) continue;
            if (dist[static_cast<size_t>(nxt)][static_cast<size_t>(start)] > remaining) continue;

            int8_t old_cls = slot;
            slot = c;
            ++total[static_cast<size_t>(e)];
            uint32_t bit = 1u << e;
            if (c == 0) {
                ++exp_a[static_cast<size_t>(e)];
                mask_a |= bit;
            } else {
                ++exp_b[static_cast<size_t>(e)];
                mask_b |= bit;
            }
            if (!dominated()) {
                stack.push_back(nxt);
                dfs(nxt, pos + 1);
                stack.pop_back();
            }
            if (c == 0) {
                if (--exp_a[static_cast<size_t>(e)] == 0) mask_a &= ~bit;
            } else {
                if (--exp_b[static_cast<size_t>(e)] == 0) mask_b &= ~bit;
            }
            --total[static_cast<size_t>(e)];
            slot = old_cls;
        }
    }

    void run() {
        for (level = 4; level <= 2 * m; level += 2) {
            for (min_edge = 0; min_edge < m; ++min_edge) {
                const Edge& f = g.edge(min_edge);
                start = f.u;
                stack.assign(1, start);
                // place the minimum edge at position 1 (parity class A)
                cls[static_cast<size_t>(min_edge)] = 0;
                total[static_cast<size_t>(min_edge)] = 1;
                exp_a[static_cast<size_t>(min_edge)] = 1;
                mask_a = 1u << min_edge;
                mask_b = 0;
                if (!dominated() &&
                    dist[static_cast<size_t>(f.v)][static_cast<size_t>(start)] <= level - 1) {
                    stack.push_back(f.v);
                    dfs(f.v, 1);
                    stack.pop_back();
                }
                cls[static_cast<size_t>(min_edge)] = -1;
                total[static_cast<size_t>(min_edge)] = 0;
                exp_a[static_cast<size_t>(min_edge)] = 0;
                mask_a = 0;
            }
        }
    }
};

}  // namespace

std::vector<PrimitiveWalkRecord> enumerate_graver_walks(const Graph& g,
                                                        const GraverOptions& opt) {
    if (g.edge_count() > opt.max_edges)
        throw Error("enumerate_graver: graph has " + std::to_string(g.edge_count()) +
                    " edges, exceeding the configured bound of " + std::to_string(opt.max_edges));
    if (g.edge_count() > 31)
        throw Error("enumerate_graver: more than 31 edges is unsupported");

    WalkEnumerator en(g);
    en.run();

    std::vector<PrimitiveWalkRecord> out;
    out.reserve(en.records.size());
    for (auto& [key, walk] : en.records) {
        Binomial b{key.first, key.second};
        if (!check_primitive(g, b).primitive) continue;  // final independent filter
        out.push_back({std::move(b), std::move(walk)});
    }
    return out;
}

std::vector<Binomial> enumerate_graver(const Graph& g, const GraverOptions& opt) {
    std::vector<Binomial> out;
    for (auto& rec : enumerate_graver_walks(g, opt)) out.push_back(std::move(rec.binomial));
    return out;
}

}  // namespace toric
