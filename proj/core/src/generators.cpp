#include <algorithm>

#include "toricgb/cli.hpp"

namespace toric {

uint64_t Rng::next() {
    // splitmix64
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

int Rng::below(int n) {
    if (n <= 0) throw Error("Rng::below requires n >= 1");
    return static_cast<int>((static_cast<unsigned __int128>(next()) *
                             static_cast<unsigned __int128>(n)) >>
                            64);
}

std::string to_string(Family f) {
    switch (f) {
        case Family::GapFree: return "gap-free";
        case Family::ChordalComplement: return "chordal-complement";
        case Family::Arbitrary: return "arbitrary";
        case Family::Multipartite: return "multipartite";
    }
    return "?";
}

namespace {

uint64_t mix_seed(Family f, int n, uint64_t seed) {
    Rng r(seed ^ (static_cast<uint64_t>(n) << 32) ^ static_cast<uint64_t>(f));
    return r.next();
}

Graph random_graph(Rng& rng, int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.coin()) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

// compact away isolated vertices, keeping edge order
Graph drop_isolated(const Graph& g) {
    std::vector<int> newid(static_cast<size_t>(g.vertex_count()), -1);
    int n = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 0) newid[static_cast<size_t>(v)] = n++;
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        edges.emplace_back(newid[static_cast<size_t>(e.u)], newid[static_cast<size_t>(e.v)]);
    return Graph(n, std::move(edges));
}

bool within_edge_cap(const Graph& g, const FamilyOptions& opt) {
    return opt.max_edges == 0 || g.edge_count() <= opt.max_edges;
}

// random chordal graph by attaching each new vertex to a subset of an
// existing clique
Graph random_chordal(Rng& rng, int n) {
    std::vector<std::vector<int>> cliques{{0}};
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
        const std::vector<int>& base = cliques[static_cast<size_t>(rng.below(
            static_cast<int>(cliques.size())))];
        std::vector<int> sub;
        for (int u : base)
            if (rng.coin()) sub.push_back(u);
        for (int u : sub) edges.emplace_back(u, v);
        sub.push_back(v);
        cliques.push_back(std::move(sub));
        cliques.push_back({v});
    }
    std::sort(edges.begin(), edges.end());
    return Graph(n, std::move(edges));
}

}  // namespace

GeneratedGraph generate_family(Family f, const FamilyOptions& opt) {
    GeneratedGraph out;
    out.family = f;
    out.requested_n = opt.n;
    if (opt.n < 2) throw Error("generate_family requires n >= 2");

    Rng rng(mix_seed(f, opt.n, opt.seed));
    int n = opt.n;
    int rejections = 0;

    switch (f) {
        case Family::Arbitrary: {
            for (;;) {
                Graph g = drop_isolated(random_graph(rng, n));
                if (g.edge_count() >= 1 && within_edge_cap(g, opt)) {
                    out.graph = std::move(g);
                    break;
                }
                if (++rejections % opt.max_rejections == 0 && n > 3) --n;
            }
            break;
        }
        case Family::GapFree: {
            for (;;) {
                Graph g = drop_isolated(random_graph(rng, n));
                if (g.edge_count() >= 1 && within_edge_cap(g, opt) && is_gap_free(g).gap_free) {
                    out.graph = std::move(g);
                    break;
                }
                if (++rejections % opt.max_rejections == 0 && n > 3) --n;
            }
            break;
        }
        case Family::ChordalComplement: {
            for (;;) {
                Graph g = drop_isolated(complement(random_chordal(rng, n)));
                if (g.edge_count() >= 1 && within_edge_cap(g, opt) &&
                    is_chordal(complement(g)).chordal) {
                    out.graph = std::move(g);
                    break;
                }
                if (++rejections % opt.max_rejections == 0 && n > 3) --n;
            }
            break;
        }
        case Family::Multipartite: {
            for (;;) {
                std::vector<int> parts;
                int left = n;
                while (left > 0) {
                    int s = 1 + rng.below(left);
                    parts.push_back(s);
                    left -= s;
                }
                if (parts.size() < 2) {
                    ++rejections;
                    continue;
                }
                std::sort(parts.begin(), parts.end());
                std::vector<int> part_of;
                for (size_t p = 0; p < parts.size(); ++p)
                    for (int c = 0; c < parts[p]; ++c) part_of.push_back(static_cast<int>(p));
                std::vector<Edge> edges;
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v)
                        if (part_of[static_cast<size_t>(u)] != part_of[static_cast<size_t>(v)])
                            edges.emplace_back(u, v);
                Graph g(n, std::move(edges));
                if (within_edge_cap(g, opt)) {
                    out.parts = std::move(parts);
                    out.graph = std::move(g);
                    break;
                }
                if (++rejections % opt.max_rejections == 0 && n > 3) --n;
            }
            break;
        }
    }

    out.actual_n = out.graph.vertex_count();
    out.rejections = rejections;
    return out;
}

}  // namespace toric
