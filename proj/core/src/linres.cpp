#include "toricgb/linres.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

namespace toric {

std::string to_string(EdgeOrderingProvenance p) {
    switch (p) {
        case EdgeOrderingProvenance::RevlexDerived: return "revlex-derived";
        case EdgeOrderingProvenance::LinearQuotientPeo: return "linear-quotient-peo";
        case EdgeOrderingProvenance::LinearQuotientSearch: return "linear-quotient-search";
        case EdgeOrderingProvenance::UserSupplied: return "user-supplied";
    }
    return "?";
}

namespace {

std::vector<int> rank_of_vertices(int n, const std::vector<int>& vertex_order) {
    if (static_cast<int>(vertex_order.size()) != n)
        throw Error("vertex order does not match the vertex count");
    std::vector<int> rank(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        int v = vertex_order[static_cast<size_t>(i)];
        if (v < 0 || v >= n || rank[static_cast<size_t>(v)] != -1)
            throw Error("vertex order is not a permutation");
        rank[static_cast<size_t>(v)] = i;
    }
    return rank;
}

int degree(const std::vector<int>& mon) { return std::accumulate(mon.begin(), mon.end(), 0); }

bool mon_divides(const std::vector<int>& d, const std::vector<int>& a) {
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] > a[i]) return false;
    return true;
}

}  // namespace

EdgeOrdering derive_edge_order(const Graph& g, const std::vector<int>& vertex_order) {
    std::vector<int> rank = rank_of_vertices(g.vertex_count(), vertex_order);
    std::vector<int> idx(static_cast<size_t>(g.edge_count()));
    std::iota(idx.begin(), idx.end(), 0);
    // Graded revlex on quadratic monomials: with ranks r1 < r2 per edge,
    // descending order is ascending in (r2, r1).
    auto key = [&](int e) {
        int a = rank[static_cast<size_t>(g.edge(e).u)];
        int b = rank[static_cast<size_t>(g.edge(e).v)];
        if (a > b) std::swap(a, b);
        return std::make_pair(b, a);
    };
    std::sort(idx.begin(), idx.end(), [&](int x, int y) { return key(x) < key(y); });
    EdgeOrdering ord;
    ord.sequence = std::move(idx);
    ord.provenance = EdgeOrderingProvenance::RevlexDerived;
    ord.vertex_order = vertex_order;
    return ord;
}

MonomialIdeal edge_ideal(const Graph& g) {
    MonomialIdeal ideal;
    ideal.nvars = g.vertex_count();
    for (const Edge& e : g.edges()) {
        std::vector<int> mon(static_cast<size_t>(g.vertex_count()), 0);
        mon[static_cast<size_t>(e.u)] = 1;
        mon[static_cast<size_t>(e.v)] = 1;
        ideal.generators.push_back(std::move(mon));
    }
    ideal.minimalized = true;  // distinct squarefree degree-2 monomials
    return ideal;
}

MonomialIdeal minimalize(MonomialIdeal ideal) {
    std::sort(ideal.generators.begin(), ideal.generators.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  int da = degree(a), db = degree(b);
                  if (da != db) return da < db;
                  return a < b;
              });
    std::vector<std::vector<int>> kept;
    for (const auto& m : ideal.generators) {
        bool redundant = false;
        for (const auto& k : kept)
            if (mon_divides(k, m)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(m);
    }
    ideal.generators = std::move(kept);
    ideal.minimalized = true;
    return ideal;
}

MonomialIdeal ideal_power(const MonomialIdeal& ideal, int k) {
    if (k < 1) throw Error("ideal_power requires k >= 1");
    MonomialIdeal out;
    out.nvars = ideal.nvars;
    size_t s = ideal.generators.size();
    std::vector<int> acc(static_cast<size_t>(ideal.nvars), 0);
    // combinations with repetition of k generator indices
    auto rec = [&](auto&& self, size_t from, int left) -> void {
        if (left == 0) {
            out.generators.push_back(acc);
            return;
        }
        for (size_t i = from; i < s; ++i) {
            for (size_t v = 0; v < acc.size(); ++v) acc[v] += ideal.generators[i][v];
            self(self, i, left - 1);
            for (size_t v = 0; v < acc.size(); ++v) acc[v] -= ideal.generators[i][v];
        }
    };
    rec(rec, 0, k);
    return minimalize(std::move(out));
}

LinearQuotientCheck verify_linear_quotients(const std::vector<std::vector<int>>& mons) {
    if (mons.empty()) return {true, 0};
    int d = degree(mons[0]);
    for (const auto& m : mons)
        if (degree(m) != d) throw Error("verify_linear_quotients: generators of mixed degree");
    for (size_t i = 0; i < mons.size(); ++i)
        for (size_t j = i + 1; j < mons.size(); ++j)
            if (mons[i] == mons[j])
                throw Error("verify_linear_quotients: generators are not minimal (duplicate)");

    for (size_t i = 1; i < mons.size(); ++i) {
        // quotient generators m_j / gcd(m_j, m_i), minimalized
        std::vector<std::vector<int>> quot;
        for (size_t j = 0; j < i; ++j) {
            std::vector<int> q(mons[j].size());
            for (size_t v = 0; v < q.size(); ++v)
                q[v] = mons[j][v] - std::min(mons[j][v], mons[i][v]);
            quot.push_back(std::move(q));
        }
        std::sort(quot.begin(), quot.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
            int da = degree(a), db = degree(b);
            if (da != db) return da < db;
            return a < b;
        });
        quot.erase(std::unique(quot.begin(), quot.end()), quot.end());
        bool linear = true;
        std::vector<const std::vector<int>*> minimal;
        for (const auto& q : quot) {
            bool redundant = false;
            for (const auto* k : minimal)
                if (mon_divides(*k, q)) {
                    redundant = true;
                    break;
                }
            if (!redundant) {
                minimal.push_back(&q);
                if (degree(q) != 1) linear = false;
            }
        }
        if (!linear) return {false, static_cast<int>(i) + 1};
    }
    return {true, 0};
}

PrefixGapFreeCheck prefix_gap_free(const Graph& g, const EdgeOrdering& ord) {
    if (static_cast<int>(ord.sequence.size()) != g.edge_count())
        throw Error("prefix_gap_free: ordering does not match the graph");
    std::vector<Edge> prefix;
    for (size_t i = 0; i < ord.sequence.size(); ++i) {
        prefix.push_back(g.edge(ord.sequence[i]));
        Graph sub(g.vertex_count(), prefix);
        if (!is_gap_free(sub).gap_free) return {false, static_cast<int>(i) + 1};
    }
    return {true, 0};
}

namespace {

// Lex-descending comparison of equal-degree monomials under a vertex
// priority (vertex_order[0] is the largest variable).
struct LexDesc {
    const std::vector<int>& order;  // priority list of vertices
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        for (int v : order) {
            int d = a[static_cast<size_t>(v)] - b[static_cast<size_t>(v)];
            if (d != 0) return d > 0;
        }
        return false;
    }
};

bool colon_step_linear(const std::vector<std::vector<int>>& chosen,
                       const std::vector<int>& next) {
    std::vector<std::vector<int>> quot;
    for (const auto& m : chosen) {
        std::vector<int> q(m.size());
        for (size_t v = 0; v < q.size(); ++v) q[v] = m[v] - std::min(m[v], next[v]);
        quot.push_back(std::move(q));
    }
    std::sort(quot.begin(), quot.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        int da = degree(a), db = degree(b);
        if (da != db) return da < db;
        return a < b;
    });
    quot.erase(std::unique(quot.begin(), quot.end()), quot.end());
    std::vector<const std::vector<int>*> minimal;
    for (const auto& q : quot) {
        bool redundant = false;
        for (const auto* k : minimal)
            if (mon_divides(*k, q)) {
                redundant = true;
                break;
            }
        if (!redundant) {
            if (degree(q) != 1) return false;
            minimal.push_back(&q);
        }
    }
    return true;
}

struct PrefixSearch {
    const std::vector<std::vector<int>>& mons;
    std::vector<std::vector<int>> chosen;
    std::vector<int> perm;
    std::vector<char> used;
    std::unordered_set<uint64_t> dead;  // extendability depends on the set only
    bool use_memo;
    long long budget;

    bool dfs(uint64_t mask) {
        if (perm.size() == mons.size()) return true;
        if (--budget < 0) throw Error("linear quotient search budget exceeded");
        if (use_memo && dead.count(mask)) return false;
        for (size_t i = 0; i < mons.size(); ++i) {
            if (used[i]) continue;
            if (!colon_step_linear(chosen, mons[i])) continue;
            used[i] = 1;
            chosen.push_back(mons[i]);
            perm.push_back(static_cast<int>(i));
            if (dfs(mask | (use_memo ? (uint64_t{1} << i) : 0))) return true;
            perm.pop_back();
            chosen.pop_back();
            used[i] = 0;
        }
        if (use_memo) dead.insert(mask);
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_linear_quotient_permutation(
    const std::vector<std::vector<int>>& mons) {
    if (mons.empty()) return std::vector<int>{};
    PrefixSearch s{mons, {}, {}, std::vector<char>(mons.size(), 0), {},
                   mons.size() <= 64, 10'000'000};
    if (s.dfs(0)) return s.perm;
    return std::nullopt;
}

namespace {

std::vector<std::vector<int>> candidate_vertex_orders(const Graph& g) {
    ChordalResult ch = is_chordal(complement(g));
    if (!ch.chordal) return {};
    std::vector<std::vector<int>> out;
    out.push_back(ch.peo);
    out.push_back({ch.peo.rbegin(), ch.peo.rend()});
    return out;
}

std::vector<int> sort_edges_lex_desc(const Graph& g, const std::vector<int>& vertex_order) {
    std::vector<int> rank = rank_of_vertices(g.vertex_count(), vertex_order);
    std::vector<int> idx(static_cast<size_t>(g.edge_count()));
    std::iota(idx.begin(), idx.end(), 0);
    // lex descending on x_u*x_v: ascending in (min rank, max rank)
    auto key = [&](int e) {
        int a = rank[static_cast<size_t>(g.edge(e).u)];
        int b = rank[static_cast<size_t>(g.edge(e).v)];
        if (a > b) std::swap(a, b);
        return std::make_pair(a, b);
    };
    std::sort(idx.begin(), idx.end(), [&](int x, int y) { return key(x) < key(y); });
    return idx;
}

std::vector<std::vector<int>> monomials_in_order(const Graph& g, const std::vector<int>& seq) {
    std::vector<std::vector<int>> mons;
    for (int e : seq) {
        std::vector<int> mon(static_cast<size_t>(g.vertex_count()), 0);
        mon[static_cast<size_t>(g.edge(e).u)] = 1;
        mon[static_cast<size_t>(g.edge(e).v)] = 1;
        mons.push_back(std::move(mon));
    }
    return mons;
}

}  // namespace

LinearQuotientSearchResult linear_quotient_ordering(const Graph& g) {
    LinearQuotientSearchResult res;
    ChordalResult ch = is_chordal(complement(g));
    if (!ch.chordal) {
        res.obstruction = ch.witness;
        return res;
    }
    for (const auto& vo : candidate_vertex_orders(g)) {
        std::vector<int> seq = sort_edges_lex_desc(g, vo);
        if (verify_linear_quotients(monomials_in_order(g, seq)).ok) {
            EdgeOrdering ord;
            ord.sequence = std::move(seq);
            ord.provenance = EdgeOrderingProvenance::LinearQuotientPeo;
            ord.vertex_order = vo;
            res.ordering = std::move(ord);
            return res;
        }
    }
    // Complete prefix search; an ordering exists whenever the complement is
    // chordal, so this only runs when the PEO candidates miss.
    MonomialIdeal ideal = edge_ideal(g);
    if (auto perm = find_linear_quotient_permutation(ideal.generators)) {
        EdgeOrdering ord;
        ord.sequence = *perm;
        ord.provenance = EdgeOrderingProvenance::LinearQuotientSearch;
        res.ordering = std::move(ord);
        return res;
    }
    throw Error("linear_quotient_ordering: complement is chordal but no ordering was found");
}

PowerLinearQuotientReport power_linear_quotients(const Graph& g, int kmax) {
    PowerLinearQuotientReport rep;
    ChordalResult ch = is_chordal(complement(g));
    if (!ch.chordal) {
        rep.applicable = false;
        rep.obstruction = ch.witness;
        return rep;
    }
    rep.applicable = true;

    // vertex order whose lex-descending sort verifies at k = 1
    std::vector<std::vector<int>> cands = candidate_vertex_orders(g);
    std::vector<int> chosen_vo = cands.front();
    for (const auto& vo : cands) {
        std::vector<int> seq = sort_edges_lex_desc(g, vo);
        if (verify_linear_quotients(monomials_in_order(g, seq)).ok) {
            chosen_vo = vo;
            break;
        }
    }

    MonomialIdeal base = edge_ideal(g);
    for (int k = 1; k <= kmax; ++k) {
        MonomialIdeal pk = ideal_power(base, k);
        std::vector<std::vector<int>> mons = pk.generators;
        std::sort(mons.begin(), mons.end(), LexDesc{chosen_vo});
        PowerReportEntry entry;
        entry.k = k;
        LinearQuotientCheck check = verify_linear_quotients(mons);
        if (check.ok) {
            entry.pass = true;
        } else {
            entry.failing_index = check.failing_index;
            entry.used_fallback = true;
            entry.pass = find_linear_quotient_permutation(pk.generators).has_value();
        }
        rep.entries.push_back(std::move(entry));
    }
    return rep;
}

}  // namespace toric
