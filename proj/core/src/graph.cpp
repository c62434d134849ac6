#include "toricgb/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace toric {

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0) throw Error("negative vertex count");
    adj_.assign(static_cast<size_t>(n_), {});
    adj_matrix_.assign(static_cast<size_t>(n_) * static_cast<size_t>(n_), 0);
    edge_index_.assign(static_cast<size_t>(n_) * static_cast<size_t>(n_), -1);
    for (int i = 0; i < edge_count(); ++i) {
        const Edge& e = edges_[static_cast<size_t>(i)];
        if (e.u < 0 || e.v >= n_) throw Error("edge endpoint out of range");
        if (e.u == e.v) throw Error("loop edge");
        if (adj_matrix_[index(e.u, e.v)]) throw Error("duplicate edge");
        adj_matrix_[index(e.u, e.v)] = adj_matrix_[index(e.v, e.u)] = 1;
        edge_index_[index(e.u, e.v)] = edge_index_[index(e.v, e.u)] = i;
        adj_[static_cast<size_t>(e.u)].push_back(e.v);
        adj_[static_cast<size_t>(e.v)].push_back(e.u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<int> comp(static_cast<size_t>(n_), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n_; ++s) {
        if (comp[static_cast<size_t>(s)] >= 0) continue;
        std::vector<int> stack{s}, members;
        comp[static_cast<size_t>(s)] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w : neighbors(v)) {
                if (comp[static_cast<size_t>(w)] < 0) {
                    comp[static_cast<size_t>(w)] = static_cast<int>(out.size());
                    stack.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

bool Graph::connected() const { return n_ <= 1 || components().size() == 1; }

ParsedGraph parse_graph(std::string_view text) {
    std::vector<std::pair<int, int>> raw;
    std::map<std::pair<int, int>, int> seen;  // edge -> first line
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::string s(line);
        if (std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }))
            continue;
        std::istringstream is(s);
        long long a = 0, b = 0;
        std::string trailing;
        if (!(is >> a >> b) || (is >> trailing))
            throw ParseError(line_no, "malformed line: expected \"u v\"");
        if (a <= 0 || b <= 0) throw ParseError(line_no, "vertex labels must be positive");
        if (a == b) throw ParseError(line_no, "loop edge " + std::to_string(a) + " " + std::to_string(b));
        int ia = static_cast<int>(a), ib = static_cast<int>(b);
        std::pair<int, int> key{std::min(ia, ib), std::max(ia, ib)};
        if (auto it = seen.find(key); it != seen.end())
            throw ParseError(line_no, "duplicate edge " + std::to_string(key.first) + " " +
                                          std::to_string(key.second) + " (first seen at line " +
                                          std::to_string(it->second) + ")");
        seen.emplace(key, line_no);
        raw.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }

    // Compact labels: only vertices incident to an edge survive. This is the
    // "no isolated vertices" normalization; the relabeling is recorded.
    std::vector<int> labels;
    for (auto [a, b] : raw) {
        labels.push_back(a);
        labels.push_back(b);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    std::map<int, int> to_new;
    for (size_t i = 0; i < labels.size(); ++i) to_new[labels[i]] = static_cast<int>(i);

    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (auto [a, b] : raw) edges.emplace_back(to_new[a], to_new[b]);

    ParsedGraph out;
    out.graph = Graph(static_cast<int>(labels.size()), std::move(edges));
    out.original_labels = labels;
    out.relabeled = false;
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] != static_cast<int>(i) + 1) out.relabeled = true;
    return out;
}

Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph(g.vertex_count(), std::move(edges));
}

namespace {

// DFS for chordless cycles in canonical form: path[0] is the least vertex of
// the cycle, path[1] < closing neighbor kills the reflection. Emits cycles in
// lexicographic order of their vertex sequence.
template <typename Emit>
void induced_cycle_dfs(const Graph& g, int length, std::vector<int>& path,
                       std::vector<char>& used, Emit&& emit) {
    int k = static_cast<int>(path.size());
    int root = path[0];
    if (k == length) {
        if (g.adjacent(path.back(), root) && path[1] < path.back())
            emit(path);
        return;
    }
    for (int w : g.neighbors(path.back())) {
        if (w <= root || used[static_cast<size_t>(w)]) continue;
        // chordlessness: w may touch only its path predecessor, and the root
        // only when closing.
        bool ok = true;
        for (int j = 1; j + 1 < k && ok; ++j)
            if (g.adjacent(path[static_cast<size_t>(j)], w)) ok = false;
        if (!ok) continue;
        if (k >= 2 && k + 1 < length && g.adjacent(root, w)) continue;
        path.push_back(w);
        used[static_cast<size_t>(w)] = 1;
        induced_cycle_dfs(g, length, path, used, emit);
        used[static_cast<size_t>(w)] = 0;
        path.pop_back();
    }
}

template <typename Emit>
void for_each_induced_cycle(const Graph& g, int length, Emit&& emit) {
    std::vector<char> used(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<int> path;
    for (int s = 0; s < g.vertex_count(); ++s) {
        path.assign(1, s);
        used[static_cast<size_t>(s)] = 1;
        induced_cycle_dfs(g, length, path, used, emit);
        used[static_cast<size_t>(s)] = 0;
    }
}

struct StopSearch {};

}  // namespace

std::optional<CycleWitness> find_induced_cycle(const Graph& g, int length) {
    if (length < 4) throw Error("induced cycle length must be >= 4");
    if (length > g.vertex_count()) return std::nullopt;
    std::optional<CycleWitness> found;
    try {
        for_each_induced_cycle(g, length, [&](const std::vector<int>& cyc) {
            found = CycleWitness{cyc, true};
            throw StopSearch{};
        });
    } catch (const StopSearch&) {
    }
    return found;
}

std::vector<CycleWitness> enumerate_induced_cycles(const Graph& g, int length) {
    if (length < 3) throw Error("cycle length must be >= 3");
    std::vector<CycleWitness> out;
    if (length > g.vertex_count()) return out;
    for_each_induced_cycle(g, length,
                           [&](const std::vector<int>& cyc) { out.push_back({cyc, true}); });
    return out;
}

GapFreeResult is_gap_free(const Graph& g) {
    GapFreeResult res;
    res.gap_free = true;
    for (int i = 0; i < g.edge_count() && res.gap_free; ++i) {
        for (int j = i + 1; j < g.edge_count(); ++j) {
            const Edge& a = g.edge(i);
            const Edge& b = g.edge(j);
            if (a.contains(b.u) || a.contains(b.v)) continue;
            bool bridged = g.adjacent(a.u, b.u) || g.adjacent(a.u, b.v) ||
                           g.adjacent(a.v, b.u) || g.adjacent(a.v, b.v);
            if (!bridged) {
                res.gap_free = false;
                res.witness = std::make_pair(a, b);
                break;
            }
        }
    }
    // Cross-check against the complement characterization: gap-free iff the
    // complement has no induced 4-cycle.
    bool via_complement = !find_induced_cycle(complement(g), 4).has_value();
    if (via_complement != res.gap_free)
        throw Error("internal: gap-free scan disagrees with complement C4 check");
    return res;
}

namespace {

// Maximum cardinality search: number vertices n..1 picking an unnumbered
// vertex with the most numbered neighbors; ties broken by smallest label.
// The resulting 1..n order is a perfect elimination ordering iff chordal.
std::vector<int> mcs_order(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> weight(static_cast<size_t>(n), 0), order(static_cast<size_t>(n), -1);
    std::vector<char> numbered(static_cast<size_t>(n), 0);
    for (int slot = n - 1; slot >= 0; --slot) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!numbered[static_cast<size_t>(v)] &&
                (best < 0 || weight[static_cast<size_t>(v)] > weight[static_cast<size_t>(best)]))
                best = v;
        numbered[static_cast<size_t>(best)] = 1;
        order[static_cast<size_t>(slot)] = best;
        for (int w : g.neighbors(best))
            if (!numbered[static_cast<size_t>(w)]) ++weight[static_cast<size_t>(w)];
    }
    return order;
}

bool is_perfect_elimination_ordering(const Graph& g, const std::vector<int>& order) {
    int n = g.vertex_count();
    std::vector<int> pos(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
    for (int i = 0; i < n; ++i) {
        int v = order[static_cast<size_t>(i)];
        std::vector<int> later;
        for (int w : g.neighbors(v))
            if (pos[static_cast<size_t>(w)] > i) later.push_back(w);
        for (size_t a = 0; a < later.size(); ++a)
            for (size_t b = a + 1; b < later.size(); ++b)
                if (!g.adjacent(later[a], later[b])) return false;
    }
    return true;
}

}  // namespace

ChordalResult is_chordal(const Graph& g) {
    ChordalResult res;
    std::vector<int> order = mcs_order(g);
    if (is_perfect_elimination_ordering(g, order)) {
        res.chordal = true;
        res.peo = std::move(order);
        return res;
    }
    res.chordal = false;
    for (int len = 4; len <= g.vertex_count(); ++len) {
        if (auto w = find_induced_cycle(g, len)) {
            res.witness = std::move(w);
            return res;
        }
    }
    throw Error("internal: MCS order rejected but no chordless cycle found");
}

KStepLinearity k_step_linearity(const Graph& g) {
    Graph gc = complement(g);
    KStepLinearity out;
    for (int len = 4; len <= gc.vertex_count(); ++len) {
        if (find_induced_cycle(gc, len)) {
            out.linear_resolution = false;
            out.k = len - 4;
            return out;
        }
    }
    out.linear_resolution = true;
    out.k = -1;
    return out;
}

OddCycleConditionResult odd_cycle_condition(const Graph& g) {
    if (!g.connected()) {
        auto comps = g.components();
        std::string msg = "odd cycle condition requires a connected graph; components:";
        for (const auto& c : comps) {
            msg += " {";
            for (size_t i = 0; i < c.size(); ++i)
                msg += (i ? "," : "") + std::to_string(c[i] + 1);
            msg += "}";
        }
        throw Error(msg);
    }
    std::vector<CycleWitness> odd;
    for (int len = 3; len <= g.vertex_count(); len += 2) {
        auto cs = enumerate_induced_cycles(g, len);
        odd.insert(odd.end(), cs.begin(), cs.end());
    }
    OddCycleConditionResult res;
    res.holds = true;
    for (size_t i = 0; i < odd.size(); ++i) {
        for (size_t j = i + 1; j < odd.size(); ++j) {
            const auto& c1 = odd[i].vertices;
            const auto& c2 = odd[j].vertices;
            bool disjoint = true;
            for (int u : c1)
                for (int v : c2)
                    if (u == v) disjoint = false;
            if (!disjoint) continue;
            bool linked = false;
            for (int u : c1)
                for (int v : c2)
                    if (g.adjacent(u, v)) linked = true;
            if (!linked) {
                res.holds = false;
                res.witness = std::make_pair(odd[i], odd[j]);
                return res;
            }
        }
    }
    return res;
}

}  // namespace toric
