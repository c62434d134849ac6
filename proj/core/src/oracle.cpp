#include "toricgb/oracle.hpp"

#include <algorithm>
#include <cstdlib>

namespace toric::oracle {

bool conformal_below(const std::vector<int>& u, const std::vector<int>& v) {
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i] * v[i] < 0) return false;
        if (std::abs(u[i]) > std::abs(v[i])) return false;
    }
    return true;
}

namespace {

// Enumerates all kernel vectors with coordinates in {-2..2}, edge by edge in
// natural order, cutting branches whose vertex balances cannot return to
// zero: |balance| shrinks by at most 2 per remaining incident edge.
void kernel_box_dfs(const Graph& g, int i, std::vector<int>& w, std::vector<int>& bal,
                    const std::vector<std::vector<int>>& remaining,
                    std::vector<std::vector<int>>& out) {
    int m = g.edge_count();
    if (i == m) {
        if (std::any_of(w.begin(), w.end(), [](int x) { return x != 0; })) out.push_back(w);
        return;
    }
    const Edge& e = g.edge(i);
    for (int x = -2; x <= 2; ++x) {
        bal[static_cast<size_t>(e.u)] += x;
        bal[static_cast<size_t>(e.v)] += x;
        bool feasible =
            std::abs(bal[static_cast<size_t>(e.u)]) <=
                2 * remaining[static_cast<size_t>(i) + 1][static_cast<size_t>(e.u)] &&
            std::abs(bal[static_cast<size_t>(e.v)]) <=
                2 * remaining[static_cast<size_t>(i) + 1][static_cast<size_t>(e.v)];
        if (feasible) {
            w[static_cast<size_t>(i)] = x;
            kernel_box_dfs(g, i + 1, w, bal, remaining, out);
            w[static_cast<size_t>(i)] = 0;
        }
        bal[static_cast<size_t>(e.u)] -= x;
        bal[static_cast<size_t>(e.v)] -= x;
    }
}

}  // namespace

std::vector<Binomial> graver_by_conformal_minimality(const Graph& g) {
    if (g.edge_count() > 10)
        throw Error("graver oracle: brute force limited to 10 edges, got " +
                    std::to_string(g.edge_count()));
    std::vector<std::vector<int>> kernel;
    std::vector<int> w(static_cast<size_t>(g.edge_count()), 0);
    std::vector<int> bal(static_cast<size_t>(g.vertex_count()), 0);
    // remaining[i][v] = number of edges with index >= i incident to v
    std::vector<std::vector<int>> remaining(
        static_cast<size_t>(g.edge_count()) + 1,
        std::vector<int>(static_cast<size_t>(g.vertex_count()), 0));
    for (int i = g.edge_count() - 1; i >= 0; --i) {
        remaining[static_cast<size_t>(i)] = remaining[static_cast<size_t>(i) + 1];
        ++remaining[static_cast<size_t>(i)][static_cast<size_t>(g.edge(i).u)];
        ++remaining[static_cast<size_t>(i)][static_cast<size_t>(g.edge(i).v)];
    }
    kernel_box_dfs(g, 0, w, bal, remaining, kernel);

    std::vector<Binomial> out;
    for (const auto& v : kernel) {
        bool minimal = true;
        for (const auto& u : kernel) {
            if (&u == &v || u == v) continue;
            if (conformal_below(u, v)) {
                minimal = false;
                break;
            }
        }
        if (!minimal) continue;
        Binomial b;
        b.plus.assign(v.size(), 0);
        b.minus.assign(v.size(), 0);
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i] > 0) b.plus[i] = v[i];
            if (v[i] < 0) b.minus[i] = -v[i];
        }
        b = sign_canonical(std::move(b));
        out.push_back(std::move(b));
    }
    std::sort(out.begin(), out.end(), [](const Binomial& a, const Binomial& b) {
        return std::make_pair(a.plus, a.minus) < std::make_pair(b.plus, b.minus);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Binomial& a, const Binomial& b) {
                              return a.plus == b.plus && a.minus == b.minus;
                          }),
              out.end());
    return out;
}

}  // namespace toric::oracle
