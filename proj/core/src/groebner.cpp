#include "toricgb/groebner.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace toric {

std::string to_string(OrderProvenance p) {
    switch (p) {
        case OrderProvenance::RevlexDerived: return "revlex-derived";
        case OrderProvenance::LinearQuotient: return "linear-quotient";
        case OrderProvenance::UserSupplied: return "user-supplied";
    }
    return "?";
}

TermOrder TermOrder::lex(std::vector<int> priority, OrderProvenance prov,
                         std::optional<std::vector<int>> vertex_order) {
    TermOrder t;
    size_t m = priority.size();
    t.rank_.assign(m, -1);
    for (size_t i = 0; i < m; ++i) {
        int e = priority[i];
        if (e < 0 || static_cast<size_t>(e) >= m || t.rank_[static_cast<size_t>(e)] != -1)
            throw Error("term order priority is not a permutation of the edge indices");
        t.rank_[static_cast<size_t>(e)] = static_cast<int>(i);
    }
    t.priority = std::move(priority);
    t.provenance = prov;
    t.vertex_order = std::move(vertex_order);
    return t;
}

int TermOrder::compare(const std::vector<int>& a, const std::vector<int>& b) const {
    if (a.size() != priority.size() || b.size() != priority.size())
        throw Error("term order arity mismatch");
    for (int e : priority) {
        int d = a[static_cast<size_t>(e)] - b[static_cast<size_t>(e)];
        if (d != 0) return d > 0 ? 1 : -1;
    }
    return 0;
}

Binomial orient(Binomial b, const TermOrder& tau) {
    int c = tau.compare(b.plus, b.minus);
    if (c == 0) throw Error("cannot orient a zero binomial");
    if (c < 0) std::swap(b.plus, b.minus);
    return b;
}

namespace {

bool divides(const std::vector<int>& d, const std::vector<int>& a) {
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] > a[i]) return false;
    return true;
}

// replace the d-part of a by t (monomial substitution a / d * t)
void substitute(std::vector<int>& a, const std::vector<int>& d, const std::vector<int>& t) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += t[i] - d[i];
}

bool coprime(const std::vector<int>& a, const std::vector<int>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

// Common monomial factors of the two sides never lie in a toric ideal (it is
// prime and contains no monomials), so they cancel without changing the ideal.
Binomial cancel_common(Binomial b) {
    for (size_t i = 0; i < b.plus.size(); ++i) {
        int c = std::min(b.plus[i], b.minus[i]);
        b.plus[i] -= c;
        b.minus[i] -= c;
    }
    return b;
}

Binomial spoly(const Binomial& f, const Binomial& g) {
    size_t m = f.plus.size();
    Binomial s;
    s.plus.resize(m);
    s.minus.resize(m);
    for (size_t i = 0; i < m; ++i) {
        int l = std::max(f.plus[i], g.plus[i]);
        s.plus[i] = l - f.plus[i] + f.minus[i];
        s.minus[i] = l - g.plus[i] + g.minus[i];
    }
    return s;
}

}  // namespace

std::optional<Binomial> normal_form(const Binomial& b, const std::vector<Binomial>& basis,
                                    const TermOrder& tau) {
    std::vector<int> a = b.plus, c = b.minus;
    // reduce the leading side to completion, re-orienting as it drops
    for (;;) {
        if (a == c) return std::nullopt;
        if (tau.compare(a, c) < 0) std::swap(a, c);
        bool reduced = false;
        for (const Binomial& f : basis) {
            if (divides(f.plus, a)) {
                substitute(a, f.plus, f.minus);
                reduced = true;
                break;
            }
        }
        if (!reduced) break;
    }
    // tail reduction
    for (;;) {
        bool reduced = false;
        for (const Binomial& f : basis) {
            if (divides(f.plus, c)) {
                substitute(c, f.plus, f.minus);
                reduced = true;
                break;
            }
        }
        if (!reduced) break;
    }
    if (a == c) return std::nullopt;
    return Binomial{std::move(a), std::move(c)};
}

GroebnerBasis reduced_groebner_basis(const Graph& g, std::vector<Binomial> gens,
                                     const TermOrder& tau) {
    size_t m = static_cast<size_t>(g.edge_count());
    if (tau.priority.size() != m) throw Error("term order does not match the graph's edge count");
    for (const Binomial& b : gens) {
        if (b.plus.size() != m || b.minus.size() != m)
            throw Error("generator arity mismatch: generators from a different graph");
        if (!kernel_member(g, b))
            throw Error("generator is not in the toric ideal of the given graph");
    }

    // deterministic input normalization
    std::vector<Binomial> input;
    {
        std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
        for (Binomial& b : gens) {
            Binomial nb = cancel_common(std::move(b));
            if (nb.plus == nb.minus) continue;
            nb = orient(std::move(nb), tau);
            if (seen.emplace(nb.plus, nb.minus).second) input.push_back(std::move(nb));
        }
        std::sort(input.begin(), input.end(), [](const Binomial& x, const Binomial& y) {
            int dx = x.degree_plus() + x.degree_minus();
            int dy = y.degree_plus() + y.degree_minus();
            if (dx != dy) return dx < dy;
            return std::make_pair(x.plus, x.minus) < std::make_pair(y.plus, y.minus);
        });
    }

    std::vector<Binomial> basis;
    // pair queue keyed by (lcm degree, lcm, i, j): normal selection strategy
    using PairKey = std::tuple<int, std::vector<int>, size_t, size_t>;
    std::set<PairKey> pairs;
    auto push_pairs = [&](size_t idx) {
        for (size_t i = 0; i < idx; ++i) {
            if (coprime(basis[i].plus, basis[idx].plus)) continue;  // product criterion
            std::vector<int> l(m);
            int deg = 0;
            for (size_t k = 0; k < m; ++k) {
                l[k] = std::max(basis[i].plus[k], basis[idx].plus[k]);
                deg += l[k];
            }
            pairs.emplace(deg, std::move(l), i, idx);
        }
    };
    auto add = [&](Binomial nb) {
        nb = orient(cancel_common(std::move(nb)), tau);
        basis.push_back(std::move(nb));
        push_pairs(basis.size() - 1);
    };

    for (const Binomial& b : input) {
        if (auto nf = normal_form(b, basis, tau)) add(std::move(*nf));
    }
    while (!pairs.empty()) {
        auto it = pairs.begin();
        size_t i = std::get<2>(*it), j = std::get<3>(*it);
        pairs.erase(it);
        Binomial s = spoly(basis[i], basis[j]);
        if (s.plus == s.minus) continue;
        if (auto nf = normal_form(s, basis, tau)) add(std::move(*nf));
    }

    // minimalize: leading terms must minimally generate the initial ideal
    std::vector<size_t> idx(basis.size());
    std::iota(idx.begin(), idx.end(), size_t{0});
    std::sort(idx.begin(), idx.end(), [&](size_t x, size_t y) {
        int c = tau.compare(basis[x].plus, basis[y].plus);
        if (c != 0) return c < 0;
        return x < y;
    });
    std::vector<Binomial> kept;
    for (size_t x : idx) {
        bool redundant = false;
        for (const Binomial& f : kept)
            if (divides(f.plus, basis[x].plus)) redundant = true;
        if (!redundant) kept.push_back(basis[x]);
    }

    // interreduce tails (leads are pairwise non-dividing, so tops are stable)
    for (Binomial& f : kept) {
        for (;;) {
            bool reduced = false;
            for (const Binomial& r : kept) {
                if (&r == &f) continue;
                if (divides(r.plus, f.minus)) {
                    substitute(f.minus, r.plus, r.minus);
                    reduced = true;
                    break;
                }
            }
            if (!reduced) break;
        }
    }

    GroebnerBasis gb;
    gb.elements = std::move(kept);
    gb.order = tau;
    gb.reduced = true;
    return gb;
}

SquarefreeReport squarefree_report(const GroebnerBasis& gb) {
    if (!gb.reduced) throw Error("squarefree_report requires a reduced basis");
    SquarefreeReport rep;
    rep.initial_squarefree = true;
    rep.doubly_squarefree = true;
    for (const Binomial& b : gb.elements) {
        for (size_t i = 0; i < b.plus.size(); ++i) {
            if (b.plus[i] >= 2) {
                rep.initial_squarefree = false;
                rep.offenders.push_back({b, false, static_cast<int>(i)});
            }
            if (b.minus[i] >= 2) rep.offenders.push_back({b, true, static_cast<int>(i)});
        }
    }
    rep.doubly_squarefree = rep.offenders.empty();
    return rep;
}

bool is_circuit_basis(const GroebnerBasis& gb, const std::vector<Binomial>& circuits) {
    std::set<std::pair<std::vector<int>, std::vector<int>>> keys;
    for (const Binomial& c : circuits) {
        Binomial k = sign_canonical(c);
        keys.emplace(k.plus, k.minus);
    }
    for (const Binomial& b : gb.elements) {
        Binomial k = sign_canonical(b);
        if (!keys.count({k.plus, k.minus})) return false;
    }
    return true;
}

SelfCheckReport buchberger_self_check(const GroebnerBasis& gb,
                                      const std::vector<Binomial>& graver) {
    SelfCheckReport rep;
    rep.spairs_reduce_to_zero = true;
    for (size_t i = 0; i < gb.elements.size(); ++i) {
        for (size_t j = i + 1; j < gb.elements.size(); ++j) {
            Binomial s = spoly(gb.elements[i], gb.elements[j]);
            if (s.plus == s.minus) continue;
            if (normal_form(s, gb.elements, gb.order)) {
                rep.spairs_reduce_to_zero = false;
                break;
            }
        }
        if (!rep.spairs_reduce_to_zero) break;
    }
    rep.graver_reduces_to_zero = true;
    for (const Binomial& v : graver) {
        if (normal_form(v, gb.elements, gb.order)) {
            rep.graver_reduces_to_zero = false;
            break;
        }
    }
    return rep;
}

}  // namespace toric
