#include <algorithm>
#include <fstream>
#include <numeric>
#include <ostream>
#include <set>

#include <json.hpp>

#include "toricgb/cli.hpp"
#include "toricgb/oracle.hpp"

namespace toric {

namespace {

using nlohmann::json;

json edges_json(const Graph& g) {
    json arr = json::array();
    for (const Edge& e : g.edges()) arr.push_back(json::array({e.u + 1, e.v + 1}));
    return arr;
}

json binomial_json(const Binomial& b) {
    return json{{"plus", b.plus}, {"minus", b.minus}, {"pretty", pretty(b)}};
}

json order_json(const TermOrder& t) {
    json pri = json::array();
    for (int e : t.priority) pri.push_back(e + 1);
    json j{{"kind", "lex"}, {"priority", pri}, {"provenance", to_string(t.provenance)}};
    if (t.vertex_order) {
        json vo = json::array();
        for (int v : *t.vertex_order) vo.push_back(v + 1);
        j["vertex_order"] = vo;
    } else {
        j["vertex_order"] = nullptr;
    }
    return j;
}

std::string edge_permutation_spec(const TermOrder& t) {
    std::string s;
    for (size_t i = 0; i < t.priority.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t.priority[i] + 1);
    }
    return s;
}

std::set<std::pair<std::vector<int>, std::vector<int>>> canonical_set(
    const std::vector<Binomial>& bs) {
    std::set<std::pair<std::vector<int>, std::vector<int>>> out;
    for (const Binomial& b : bs) {
        Binomial c = sign_canonical(b);
        out.emplace(std::move(c.plus), std::move(c.minus));
    }
    return out;
}

void write_failure_file(const VerifyOptions& opt, int trial, const Graph& g,
                        const std::string& order_spec, const std::string& note) {
    if (!opt.write_failures) return;
    std::string path = opt.failure_dir + "/" + opt.tag + "-failure-trial" +
                       std::to_string(trial) + ".edges";
    std::ofstream f(path);
    f << "# verify failure: suite " << opt.tag << ", trial " << trial << "\n";
    f << "# " << note << "\n";
    if (!order_spec.empty())
        f << "# replay: toricgb groebner " << path << " --edge-permutation " << order_spec
          << "\n";
    for (const Edge& e : g.edges()) f << (e.u + 1) << " " << (e.v + 1) << "\n";
}

struct TrialContext {
    const VerifyOptions& opt;
    int trial = 0;
    uint64_t trial_seed = 0;
    json detail = json::object();
    bool pass = true;
    SuiteReport& report;

    void fail(const Graph& g, const std::string& order_spec, const std::string& why,
              const json& payload = nullptr) {
        pass = false;
        json cx{{"edges", edges_json(g)}, {"reason", why}};
        if (!order_spec.empty()) cx["order_spec"] = "--edge-permutation " + order_spec;
        if (!payload.is_null()) cx["payload"] = payload;
        detail["counterexample"] = cx;
    }
};

// Shared Groebner-pipeline checks on one (graph, order) pair; updates the
// report's odd-cycle-condition and self-check counters.
struct GroebnerTrialResult {
    GroebnerBasis basis;
    SquarefreeReport squarefree;
    std::vector<PrimitiveWalkRecord> graver;
};

GroebnerTrialResult run_groebner_pipeline(const Graph& g, const TermOrder& tau,
                                          const VerifyOptions& opt, TrialContext& ctx) {
    GroebnerTrialResult r;
    GraverOptions gopt;
    gopt.max_edges = opt.max_edges;
    r.graver = enumerate_graver_walks(g, gopt);
    std::vector<Binomial> gens;
    gens.reserve(r.graver.size());
    for (const auto& rec : r.graver) gens.push_back(rec.binomial);
    r.basis = reduced_groebner_basis(g, gens, tau);
    r.squarefree = squarefree_report(r.basis);

    // Buchberger certificate (independent of the engine's own bookkeeping)
    ctx.report.self_checks += 1;
    SelfCheckReport sc = buchberger_self_check(r.basis, gens);
    ctx.detail["checks"]["self_check"] = sc.ok();
    if (!sc.ok()) {
        ctx.report.self_check_failures += 1;
        ctx.fail(g, edge_permutation_spec(tau),
                 sc.spairs_reduce_to_zero ? "a Graver element does not reduce to zero"
                                          : "an S-pair does not reduce to zero");
    }

    // squarefree initial ideal found => the odd cycle condition must hold
    if (g.connected() && r.squarefree.initial_squarefree) {
        ctx.report.occ_checked += 1;
        OddCycleConditionResult occ = odd_cycle_condition(g);
        ctx.detail["checks"]["odd_cycle_condition"] = occ.holds;
        if (!occ.holds) {
            ctx.report.occ_violations += 1;
            ctx.fail(g, edge_permutation_spec(tau),
                     "squarefree initial ideal found but the odd cycle condition fails");
        }
    }
    return r;
}

// For every type-(iii) Graver walk, every edge satisfying the bow-tie lemma
// hypotheses must yield a verified type-(i)/(ii) witness walk.
void check_mainlemma_instances(const Graph& g, const TermOrder& tau,
                               const std::vector<PrimitiveWalkRecord>& graver,
                               TrialContext& ctx) {
    int instances = 0;
    for (const auto& rec : graver) {
        std::set<int> distinct(rec.walk.vertices.begin(), rec.walk.vertices.end() - 1);
        if (static_cast<int>(distinct.size()) == rec.walk.length()) continue;  // type (i)
        WalkClassification cls = classify_primitive_walk(g, rec.walk, false);
        if (walk_type(cls) != WalkType::OddCyclesWithPaths) continue;
        for (const MainLemmaCandidate& cand : mainlemma_candidates(g, cls, tau)) {
            ++instances;
            try {
                (void)mainlemma_witness(g, rec.walk, tau, cand.e_tilde);
            } catch (const Error& e) {
                ctx.fail(g, edge_permutation_spec(tau),
                         std::string("mainlemma instance failed: ") + e.what(),
                         binomial_json(rec.binomial));
                return;
            }
        }
    }
    ctx.detail["checks"]["mainlemma_instances"] = instances;
}

TermOrder random_lex_order(Rng& rng, int m) {
    std::vector<int> pri(static_cast<size_t>(m));
    std::iota(pri.begin(), pri.end(), 0);
    rng.shuffle(pri);
    return TermOrder::lex(std::move(pri), OrderProvenance::UserSupplied);
}

std::vector<int> random_vertex_order(Rng& rng, int n) {
    std::vector<int> vo(static_cast<size_t>(n));
    std::iota(vo.begin(), vo.end(), 0);
    rng.shuffle(vo);
    return vo;
}

}  // namespace

SuiteReport run_verify(const VerifyOptions& opt) {
    static const std::set<std::string> known{"onesteplin",   "linres",       "linchar",
                                             "inclusions",   "graver-oracle", "dual-verifier"};
    if (!known.count(opt.tag)) throw Error("unknown verify suite tag: " + opt.tag);
    if (opt.min_vertices < 2 || opt.max_vertices < opt.min_vertices)
        throw Error("verify: bad vertex bounds");
    if (opt.max_vertices > 12)
        throw Error("verify: max vertices bound is 12, got " + std::to_string(opt.max_vertices));
    if (opt.max_edges > 31) throw Error("verify: edge bound must stay below 32");

    SuiteReport report;
    report.tag = opt.tag;
    report.trials = opt.trials;

    Rng master(opt.seed);
    json results = json::array();

    for (int t = 0; t < opt.trials; ++t) {
        uint64_t trial_seed = master.next();
        TrialContext ctx{opt, t, trial_seed, json::object(), true, report};
        ctx.detail["trial"] = t;
        ctx.detail["seed"] = trial_seed;
        ctx.detail["checks"] = json::object();
        int n = opt.min_vertices +
                Rng(trial_seed ^ 0x5eedu).below(opt.max_vertices - opt.min_vertices + 1);

        try {
            if (opt.tag == "onesteplin") {
                FamilyOptions fo{n, trial_seed, opt.max_edges, 10000};
                GeneratedGraph gg = generate_family(Family::GapFree, fo);
                const Graph& g = gg.graph;
                Rng rng(trial_seed ^ 0x0De5ull);
                std::vector<int> vo = random_vertex_order(rng, g.vertex_count());
                EdgeOrdering ord = derive_edge_order(g, vo);
                TermOrder tau =
                    TermOrder::lex(ord.sequence, OrderProvenance::RevlexDerived, vo);
                ctx.detail["family"] = to_string(gg.family);
                ctx.detail["n"] = g.vertex_count();
                ctx.detail["m"] = g.edge_count();
                ctx.detail["edges"] = edges_json(g);
                ctx.detail["order"] = order_json(tau);

                GroebnerTrialResult res = run_groebner_pipeline(g, tau, opt, ctx);
                ctx.detail["checks"]["initial_squarefree"] = res.squarefree.initial_squarefree;
                if (!res.squarefree.initial_squarefree)
                    ctx.fail(g, edge_permutation_spec(tau), "initial ideal is not squarefree",
                             binomial_json(res.squarefree.offenders.front().element));
                bool circ = is_circuit_basis(res.basis, enumerate_circuits(g));
                ctx.detail["checks"]["circuit_basis"] = circ;
                if (!circ)
                    ctx.fail(g, edge_permutation_spec(tau),
                             "reduced basis contains a non-circuit");
                if (ctx.pass) check_mainlemma_instances(g, tau, res.graver, ctx);
            } else if (opt.tag == "linres") {
                FamilyOptions fo{n, trial_seed, opt.max_edges, 10000};
                GeneratedGraph gg = generate_family(Family::ChordalComplement, fo);
                const Graph& g = gg.graph;
                LinearQuotientSearchResult lqr = linear_quotient_ordering(g);
                if (!lqr.ordering) throw Error("chordal-complement graph without ordering");
                std::vector<int> pri(lqr.ordering->sequence.rbegin(),
                                     lqr.ordering->sequence.rend());
                TermOrder tau = TermOrder::lex(std::move(pri), OrderProvenance::LinearQuotient,
                                               lqr.ordering->vertex_order);
                ctx.detail["family"] = to_string(gg.family);
                ctx.detail["n"] = g.vertex_count();
                ctx.detail["m"] = g.edge_count();
                ctx.detail["edges"] = edges_json(g);
                ctx.detail["order"] = order_json(tau);
                ctx.detail["ordering_provenance"] = to_string(lqr.ordering->provenance);

                GroebnerTrialResult res = run_groebner_pipeline(g, tau, opt, ctx);
                ctx.detail["checks"]["doubly_squarefree"] = res.squarefree.doubly_squarefree;
                if (!res.squarefree.doubly_squarefree)
                    ctx.fail(g, edge_permutation_spec(tau),
                             "reduced basis is not doubly squarefree",
                             binomial_json(res.squarefree.offenders.front().element));
            } else if (opt.tag == "linchar") {
                FamilyOptions fo{n, trial_seed, opt.max_edges, 10000};
                GeneratedGraph gg = generate_family(Family::ChordalComplement, fo);
                const Graph& g = gg.graph;
                ctx.detail["family"] = to_string(gg.family);
                ctx.detail["n"] = g.vertex_count();
                ctx.detail["m"] = g.edge_count();
                ctx.detail["edges"] = edges_json(g);
                PowerLinearQuotientReport rep = power_linear_quotients(g, 3);
                json entries = json::array();
                for (const auto& e : rep.entries)
                    entries.push_back(json{{"k", e.k},
                                           {"pass", e.pass},
                                           {"used_fallback", e.used_fallback}});
                ctx.detail["checks"]["powers"] = entries;
                if (!rep.applicable || !rep.all_pass())
                    ctx.fail(g, "", "a power of the edge ideal failed linear quotients");
            } else if (opt.tag == "inclusions") {
                FamilyOptions fo{n, trial_seed, std::min(12, opt.max_edges), 10000};
                GeneratedGraph gg = generate_family(Family::Arbitrary, fo);
                const Graph& g = gg.graph;
                ctx.detail["family"] = to_string(gg.family);
                ctx.detail["n"] = g.vertex_count();
                ctx.detail["m"] = g.edge_count();
                ctx.detail["edges"] = edges_json(g);
                GraverOptions gopt;
                gopt.max_edges = opt.max_edges;
                std::vector<Binomial> graver = enumerate_graver(g, gopt);
                auto graver_set = canonical_set(graver);
                auto circuits = enumerate_circuits(g);
                bool circ_in = true;
                for (const Binomial& c : circuits) {
                    Binomial k = sign_canonical(c);
                    if (!graver_set.count({k.plus, k.minus})) circ_in = false;
                }
                ctx.detail["checks"]["circuits_in_graver"] = circ_in;
                if (!circ_in) ctx.fail(g, "", "a circuit is missing from the Graver basis");

                Rng rng(trial_seed ^ 0x7A11ull);
                bool rgb_in = true;
                for (int k = 0; k < 10 && ctx.pass; ++k) {
                    TermOrder tau = random_lex_order(rng, g.edge_count());
                    GroebnerBasis gb = reduced_groebner_basis(g, graver, tau);
                    ctx.report.self_checks += 1;
                    SelfCheckReport sc = buchberger_self_check(gb, graver);
                    if (!sc.ok()) {
                        ctx.report.self_check_failures += 1;
                        ctx.fail(g, edge_permutation_spec(tau), "self-check failed");
                        break;
                    }
                    for (const Binomial& b : gb.elements) {
                        Binomial key = sign_canonical(b);
                        if (!graver_set.count({key.plus, key.minus})) {
                            rgb_in = false;
                            ctx.fail(g, edge_permutation_spec(tau),
                                     "reduced basis element outside the Graver basis",
                                     binomial_json(b));
                            break;
                        }
                    }
                    SquarefreeReport sq = squarefree_report(gb);
                    if (g.connected() && sq.initial_squarefree) {
                        ctx.report.occ_checked += 1;
                        if (!odd_cycle_condition(g).holds) {
                            ctx.report.occ_violations += 1;
                            ctx.fail(g, edge_permutation_spec(tau),
                                     "squarefree initial ideal but odd cycle condition fails");
                        }
                    }
                }
                ctx.detail["checks"]["rgb_in_graver"] = rgb_in;
            } else if (opt.tag == "graver-oracle") {
                FamilyOptions fo{n, trial_seed, std::min(10, opt.max_edges), 10000};
                GeneratedGraph gg = generate_family(Family::Arbitrary, fo);
                const Graph& g = gg.graph;
                ctx.detail["family"] = to_string(gg.family);
                ctx.detail["n"] = g.vertex_count();
                ctx.detail["m"] = g.edge_count();
                ctx.detail["edges"] = edges_json(g);
                GraverOptions gopt;
                gopt.max_edges = opt.max_edges;
                auto walk_route = canonical_set(enumerate_graver(g, gopt));
                auto oracle_route = canonical_set(oracle::graver_by_conformal_minimality(g));
                bool equal = walk_route == oracle_route;
                ctx.detail["checks"]["oracle_equal"] = equal;
                ctx.detail["checks"]["graver_size"] = static_cast<int>(walk_route.size());
                if (!equal) {
                    json diff = json::array();
                    for (const auto& [p, m2] : walk_route)
                        if (!oracle_route.count({p, m2}))
                            diff.push_back(binomial_json(Binomial{p, m2}));
                    for (const auto& [p, m2] : oracle_route)
                        if (!walk_route.count({p, m2}))
                            diff.push_back(binomial_json(Binomial{p, m2}));
                    ctx.fail(g, "", "walk enumeration disagrees with the conformal oracle",
                             diff);
                }
            } else if (opt.tag == "dual-verifier") {
                FamilyOptions fo{n, trial_seed, 0, 10000};
                GeneratedGraph gg = generate_family(Family::Arbitrary, fo);
                const Graph& g = gg.graph;
                ctx.detail["family"] = to_string(gg.family);
                ctx.detail["n"] = g.vertex_count();
                ctx.detail["m"] = g.edge_count();
                ctx.detail["edges"] = edges_json(g);
                Rng rng(trial_seed ^ 0xD0A1ull);
                std::vector<int> seq(static_cast<size_t>(g.edge_count()));
                std::iota(seq.begin(), seq.end(), 0);
                rng.shuffle(seq);
                EdgeOrdering ord{seq, EdgeOrderingProvenance::UserSupplied, std::nullopt};
                PrefixGapFreeCheck a = prefix_gap_free(g, ord);
                std::vector<std::vector<int>> mons;
                for (int e : seq) {
                    std::vector<int> mon(static_cast<size_t>(g.vertex_count()), 0);
                    mon[static_cast<size_t>(g.edge(e).u)] = 1;
                    mon[static_cast<size_t>(g.edge(e).v)] = 1;
                    mons.push_back(std::move(mon));
                }
                LinearQuotientCheck b = verify_linear_quotients(mons);
                bool agree = (a.ok == b.ok) && (a.ok || a.failing_prefix == b.failing_index);
                ctx.detail["checks"]["prefix_gap_free"] = a.ok;
                ctx.detail["checks"]["linear_quotients"] = b.ok;
                ctx.detail["checks"]["agree"] = agree;
                if (!a.ok) ctx.detail["checks"]["failing_index"] = b.failing_index;
                if (!agree)
                    ctx.fail(g, "", "prefix gap-freeness disagrees with colon verification");
            }
        } catch (const Error& e) {
            ctx.fail(Graph{}, "", std::string("trial aborted: ") + e.what());
            ctx.detail["counterexample"]["edges"] = nullptr;
        }

        ctx.detail["pass"] = ctx.pass;
        if (!ctx.detail.contains("counterexample")) ctx.detail["counterexample"] = nullptr;
        if (ctx.pass) {
            ++report.passed;
        } else {
            ++report.failed;
            if (ctx.detail["counterexample"].is_object() &&
                ctx.detail["counterexample"].contains("edges") &&
                ctx.detail["counterexample"]["edges"].is_array()) {
                // standalone replay file
                std::string spec;
                if (ctx.detail["counterexample"].contains("order_spec")) {
                    std::string s = ctx.detail["counterexample"]["order_spec"];
                    spec = s.substr(s.find(' ') != std::string::npos ? s.find(' ') + 1 : 0);
                }
                // reconstruct the graph from the recorded edges
                std::vector<Edge> es;
                int maxv = 0;
                for (const auto& pr : ctx.detail["counterexample"]["edges"]) {
                    int a = pr[0].get<int>(), b = pr[1].get<int>();
                    es.emplace_back(a - 1, b - 1);
                    maxv = std::max({maxv, a, b});
                }
                write_failure_file(opt, t, Graph(maxv, es), spec,
                                   ctx.detail["counterexample"]["reason"].get<std::string>());
            }
        }
        results.push_back(std::move(ctx.detail));
    }

    json doc{{"command", "verify"},
             {"tag", opt.tag},
             {"trials", opt.trials},
             {"seed", opt.seed},
             {"bounds", json{{"min_vertices", opt.min_vertices},
                             {"max_vertices", opt.max_vertices},
                             {"max_edges", opt.max_edges}}},
             {"passed", report.passed},
             {"failed", report.failed},
             {"occ", json{{"checked", report.occ_checked}, {"violations", report.occ_violations}}},
             {"self_checks",
              json{{"runs", report.self_checks}, {"failures", report.self_check_failures}}},
             {"results", std::move(results)}};
    report.json = doc.dump(2) + "\n";
    return report;
}

}  // namespace toric
