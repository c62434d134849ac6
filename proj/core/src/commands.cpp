#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "toricgb/cli.hpp"

namespace toric {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

json edges_json(const Graph& g) {
    json arr = json::array();
    for (const Edge& e : g.edges()) arr.push_back(json::array({e.u + 1, e.v + 1}));
    return arr;
}

json cycle_json(const CycleWitness& c) {
    json arr = json::array();
    for (int v : c.vertices) arr.push_back(v + 1);
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

json input_json(const ParsedGraph& pg) {
    json j{{"vertices", pg.graph.vertex_count()},
           {"edges", edges_json(pg.graph)},
           {"relabeled", pg.relabeled}};
    if (pg.relabeled) {
        json lbl = json::array();
        for (int v : pg.original_labels) lbl.push_back(v);
        j["original_labels"] = lbl;
    }
    return j;
}

void maybe_write_json(const std::optional<std::string>& path, const json& doc,
                      std::ostream& err) {
    if (!path) return;
    std::ofstream f(*path);
    if (!f) {
        err << "cannot write JSON to " << *path << "\n";
        return;
    }
    f << doc.dump(2) << "\n";
}

ParsedGraph load_graph(const std::string& path, std::ostream& out) {
    ParsedGraph pg = parse_graph(read_file(path));
    if (pg.relabeled) {
        out << "note: vertices relabeled to 1.." << pg.graph.vertex_count()
            << " (input labels:";
        for (int v : pg.original_labels) out << " " << v;
        out << ")\n";
    }
    return pg;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

}  // namespace

int run_analyze(const std::string& path, const std::optional<std::string>& json_out,
                std::ostream& out, std::ostream& err) {
    ParsedGraph pg;
    try {
        pg = load_graph(path, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    const Graph& g = pg.graph;

    json doc{{"command", "analyze"}, {"input", input_json(pg)}};

    GapFreeResult gf = is_gap_free(g);
    doc["gap_free"] = json{{"value", gf.gap_free}};
    out << "gap-free: " << yesno(gf.gap_free);
    if (gf.witness) {
        json w = json::array({json::array({gf.witness->first.u + 1, gf.witness->first.v + 1}),
                              json::array({gf.witness->second.u + 1, gf.witness->second.v + 1})});
        doc["gap_free"]["witness"] = w;
        out << "  (gap: {" << gf.witness->first.u + 1 << "," << gf.witness->first.v + 1
            << "} and {" << gf.witness->second.u + 1 << "," << gf.witness->second.v + 1 << "})";
    } else {
        doc["gap_free"]["witness"] = nullptr;
    }
    out << "\n";

    ChordalResult ch = is_chordal(complement(g));
    doc["complement_chordal"] = json{{"value", ch.chordal}};
    out << "complement chordal (linear resolution): " << yesno(ch.chordal);
    if (ch.chordal) {
        json peo = json::array();
        for (int v : ch.peo) peo.push_back(v + 1);
        doc["complement_chordal"]["peo"] = peo;
        out << "  (PEO of complement:";
        for (int v : ch.peo) out << " " << v + 1;
        out << ")";
    } else if (ch.witness) {
        doc["complement_chordal"]["witness"] = cycle_json(*ch.witness);
        out << "  (chordless cycle in complement:";
        for (int v : ch.witness->vertices) out << " " << v + 1;
        out << ")";
    }
    out << "\n";

    KStepLinearity ks = k_step_linearity(g);
    if (ks.linear_resolution) {
        doc["k_step_linearity"] = "infinity";
        out << "k-step linearity: infinity (linear resolution)\n";
    } else {
        doc["k_step_linearity"] = ks.k;
        out << "k-step linearity: " << ks.k << "\n";
    }

    bool conn = g.connected();
    doc["connected"] = conn;
    out << "connected: " << yesno(conn) << "\n";
    if (conn) {
        OddCycleConditionResult occ = odd_cycle_condition(g);
        doc["odd_cycle_condition"] = json{{"applicable", true}, {"value", occ.holds}};
        out << "odd cycle condition: " << yesno(occ.holds);
        if (occ.witness) {
            doc["odd_cycle_condition"]["witness"] =
                json::array({cycle_json(occ.witness->first), cycle_json(occ.witness->second)});
            out << "  (unlinked odd cycles:";
            for (int v : occ.witness->first.vertices) out << " " << v + 1;
            out << " |";
            for (int v : occ.witness->second.vertices) out << " " << v + 1;
            out << ")";
        }
        out << "\n";
    } else {
        json comps = json::array();
        for (const auto& c : g.components()) {
            json one = json::array();
            for (int v : c) one.push_back(v + 1);
            comps.push_back(one);
        }
        doc["components"] = comps;
        doc["odd_cycle_condition"] = json{{"applicable", false}};
        out << "odd cycle condition: not applicable (graph is disconnected)\n";
    }

    maybe_write_json(json_out, doc, err);
    return 0;
}

namespace {

TermOrder order_from_options(const Graph& g, const GroebnerCmdOptions& opt) {
    int provided = (opt.vertex_order ? 1 : 0) + (opt.linear_quotient ? 1 : 0) +
                   (opt.edge_permutation ? 1 : 0);
    if (provided > 1) throw Error("choose exactly one of --vertex-order, "
                                  "--linear-quotient, --edge-permutation");
    if (opt.edge_permutation) {
        std::vector<int> pri;
        for (int e : *opt.edge_permutation) {
            if (e < 1 || e > g.edge_count())
                throw Error("edge permutation entry out of range: " + std::to_string(e));
            pri.push_back(e - 1);
        }
        return TermOrder::lex(std::move(pri), OrderProvenance::UserSupplied);
    }
    if (opt.linear_quotient) {
        LinearQuotientSearchResult lqr = linear_quotient_ordering(g);
        if (!lqr.ordering) {
            std::string msg =
                "refusing --linear-quotient: the complement is not chordal, so the edge "
                "ideal has no linear resolution (Froeberg) and no linear quotient ordering "
                "exists";
            if (lqr.obstruction) {
                msg += "; chordless complement cycle:";
                for (int v : lqr.obstruction->vertices) msg += " " + std::to_string(v + 1);
            }
            throw Error(msg);
        }
        // y_1 < y_2 < ... < y_m over the quotient ordering: reversed priority
        std::vector<int> pri(lqr.ordering->sequence.rbegin(), lqr.ordering->sequence.rend());
        return TermOrder::lex(std::move(pri), OrderProvenance::LinearQuotient,
                              lqr.ordering->vertex_order);
    }
    std::vector<int> vo;
    if (opt.vertex_order) {
        std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
        for (int v : *opt.vertex_order) {
            if (v < 1 || v > g.vertex_count() || seen[static_cast<size_t>(v - 1)])
                throw Error("vertex order must be a permutation of 1.." +
                            std::to_string(g.vertex_count()));
            seen[static_cast<size_t>(v - 1)] = 1;
            vo.push_back(v - 1);
        }
        if (static_cast<int>(vo.size()) != g.vertex_count())
            throw Error("vertex order must list every vertex");
    } else {
        for (int v = 0; v < g.vertex_count(); ++v) vo.push_back(v);  // default 1 > 2 > ...
    }
    EdgeOrdering ord = derive_edge_order(g, vo);
    return TermOrder::lex(ord.sequence, OrderProvenance::RevlexDerived, vo);
}

}  // namespace

int run_groebner(const GroebnerCmdOptions& opt, std::ostream& out, std::ostream& err) {
    ParsedGraph pg;
    TermOrder tau;
    try {
        pg = load_graph(opt.path, out);
        tau = order_from_options(pg.graph, opt);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    const Graph& g = pg.graph;

    try {
        GraverOptions gopt;
        gopt.max_edges = opt.max_edges;
        std::vector<Binomial> graver = enumerate_graver(g, gopt);
        GroebnerBasis gb = reduced_groebner_basis(g, graver, tau);
        SquarefreeReport sq = squarefree_report(gb);
        std::vector<Binomial> circuits = enumerate_circuits(g);
        bool all_circuits = is_circuit_basis(gb, circuits);

        json basis = json::array();
        for (const Binomial& b : gb.elements) basis.push_back(binomial_json(b));
        json offenders = json::array();
        for (const auto& off : sq.offenders)
            offenders.push_back(json{{"pretty", pretty(off.element)},
                                     {"side", off.trailing_side ? "trailing" : "leading"},
                                     {"edge", off.edge + 1}});
        json doc{{"command", "groebner"},
                 {"input", input_json(pg)},
                 {"order", order_json(tau)},
                 {"basis", basis},
                 {"squarefree",
                  json{{"initial", sq.initial_squarefree},
                       {"doubly", sq.doubly_squarefree},
                       {"offenders", offenders}}},
                 {"circuit_membership", json{{"all_circuits", all_circuits}}}};

        out << "graph: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
        out << "order: lex (" << to_string(tau.provenance) << "), priority";
        for (int e : tau.priority) out << " y" << e + 1;
        out << "\n";
        out << "reduced Groebner basis (" << gb.elements.size() << " elements):\n";
        for (const Binomial& b : gb.elements) out << "  " << pretty(b) << "\n";
        out << "initial ideal squarefree: " << yesno(sq.initial_squarefree) << "\n";
        out << "doubly squarefree: " << yesno(sq.doubly_squarefree) << "\n";
        if (!sq.offenders.empty()) {
            out << "offenders:\n";
            for (const auto& off : sq.offenders)
                out << "  " << pretty(off.element) << "  ("
                    << (off.trailing_side ? "trailing" : "leading") << " side, edge y"
                    << off.edge + 1 << ")\n";
        }
        out << "circuit membership: "
            << (all_circuits ? "every basis element is a circuit"
                             : "basis contains a non-circuit")
            << "\n";
        maybe_write_json(opt.json_out, doc, err);
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int run_circuits(const std::string& path, const std::optional<std::string>& json_out,
                 std::ostream& out, std::ostream& err) {
    try {
        ParsedGraph pg = load_graph(path, out);
        std::vector<Binomial> circuits = enumerate_circuits(pg.graph);
        json arr = json::array();
        for (const Binomial& b : circuits) arr.push_back(binomial_json(b));
        json doc{{"command", "circuits"}, {"input", input_json(pg)}, {"circuits", arr}};
        out << circuits.size() << " circuits:\n";
        for (const Binomial& b : circuits) out << "  " << pretty(b) << "\n";
        maybe_write_json(json_out, doc, err);
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int run_graver(const std::string& path, const std::optional<std::string>& json_out,
               int max_edges, std::ostream& out, std::ostream& err) {
    try {
        ParsedGraph pg = load_graph(path, out);
        GraverOptions gopt;
        gopt.max_edges = max_edges;
        std::vector<Binomial> graver = enumerate_graver(pg.graph, gopt);
        json arr = json::array();
        for (const Binomial& b : graver) arr.push_back(binomial_json(b));
        json doc{{"command", "graver"}, {"input", input_json(pg)}, {"graver", arr}};
        out << graver.size() << " Graver basis elements:\n";
        for (const Binomial& b : graver) out << "  " << pretty(b) << "\n";
        maybe_write_json(json_out, doc, err);
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int run_verify_cmd(const VerifyOptions& opt, const std::optional<std::string>& json_out,
                   std::ostream& out, std::ostream& err) {
    try {
        SuiteReport rep = run_verify(opt);
        out << "suite " << rep.tag << ": " << rep.passed << "/" << rep.trials << " trials passed";
        if (rep.occ_checked > 0)
            out << "; odd-cycle-condition checks " << rep.occ_checked << " (violations "
                << rep.occ_violations << ")";
        if (rep.self_checks > 0)
            out << "; Buchberger self-checks " << rep.self_checks << " (failures "
                << rep.self_check_failures << ")";
        out << "\n";
        if (json_out) {
            std::ofstream f(*json_out);
            if (f)
                f << rep.json;
            else
                err << "cannot write JSON to " << *json_out << "\n";
        }
        if (!rep.all_pass()) {
            err << "suite " << rep.tag << " FAILED (" << rep.failed
                << " failing trials); replay files written to " << opt.failure_dir << "\n";
            return 1;
        }
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace toric
