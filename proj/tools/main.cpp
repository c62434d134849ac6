#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "toricgb/cli.hpp"

namespace {

int env_max_edges() {
    if (const char* s = std::getenv("TORIC_MAX_EDGES")) {
        try {
            int v = std::stoi(s);
            if (v >= 1 && v <= 31) return v;
        } catch (...) {
        }
        std::cerr << "warning: ignoring invalid TORIC_MAX_EDGES value\n";
    }
    return 14;
}

std::vector<int> parse_int_list(const std::string& csv, const char* what) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos <= csv.size()) {
        size_t comma = csv.find(',', pos);
        std::string tok = csv.substr(pos, comma == std::string::npos ? std::string::npos
                                                                     : comma - pos);
        if (tok.empty()) throw toric::Error(std::string("empty entry in ") + what);
        out.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toric ideals of graphs: Groebner, Graver and linear-quotient toolkit"};
    app.require_subcommand(1);
    int max_edges = env_max_edges();

    std::string file, json_out;

    auto* analyze = app.add_subcommand("analyze", "graph predicates: gap-free, chordal "
                                                  "complement, k-step linearity, odd cycle "
                                                  "condition");
    analyze->add_option("file", file, "edge-list file")->required();
    analyze->add_option("--json", json_out, "write a JSON report to this path");

    std::string vertex_order_csv, edge_perm_csv;
    bool linear_quotient = false;
    auto* groebner = app.add_subcommand("groebner", "reduced Groebner basis of the toric "
                                                    "ideal with a squarefree report");
    groebner->add_option("file", file, "edge-list file")->required();
    groebner->add_option("--vertex-order", vertex_order_csv,
                         "vertex permutation v1,..,vn; edges ordered by graded revlex, "
                         "then lex with y_1 > ... > y_m");
    groebner->add_flag("--linear-quotient", linear_quotient,
                       "derive a verified linear quotient ordering and use lex with "
                       "y_1 < ... < y_m");
    groebner->add_option("--edge-permutation", edge_perm_csv,
                         "explicit edge priority i1,..,im (highest first)");
    groebner->add_option("--json", json_out, "write a JSON report to this path");

    auto* circuits = app.add_subcommand("circuits", "circuit binomials of the toric ideal");
    circuits->add_option("file", file, "edge-list file")->required();
    circuits->add_option("--json", json_out, "write a JSON report to this path");

    auto* graver = app.add_subcommand("graver", "Graver basis (primitive walk binomials)");
    graver->add_option("file", file, "edge-list file")->required();
    graver->add_option("--json", json_out, "write a JSON report to this path");

    std::string tag;
    toric::VerifyOptions vopt;
    auto* verify = app.add_subcommand("verify", "seeded property suites (exit 1 on failure)");
    verify->add_option("tag", tag,
                       "one of: onesteplin, linres, linchar, inclusions, graver-oracle, "
                       "dual-verifier")
        ->required();
    verify->add_option("--trials", vopt.trials, "number of trials");
    verify->add_option("--seed", vopt.seed, "master seed");
    verify->add_option("--max-vertices", vopt.max_vertices, "largest graph size sampled");
    verify->add_option("--min-vertices", vopt.min_vertices, "smallest graph size sampled");
    verify->add_option("--failure-dir", vopt.failure_dir, "where replay files are written");
    verify->add_option("--json", json_out, "write the full JSON report to this path");

    CLI11_PARSE(app, argc, argv);

    auto opt_json = [&]() {
        return json_out.empty() ? std::nullopt : std::optional<std::string>(json_out);
    };

    try {
        if (analyze->parsed()) return toric::run_analyze(file, opt_json(), std::cout, std::cerr);
        if (circuits->parsed()) return toric::run_circuits(file, opt_json(), std::cout, std::cerr);
        if (graver->parsed())
            return toric::run_graver(file, opt_json(), max_edges, std::cout, std::cerr);
        if (groebner->parsed()) {
            toric::GroebnerCmdOptions gopt;
            gopt.path = file;
            gopt.max_edges = max_edges;
            gopt.linear_quotient = linear_quotient;
            if (!vertex_order_csv.empty())
                gopt.vertex_order = parse_int_list(vertex_order_csv, "--vertex-order");
            if (!edge_perm_csv.empty())
                gopt.edge_permutation = parse_int_list(edge_perm_csv, "--edge-permutation");
            return toric::run_groebner(gopt, std::cout, std::cerr);
        }
        if (verify->parsed()) {
            vopt.tag = tag;
            vopt.max_edges = max_edges;
            return toric::run_verify_cmd(vopt, opt_json(), std::cout, std::cerr);
        }
    } catch (const toric::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
