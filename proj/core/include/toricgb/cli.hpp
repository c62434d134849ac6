#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "toricgb/graph.hpp"
#include "toricgb/groebner.hpp"
#include "toricgb/linres.hpp"

namespace toric {

/// Deterministic splitmix64 stream with portable bounded sampling; identical
/// sequences on every platform (std distributions are not).
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}
    uint64_t next();
    /// Uniform in [0, n), n >= 1.
    int below(int n);
    bool coin() { return (next() >> 63) != 0; }
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<size_t>(below(static_cast<int>(i)))]);
    }

private:
    uint64_t state_;
};

enum class Family { GapFree, ChordalComplement, Arbitrary, Multipartite };

std::string to_string(Family f);

struct FamilyOptions {
    int n = 6;
    uint64_t seed = 0;
    int max_edges = 0;  // 0 = unbounded
    int max_rejections = 10000;
};

struct GeneratedGraph {
    Graph graph;
    Family family = Family::Arbitrary;
    int requested_n = 0;
    int actual_n = 0;
    int rejections = 0;
    std::vector<int> parts;  // multipartite part sizes
};

/// Seeded graph generators: gap-free by rejection sampling at edge
/// probability 1/2 (capped, shrinking n on exhaustion), chordal-complement
/// by randomized clique attachment then complementation, arbitrary by
/// G(n, 1/2), multipartite by a random composition of n. Deterministic per
/// (family, n, seed). Postconditions re-verified on every output.
GeneratedGraph generate_family(Family f, const FamilyOptions& opt);

struct VerifyOptions {
    std::string tag;  // onesteplin | linres | linchar | inclusions | graver-oracle | dual-verifier
    int trials = 200;
    uint64_t seed = 7;
    int min_vertices = 4;
    int max_vertices = 9;
    int max_edges = 14;  // Groebner edge bound (TORIC_MAX_EDGES)
    std::string failure_dir = ".";
    bool write_failures = true;
};

struct SuiteReport {
    std::string tag;
    int trials = 0;
    int passed = 0;
    int failed = 0;
    // squarefree-initial-found => odd cycle condition (connected graphs)
    long long occ_checked = 0;
    long long occ_violations = 0;
    // Buchberger certificates: S-pairs and Graver elements reduce to zero
    long long self_checks = 0;
    long long self_check_failures = 0;
    std::string json;  // byte-stable machine-readable report

    bool all_pass() const {
        return failed == 0 && occ_violations == 0 && self_check_failures == 0;
    }
};

/// Runs one named acceptance suite; every failure is replayable from the
/// reported seed and emitted graph file.
SuiteReport run_verify(const VerifyOptions& opt);

// Command entry points used by the CLI (exit codes: 0 pass, 1 suite failure,
// 2 usage/parse error).

int run_analyze(const std::string& path, const std::optional<std::string>& json_out,
                std::ostream& out, std::ostream& err);

struct GroebnerCmdOptions {
    std::string path;
    std::optional<std::vector<int>> vertex_order;     // 1-based
    bool linear_quotient = false;
    std::optional<std::vector<int>> edge_permutation; // 1-based, highest first
    std::optional<std::string> json_out;
    int max_edges = 14;
};

int run_groebner(const GroebnerCmdOptions& opt, std::ostream& out, std::ostream& err);

int run_circuits(const std::string& path, const std::optional<std::string>& json_out,
                 std::ostream& out, std::ostream& err);

int run_graver(const std::string& path, const std::optional<std::string>& json_out,
               int max_edges, std::ostream& out, std::ostream& err);

int run_verify_cmd(const VerifyOptions& opt, const std::optional<std::string>& json_out,
                   std::ostream& out, std::ostream& err);

}  // namespace toric
