#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Undirected edge, endpoints 0-based and normalized so that u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool contains(int x) const { return x == u || x == v; }
    int other(int x) const { return x == u ? v : u; }

    friend bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
    friend bool operator<(const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
};

/// Simple undirected graph with vertices 0..n-1 and an indexed edge list.
/// The edge list order is significant: it fixes the default variable order
/// y_1..y_m of the toric machinery. Immutable after construction.
class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int idx) const { return edges_[static_cast<size_t>(idx)]; }

    bool adjacent(int u, int v) const { return adj_matrix_[index(u, v)]; }
    /// Index of edge {u, v}, or -1 when absent.
    int edge_index(int u, int v) const { return edge_index_[index(u, v)]; }
    /// Neighbors of v in ascending order.
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }

    bool connected() const;
    /// Connected components as ascending vertex lists, ordered by smallest member.
    std::vector<std::vector<int>> components() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    size_t index(int u, int v) const {
        return static_cast<size_t>(u) * static_cast<size_t>(n_) + static_cast<size_t>(v);
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<char> adj_matrix_;
    std::vector<int> edge_index_;
};

/// Result of parsing an edge-list file. Vertices are compacted to 0..n-1
/// (dropping isolated labels); the relabeling is recorded, never silent.
struct ParsedGraph {
    Graph graph;
    /// original_labels[i] = label of vertex i in the input text (1-based labels).
    std::vector<int> original_labels;
    bool relabeled = false;
};

/// Parses "u v" lines with '#' comments and blank lines ignored; 1-indexed
/// positive vertex labels. Rejects malformed lines, loops and duplicate
/// edges, each with its line number.
ParsedGraph parse_graph(std::string_view text);

/// Same vertex set, edge set = all non-edges. Isolated vertices are kept
/// (the complement is only used for cycle queries). Edges emitted in
/// ascending (u, v) order.
Graph complement(const Graph& g);

struct CycleWitness {
    std::vector<int> vertices;  // cyclic order, no repeated closing vertex
    bool induced = false;
};

/// Lexicographically least induced (chordless) cycle on exactly `length`
/// vertices, or nullopt. Requires length >= 4.
std::optional<CycleWitness> find_induced_cycle(const Graph& g, int length);

/// All induced cycles of exactly `length` vertices (length >= 3), each in
/// canonical form (min vertex first, smaller second endpoint), sorted.
std::vector<CycleWitness> enumerate_induced_cycles(const Graph& g, int length);

struct GapFreeResult {
    bool gap_free = false;
    /// First pair of vertex-disjoint edges with no bridging edge.
    std::optional<std::pair<Edge, Edge>> witness;
};

/// True iff every pair of vertex-disjoint edges is bridged. Computed both by
/// direct edge-pair scan and as absence of an induced C4 in the complement;
/// the two routes must agree.
GapFreeResult is_gap_free(const Graph& g);

struct ChordalResult {
    bool chordal = false;
    /// Perfect elimination ordering (eliminate peo[0] first) when chordal.
    std::vector<int> peo;
    /// Shortest, lexicographically least chordless cycle (length >= 4) otherwise.
    std::optional<CycleWitness> witness;
};

/// Maximum-cardinality-search order, verified to be a perfect elimination
/// ordering; extracts a chordless-cycle witness on failure.
ChordalResult is_chordal(const Graph& g);

struct KStepLinearity {
    bool linear_resolution = false;  // complement chordal: k-step linear for all k
    int k = 0;                       // meaningful when !linear_resolution
};

/// Max k such that the graph is k-step linear: infinite iff the complement is
/// chordal, else (shortest induced cycle length >= 4 in the complement) - 4.
KStepLinearity k_step_linearity(const Graph& g);

struct OddCycleConditionResult {
    bool holds = false;
    /// Two vertex-disjoint chordless odd cycles with no linking edge.
    std::optional<std::pair<CycleWitness, CycleWitness>> witness;
};

/// Odd cycle condition for connected graphs: every pair of vertex-disjoint
/// chordless odd cycles is joined by at least one edge. Throws on
/// disconnected input, naming the components.
OddCycleConditionResult odd_cycle_condition(const Graph& g);

}  // namespace toric
