#pragma once

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "toricgb/graph.hpp"
#include "toricgb/toric.hpp"

namespace th {

// 1-based edge list -> Graph on max-label vertices
inline toric::Graph graph_1based(int n, std::initializer_list<std::pair<int, int>> edges) {
    std::vector<toric::Edge> es;
    for (auto [u, v] : edges) es.emplace_back(u - 1, v - 1);
    return toric::Graph(n, std::move(es));
}

inline toric::Graph path_graph(int n) {
    std::vector<toric::Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return toric::Graph(n, std::move(es));
}

inline toric::Graph cycle_graph(int n) {
    std::vector<toric::Edge> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return toric::Graph(n, std::move(es));
}

inline toric::Graph complete_graph(int n) {
    std::vector<toric::Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return toric::Graph(n, std::move(es));
}

inline toric::Graph complete_multipartite(std::vector<int> parts) {
    int n = 0;
    std::vector<int> part_of;
    for (size_t p = 0; p < parts.size(); ++p)
        for (int c = 0; c < parts[p]; ++c) {
            part_of.push_back(static_cast<int>(p));
            ++n;
        }
    std::vector<toric::Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[static_cast<size_t>(u)] != part_of[static_cast<size_t>(v)])
                es.emplace_back(u, v);
    return toric::Graph(n, std::move(es));
}

inline std::string read_fixture(const std::string& name) {
    std::string path = std::string(TORICGB_DATA_DIR) + "/" + name;
    std::ifstream f(path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// 1-based closed walk
inline toric::Walk walk_1based(std::initializer_list<int> verts) {
    toric::Walk w;
    for (int v : verts) w.vertices.push_back(v - 1);
    return w;
}

}  // namespace th
