#pragma once

#include <string>
#include <vector>

#include "cactidim/graph.hpp"

namespace cactidim::testutil {

inline Graph from_pairs(int n, std::vector<std::pair<int, int>> edges) {
    return Graph::from_edges(n, std::move(edges));
}

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    return from_pairs(n, std::move(edges));
}

inline Graph cycle_graph(int g) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < g; ++v) edges.emplace_back(v - 1, v);
    edges.emplace_back(g - 1, 0);
    return from_pairs(g, std::move(edges));
}

inline Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return from_pairs(leaves + 1, std::move(edges));
}

// Two triangles sharing vertex 0: 0-1-2 and 0-3-4.
inline Graph butterfly() {
    return from_pairs(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
}

// k triangles all sharing vertex 0.
inline Graph triangle_bouquet(int k) {
    std::vector<std::pair<int, int>> edges;
    int next = 1;
    for (int i = 0; i < k; ++i) {
        int a = next++, b = next++;
        edges.emplace_back(0, a);
        edges.emplace_back(a, b);
        edges.emplace_back(b, 0);
    }
    return from_pairs(next, std::move(edges));
}

// Cycle of girth g with pendant leaves at the given positions; leaf ids start
// at g in position order.
inline Graph cycle_with_leaves(int g, const std::vector<int>& positions) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < g; ++v) edges.emplace_back(v - 1, v);
    edges.emplace_back(g - 1, 0);
    int next = g;
    for (int p : positions) edges.emplace_back(p, next++);
    return from_pairs(next, std::move(edges));
}

}  // namespace cactidim::testutil
