#pragma once

#include <vector>

#include "cactidim/graph.hpp"

namespace cactidim {

// A cycle with its vertices in (fixed, arbitrary-orientation) cyclic order.
struct Cycle {
    std::vector<int> vertices;

    int girth() const { return static_cast<int>(vertices.size()); }
    // Position of a vertex on the cycle, -1 if not on it.
    int position_of(int v) const;
    // Hop distance between two positions along the cycle.
    int cycle_distance(int pos_a, int pos_b) const;
};

// Result of validating the cactus property: all cycles, per-vertex cycle
// membership, and the components T_v(C_i) of G - E(C_i).
struct CactusDecomposition {
    std::vector<Cycle> cycles;
    // vertex -> sorted indices of cycles it lies on
    std::vector<std::vector<int>> cycle_membership;
    // [cycle i][vertex u] = position p on C_i such that u belongs to the
    // component of G - E(C_i) containing cycles[i].vertices[p]
    std::vector<std::vector<int>> gravity;
    // [cycle i][position p] = sorted vertex list of that component
    std::vector<std::vector<std::vector<int>>> components;

    int cycle_count() const { return static_cast<int>(cycles.size()); }
    // Shared vertex of two cycles (cacti share at most one), or -1.
    int shared_vertex(int i, int j) const;
};

// Splits the graph into biconnected blocks; every nontrivial block must be a
// single cycle, otherwise throws NotACactus naming the offending block.
CactusDecomposition decompose_cactus(const Graph& g);

// A pendant path u_1..u_k hanging at `anchor` (deg >= 3): u_1 is a leaf,
// u_2..u_k have degree 2 and u_k is adjacent to the anchor. Length counts
// vertices, i.e. k.
struct Thread {
    int anchor;
    std::vector<int> vertices;  // u_1 (leaf) first

    int length() const { return static_cast<int>(vertices.size()); }
    int leaf() const { return vertices.front(); }
};

struct ThreadProfile {
    std::vector<Thread> threads;
    std::vector<int> ell;                      // threads hanging at each vertex
    std::vector<std::vector<int>> threads_at;  // vertex -> thread indices
    std::vector<int> thread_of;                // vertex -> thread it lies on, or -1
};

ThreadProfile thread_profile(const Graph& g);

// L(G) = sum over vertices with ell(v) > 1 of (ell(v) - 1).
int compute_L(const ThreadProfile& tp);

// Vertices v on C_i with deg(v) >= 4 or a vertex of degree >= 3 other than v
// inside T_v(C_i). Returned sorted by cycle position.
std::vector<int> branch_active_vertices(const Graph& g, const CactusDecomposition& d, int cycle);
std::vector<int> branch_active_positions(const Graph& g, const CactusDecomposition& d, int cycle);

// B(G) = sum over cycles of max{0, 2 - b(C_i)}.
int compute_B(const Graph& g, const CactusDecomposition& d);

// The unicyclic region of C_i: everything that reaches C_i along a path using
// no cycle edge and no cycle vertex as an interior vertex.
struct Region {
    int cycle_index;
    std::vector<int> vertices;  // sorted
    std::vector<int> boundary;  // region vertices lying on some other cycle
};

Region unicyclic_region(const Graph& g, const CactusDecomposition& d, int cycle);

// (S ∩ region) ∪ boundary.
std::vector<int> regional_set(const Region& r, const std::vector<int>& s);

// Checks that every unicyclic region is an isometric subgraph: distances in
// the induced subgraph equal distances in G for all region vertex pairs.
bool regions_are_isometric(const Graph& g, const CactusDecomposition& d);

// Shared precomputation for one graph; throws NotACactus on invalid input.
struct CactusContext {
    CactusDecomposition dec;
    ThreadProfile threads;
};

CactusContext analyze_structure(const Graph& g);

}  // namespace cactidim
