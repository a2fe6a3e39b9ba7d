#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cactidim/cactus.hpp"
#include "cactidim/graph.hpp"
#include "cactidim/resolving.hpp"

namespace cactidim {

// One extra vertex giving a deficient cycle a fresh active position. The
// anchor is a cycle vertex; the vertex actually put into S is the leaf of the
// anchor's S-free thread when it has one, else the anchor itself.
struct PlacementChoice {
    int cycle_index = -1;
    int anchor_position = -1;
    int s_vertex = -1;
};

// A complete activity fix for one cycle: one choice when b = 1, an unordered
// pair when b = 0 (only possible on unicyclic graphs).
struct PlacementOption {
    std::vector<PlacementChoice> picks;  // sorted by anchor_position

    std::vector<int> anchor_positions() const;
    std::vector<int> s_vertices() const;
    bool operator<(const PlacementOption& o) const;
};

struct IncidenceEdge {
    int i = -1, j = -1;       // cycle indices, i < j
    int shared_vertex = -1;
};

// Cycles as nodes, edges between mode-negative critically incident pairs.
struct IncidenceGraph {
    int node_count = 0;
    std::vector<IncidenceEdge> edges;
};

// Exact minimum vertex cover; the cover returned is the lexicographically
// smallest one of minimum size.
std::pair<int, std::vector<int>> min_vertex_cover(const IncidenceGraph& ig);

enum class CycleClass { Positive, Negative };

struct CycleClassification {
    CycleClass cls = CycleClass::Negative;
    bool flexible = false;                  // b < 2: activity involves a choice
    std::vector<PlacementOption> valid;     // all fresh-anchor options (flexible only)
    std::vector<PlacementOption> feasible;  // valid options avoiding the mode's configurations
    ConfigReport fixed_flags;               // flags of the fixed active set (b >= 2)
};

// For every multi-thread vertex, the leaves of all threads except one; the
// thread left free is a shortest one (ties: lowest leaf id). Size = L(G).
std::vector<int> base_branch_resolving_set(const ThreadProfile& tp);

// Candidate placements for a cycle: one per cycle vertex not already
// S1-active. Options (singletons / unordered pairs, restricted to anchors
// that add a genuinely new active position) are formed by the classifier.
std::vector<PlacementChoice> enumerate_biactive_placements(const Graph& g,
                                                           const CactusDecomposition& d,
                                                           const ThreadProfile& tp, int cycle,
                                                           const std::vector<int>& s1);

CycleClassification classify_cycle(const Graph& g, const CactusDecomposition& d,
                                   const ThreadProfile& tp, int cycle,
                                   const std::vector<int>& s1, Mode mode);

struct NiceSelection {
    std::vector<int> nice_set;                   // S1 ∪ S2, sorted
    std::vector<PlacementOption> chosen;         // per cycle (empty for fixed cycles)
    std::vector<CycleClassification> classes;    // per cycle
    int critical_pairs = 0;                      // minimized count among negative pairs
};

// Chooses placements for all flexible cycles: feasible ones for negative
// cycles so that the number of critically incident negative pairs is minimal
// (ties: smallest vertex cover of the resulting incidence graph, then
// lexicographic placement); any valid one for positive cycles.
NiceSelection select_nice_set(const Graph& g, const CactusDecomposition& d,
                              const ThreadProfile& tp, const std::vector<int>& s1, Mode mode);

IncidenceGraph build_incidence_graph(const CactusDecomposition& d, const std::vector<int>& nice_set,
                                     const std::vector<CycleClassification>& classes, Mode mode);

struct PerCycleDiag {
    int index = 0;
    int girth = 0;
    int b = 0;
    bool abc_positive = false;
    bool ade_positive = false;
    std::string flags_vertex;             // configuration letters w.r.t. the nice set
    std::string flags_edge;
    std::vector<ConfigWitness> witnesses_vertex;
    std::vector<ConfigWitness> witnesses_edge;
    std::vector<int> placement_vertex;    // extra S vertices chosen for this cycle
    std::vector<int> placement_edge;
};

struct DimensionReport {
    int n = 0, m = 0, cyclomatic = 0;
    bool is_cactus = true;
    std::string fast_path;  // "", "single_vertex", "path" or "tree"
    int L = 0, B = 0;
    int c_abc = 0, c_ade = 0;
    int tau_vi = 0, tau_ei = 0;
    int dim = 0, edim = 0;
    std::vector<int> cert_vertex, cert_edge;
    std::vector<PerCycleDiag> per_cycle;
    IncidenceGraph gvi, gei;
};

// Full pipeline: dim(G) = L + B + c_ABC + tau(G_vi) and
// edim(G) = L + B + c_ADE + tau(G_ei), with verified certificates.
// Trees short-circuit: single vertex 0, paths 1, other trees L(G).
DimensionReport compute_dimensions(const Graph& g);

}  // namespace cactidim
