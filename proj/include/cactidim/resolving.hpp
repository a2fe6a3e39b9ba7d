#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cactidim/cactus.hpp"
#include "cactidim/graph.hpp"

namespace cactidim {

enum class Mode { Vertex, Edge };

const char* mode_name(Mode mode);

// Canonical labeling v_0..v_{g-1} of a cycle with respect to an active set:
// v_0 active and k = max active index as small as possible.
struct ActiveProfile {
    int cycle_index = -1;
    std::vector<int> active_positions;  // canonical indices, sorted; front() == 0
    int k = 0;                          // max active index, minimal over labelings
    int a = 0;                          // number of active vertices
};

// Which of the five configurations a cycle contains with respect to a set,
// with one witness per raised flag (actual graph vertex ids).
struct ConfigWitness {
    char flag = 0;          // 'A'..'E'
    int vertex = -1;        // vertex whose thread (or position) triggers the flag
    int thread = -1;        // offending thread id, if the flag involves one
    int partner = -1;       // second thread vertex for E on even cycles
};

struct ConfigReport {
    bool a = false, b = false, c = false, d = false, e = false;
    std::vector<ConfigWitness> witnesses;

    bool any(Mode mode) const { return mode == Mode::Vertex ? (a || b || c) : (a || d || e); }
    bool flag(char which) const;
    std::string letters() const;  // e.g. "BD"
};

// Shortest cycle subpath containing all active vertices.
struct SPath {
    int cycle_index = -1;
    int end_pos_a = -1;  // stored-order cycle positions of the endpoints
    int end_pos_b = -1;
    int length = 0;      // edge count
    bool unique = true;
};

// Endpoints of the S-path that are critical: |P| <= floor(g/2)-1 for the
// vertex notion, |P| <= ceil(g/2)-1 for the edge notion.
struct CriticalStatus {
    std::vector<int> vertex_critical;  // vertex ids, sorted
    std::vector<int> edge_critical;
};

// Cycle vertices whose component T_v(C_i) meets S.
std::vector<int> active_vertices(const CactusDecomposition& d, int cycle,
                                 const std::vector<int>& s);
std::vector<int> active_positions_for(const CactusDecomposition& d, int cycle,
                                      const std::vector<int>& s);

// At most one S-free thread at every vertex of degree >= 3.
bool is_branch_resolving(const ThreadProfile& tp, const std::vector<int>& s);

// Every cycle has at least two S-active vertices.
bool is_biactive(const CactusDecomposition& d, const std::vector<int>& s);

ActiveProfile canonical_labeling(const Cycle& c, const std::vector<int>& active);

// Three active vertices with pairwise cycle distances summing to the girth.
bool geodesic_triple_exists(const Cycle& c, const std::vector<int>& active);

// Per-cycle inputs for configuration evaluation, in stored cycle order.
struct CycleView {
    int cycle_index = -1;
    int girth = 0;
    std::vector<int> vertices;      // stored cycle order
    std::vector<int> active;        // stored positions, sorted
    std::vector<int> sfree_count;   // S-free threads per position
    std::vector<int> sfree_maxlen;  // longest S-free thread per position (0 = none)
    std::vector<int> sfree_thread;  // a witnessing S-free thread id per position (-1 = none)
};

CycleView make_cycle_view(const CactusDecomposition& d, const ThreadProfile& tp, int cycle,
                          const std::vector<int>& s);

// Evaluates the five configurations on a view; flags are OR-ed over every
// labeling achieving the minimal k.
ConfigReport config_flags(const CycleView& view);

// Public form; requires S biactive branch-resolving (the configurations are
// only defined for such sets) and throws NotBiactiveBranchResolving otherwise.
ConfigReport detect_configurations(const Graph& g, const CactusDecomposition& d,
                                   const ThreadProfile& tp, int cycle,
                                   const std::vector<int>& s);

SPath s_path(const Cycle& c, const std::vector<int>& active);
SPath s_path_from_positions(const Cycle& c, const std::vector<int>& positions, int cycle_index);

CriticalStatus critical_vertices(const Cycle& c, const std::vector<int>& active);

// All unordered cycle pairs sharing a vertex critical (per mode) on both.
std::vector<std::pair<int, int>> critical_incidences(const CactusDecomposition& d,
                                                     const std::vector<int>& s, Mode mode);

// Why a candidate set fails (or that it does not).
struct GeneratorDiagnosis {
    enum class Cause {
        None,
        NotBranchResolving,
        NotBiactive,
        Configuration,
        CriticalIncidence,
        DegeneratePath,  // tree with no resolving structure (paths)
    };

    bool ok = false;
    Cause cause = Cause::None;
    int cycle = -1;
    char config = 0;
    std::pair<int, int> pair{-1, -1};
    std::string message;
};

// Structural generator verifier: branch-resolving + biactive, no configuration
// of the mode's triple on any cycle, no critical incidence. Trees reduce to
// the branch-resolving condition (paths additionally need an endpoint or two
// vertices in S).
GeneratorDiagnosis is_generator_structural(const Graph& g, const std::vector<int>& s, Mode mode);
GeneratorDiagnosis is_generator_structural(const Graph& g, const CactusContext& ctx,
                                           const std::vector<int>& s, Mode mode);

}  // namespace cactidim
