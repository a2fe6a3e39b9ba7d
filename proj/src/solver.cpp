#include "cactidim/solver.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cactidim/oracle.hpp"

namespace cactidim {

std::vector<int> PlacementOption::anchor_positions() const {
    std::vector<int> out;
    for (const PlacementChoice& p : picks) out.push_back(p.anchor_position);
    return out;
}

std::vector<int> PlacementOption::s_vertices() const {
    std::vector<int> out;
    for (const PlacementChoice& p : picks) out.push_back(p.s_vertex);
    return normalized_vertex_set(std::move(out));
}

bool PlacementOption::operator<(const PlacementOption& o) const {
    return anchor_positions() < o.anchor_positions();
}

namespace {

using PairEdge = std::pair<int, int>;

std::vector<PairEdge> remove_nodes(const std::vector<PairEdge>& edges,
                                   const std::vector<int>& gone) {
    std::vector<PairEdge> rest;
    for (const PairEdge& e : edges)
        if (!set_contains(gone, e.first) && !set_contains(gone, e.second)) rest.push_back(e);
    return rest;
}

// Exact cover size. Branch on a maximum-degree vertex: either it is in the
// cover, or all of its neighbors are. Keeps cliques (bouquets of cycles at
// one hub) linear instead of exponential.
int mvc_size(const std::vector<PairEdge>& edges) {
    if (edges.empty()) return 0;
    std::map<int, std::vector<int>> adj;
    for (const PairEdge& e : edges) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    int pick = -1;
    size_t best_degree = 0;
    for (auto& [v, nb] : adj)
        if (nb.size() > best_degree) {
            best_degree = nb.size();
            pick = v;
        }
    if (best_degree <= 1) {
        // a perfect matching remains
        return static_cast<int>(edges.size());
    }
    int with_pick = 1 + mvc_size(remove_nodes(edges, {pick}));
    std::vector<int> neighborhood = normalized_vertex_set(adj[pick]);
    int without_pick = static_cast<int>(neighborhood.size()) +
                       mvc_size(remove_nodes(edges, neighborhood));
    return std::min(with_pick, without_pick);
}

}  // namespace

std::pair<int, std::vector<int>> min_vertex_cover(const IncidenceGraph& ig) {
    std::vector<PairEdge> remaining;
    for (const IncidenceEdge& e : ig.edges) remaining.emplace_back(e.i, e.j);
    int tau = mvc_size(remaining);
    std::vector<int> cover;
    int budget = tau;
    for (int v = 0; v < ig.node_count && !remaining.empty(); ++v) {
        std::vector<PairEdge> without;
        for (const PairEdge& e : remaining)
            if (e.first != v && e.second != v) without.push_back(e);
        // v belongs to some minimum cover of the residual iff removing it
        // leaves a cover problem solvable within budget-1
        if (mvc_size(without) <= budget - 1) {
            cover.push_back(v);
            remaining = std::move(without);
            --budget;
        }
    }
    if (!remaining.empty())
        throw Error(ErrorKind::InternalInconsistency, "vertex cover construction failed");
    return {tau, cover};
}

std::vector<int> base_branch_resolving_set(const ThreadProfile& tp) {
    std::vector<int> s;
    for (size_t v = 0; v < tp.ell.size(); ++v) {
        if (tp.ell[v] < 2) continue;
        int free_tid = -1;
        for (int tid : tp.threads_at[v]) {
            if (free_tid < 0) {
                free_tid = tid;
                continue;
            }
            const Thread& cand = tp.threads[tid];
            const Thread& cur = tp.threads[free_tid];
            bool shorter = cand.length() != cur.length() ? cand.length() < cur.length()
                                                         : cand.leaf() < cur.leaf();
            if (shorter) free_tid = tid;
        }
        for (int tid : tp.threads_at[v])
            if (tid != free_tid) s.push_back(tp.threads[tid].leaf());
    }
    return normalized_vertex_set(std::move(s));
}

std::vector<PlacementChoice> enumerate_biactive_placements(const Graph& g,
                                                           const CactusDecomposition& d,
                                                           const ThreadProfile& tp, int cycle,
                                                           const std::vector<int>& s1) {
    (void)g;
    const Cycle& cyc = d.cycles[cycle];
    std::vector<int> s1_active = active_positions_for(d, cycle, s1);
    std::vector<PlacementChoice> out;
    for (int p = 0; p < cyc.girth(); ++p) {
        if (set_contains(s1_active, p)) continue;
        int w = cyc.vertices[p];
        int s_vertex = w;
        int best_leaf = -1;
        for (int tid : tp.threads_at[w]) {
            const Thread& t = tp.threads[tid];
            bool covered = false;
            for (int u : t.vertices)
                if (set_contains(s1, u)) {
                    covered = true;
                    break;
                }
            if (!covered && (best_leaf < 0 || t.leaf() < best_leaf)) best_leaf = t.leaf();
        }
        if (best_leaf >= 0) s_vertex = best_leaf;
        out.push_back({cycle, p, s_vertex});
    }
    return out;
}

namespace {

struct CycleInfo {
    std::vector<int> ba_positions;
    int b = 0;
    bool flexible = false;
    std::vector<PlacementOption> valid;
};

CycleInfo make_cycle_info(const Graph& g, const CactusDecomposition& d, const ThreadProfile& tp,
                          int cycle, const std::vector<int>& s1) {
    CycleInfo info;
    info.ba_positions = branch_active_positions(g, d, cycle);
    info.b = static_cast<int>(info.ba_positions.size());
    info.flexible = info.b < 2;
    if (!info.flexible) return info;
    std::vector<PlacementChoice> fresh;
    for (const PlacementChoice& c : enumerate_biactive_placements(g, d, tp, cycle, s1))
        if (!set_contains(info.ba_positions, c.anchor_position)) fresh.push_back(c);
    if (info.b == 1) {
        for (const PlacementChoice& c : fresh) info.valid.push_back({{c}});
    } else {
        for (size_t i = 0; i < fresh.size(); ++i)
            for (size_t j = i + 1; j < fresh.size(); ++j)
                info.valid.push_back({{fresh[i], fresh[j]}});
    }
    return info;
}

// Configuration flags of a cycle under S1 plus an optional placement; the
// active set is the branch-active vertices plus the chosen anchors (exactly
// what any smallest biactive branch-resolving set with this choice activates).
ConfigReport flags_for(const CactusDecomposition& d, const ThreadProfile& tp, int cycle,
                       const CycleInfo& info, const std::vector<int>& s1,
                       const PlacementOption* opt) {
    std::vector<int> s = s1;
    std::vector<int> active = info.ba_positions;
    if (opt) {
        for (const PlacementChoice& p : opt->picks) {
            s.push_back(p.s_vertex);
            active.push_back(p.anchor_position);
        }
    }
    CycleView view = make_cycle_view(d, tp, cycle, normalized_vertex_set(std::move(s)));
    view.active = normalized_vertex_set(std::move(active));
    return config_flags(view);
}

std::vector<int> critical_vertex_ids(const Cycle& cyc, const std::vector<int>& active_positions,
                                     Mode mode) {
    if (active_positions.empty()) return {};
    SPath path = s_path_from_positions(cyc, active_positions, -1);
    int girth = cyc.girth();
    int bound = mode == Mode::Vertex ? girth / 2 - 1 : (girth + 1) / 2 - 1;
    if (path.length > bound) return {};
    return normalized_vertex_set({cyc.vertices[path.end_pos_a], cyc.vertices[path.end_pos_b]});
}

CycleClassification classify_with_info(const CactusDecomposition& d, const ThreadProfile& tp,
                                       int cycle, const CycleInfo& info,
                                       const std::vector<int>& s1, Mode mode) {
    CycleClassification out;
    out.flexible = info.flexible;
    out.valid = info.valid;
    if (!info.flexible) {
        out.fixed_flags = flags_for(d, tp, cycle, info, s1, nullptr);
        out.cls = out.fixed_flags.any(mode) ? CycleClass::Positive : CycleClass::Negative;
        return out;
    }
    for (const PlacementOption& opt : info.valid)
        if (!flags_for(d, tp, cycle, info, s1, &opt).any(mode)) out.feasible.push_back(opt);
    out.cls = out.feasible.empty() ? CycleClass::Positive : CycleClass::Negative;
    return out;
}

}  // namespace

CycleClassification classify_cycle(const Graph& g, const CactusDecomposition& d,
                                   const ThreadProfile& tp, int cycle,
                                   const std::vector<int>& s1, Mode mode) {
    CycleInfo info = make_cycle_info(g, d, tp, cycle, s1);
    return classify_with_info(d, tp, cycle, info, s1, mode);
}

namespace {

// One assignable state of a negative cycle in the incidence-minimization
// search: a placement (for flexible cycles) plus the resulting critical
// vertices restricted to vertices shared with other negative cycles.
struct CycleState {
    const PlacementOption* option = nullptr;  // null for fixed cycles
    std::vector<int> critical_shared;
};

struct ComponentResult {
    int pairs = 0;
    std::vector<PairEdge> edges;  // critical negative pairs realized
    std::map<int, const PlacementOption*> assignment;
};

// Exhaustive search over the deduplicated placement states of the component's
// flexible cycles, minimizing (pair count, vertex cover, lex placement).
class ComponentSearch {
public:
    ComponentSearch(const std::vector<int>& members,
                    const std::map<int, std::vector<CycleState>>& states,
                    const std::map<PairEdge, int>& shared)
        : members_(members), states_(states), shared_(shared) {
        for (int m : members_)
            if (states_.at(m).size() > 1 || states_.at(m).front().option != nullptr)
                vars_.push_back(m);
    }

    ComponentResult run() {
        current_.clear();
        for (int m : members_)
            if (states_.at(m).size() == 1 && states_.at(m).front().option == nullptr)
                current_[m] = &states_.at(m).front();
        base_edges_.clear();
        collect_edges(current_, base_edges_);
        best_found_ = false;
        descend(0, static_cast<int>(base_edges_.size()));
        return best_;
    }

private:
    void collect_edges(const std::map<int, const CycleState*>& assigned,
                       std::vector<PairEdge>& edges) const {
        for (auto it = assigned.begin(); it != assigned.end(); ++it)
            for (auto jt = std::next(it); jt != assigned.end(); ++jt) {
                auto key = std::minmax(it->first, jt->first);
                auto sh = shared_.find({key.first, key.second});
                if (sh == shared_.end()) continue;
                int v = sh->second;
                if (set_contains(it->second->critical_shared, v) &&
                    set_contains(jt->second->critical_shared, v))
                    edges.emplace_back(key.first, key.second);
            }
    }

    void descend(size_t var_index, int partial_pairs) {
        if (best_found_ && partial_pairs > best_.pairs) return;
        if (var_index == vars_.size()) {
            std::vector<PairEdge> edges;
            collect_edges(current_, edges);
            int pairs = static_cast<int>(edges.size());
            int tau = mvc_size(edges);
            bool better = !best_found_ || pairs < best_.pairs ||
                          (pairs == best_.pairs && tau < best_tau_);
            if (better) {
                best_found_ = true;
                best_.pairs = pairs;
                best_.edges = edges;
                best_.assignment.clear();
                for (auto& [cycle, state] : current_)
                    best_.assignment[cycle] = state->option;
                best_tau_ = tau;
            }
            return;
        }
        int cycle = vars_[var_index];
        for (const CycleState& state : states_.at(cycle)) {
            int added = 0;
            for (auto& [other, other_state] : current_) {
                auto key = std::minmax(cycle, other);
                auto sh = shared_.find({key.first, key.second});
                if (sh == shared_.end()) continue;
                if (set_contains(state.critical_shared, sh->second) &&
                    set_contains(other_state->critical_shared, sh->second))
                    ++added;
            }
            current_[cycle] = &state;
            descend(var_index + 1, partial_pairs + added);
            current_.erase(cycle);
        }
    }

    std::vector<int> members_;
    const std::map<int, std::vector<CycleState>>& states_;
    const std::map<PairEdge, int>& shared_;
    std::vector<int> vars_;
    std::map<int, const CycleState*> current_;
    std::vector<PairEdge> base_edges_;
    ComponentResult best_;
    int best_tau_ = 0;
    bool best_found_ = false;
};

}  // namespace

NiceSelection select_nice_set(const Graph& g, const CactusDecomposition& d,
                              const ThreadProfile& tp, const std::vector<int>& s1, Mode mode) {
    int c = d.cycle_count();
    std::vector<CycleInfo> infos;
    infos.reserve(c);
    NiceSelection sel;
    sel.classes.reserve(c);
    for (int i = 0; i < c; ++i) {
        infos.push_back(make_cycle_info(g, d, tp, i, s1));
        sel.classes.push_back(classify_with_info(d, tp, i, infos.back(), s1, mode));
    }
    sel.chosen.assign(c, {});

    // positive flexible cycles take any placement (first in lex order); their
    // configurations get repaired later by a geodesic-triple vertex
    for (int i = 0; i < c; ++i)
        if (sel.classes[i].flexible && sel.classes[i].cls == CycleClass::Positive)
            sel.chosen[i] = sel.classes[i].valid.front();

    // shared vertices among negative cycles
    std::vector<int> negatives;
    for (int i = 0; i < c; ++i)
        if (sel.classes[i].cls == CycleClass::Negative) negatives.push_back(i);
    std::map<PairEdge, int> shared;
    for (size_t x = 0; x < negatives.size(); ++x)
        for (size_t y = x + 1; y < negatives.size(); ++y) {
            int v = d.shared_vertex(negatives[x], negatives[y]);
            if (v >= 0) shared[{negatives[x], negatives[y]}] = v;
        }

    // per negative cycle: states deduplicated by critical signature
    std::map<int, std::vector<CycleState>> states;
    for (int i : negatives) {
        std::vector<int> relevant;  // vertices shared with other negative cycles
        for (auto& [pair, v] : shared)
            if (pair.first == i || pair.second == i) relevant.push_back(v);
        relevant = normalized_vertex_set(std::move(relevant));
        auto restrict_critical = [&](const std::vector<int>& active_positions) {
            std::vector<int> crit = critical_vertex_ids(d.cycles[i], active_positions, mode);
            std::vector<int> out;
            for (int v : crit)
                if (set_contains(relevant, v)) out.push_back(v);
            return out;
        };
        std::vector<CycleState>& list = states[i];
        if (!sel.classes[i].flexible) {
            list.push_back({nullptr, restrict_critical(infos[i].ba_positions)});
            continue;
        }
        std::set<std::vector<int>> seen;
        for (const PlacementOption& opt : sel.classes[i].feasible) {
            std::vector<int> active = infos[i].ba_positions;
            for (const PlacementChoice& p : opt.picks) active.push_back(p.anchor_position);
            std::vector<int> sig = restrict_critical(normalized_vertex_set(std::move(active)));
            if (seen.insert(sig).second) list.push_back({&opt, sig});
        }
    }

    // interaction components over negative cycles
    std::map<int, int> component_of;
    std::vector<std::vector<int>> components;
    for (int i : negatives) {
        if (component_of.count(i)) continue;
        std::vector<int> comp{i}, frontier{i};
        component_of[i] = static_cast<int>(components.size());
        while (!frontier.empty()) {
            int u = frontier.back();
            frontier.pop_back();
            for (auto& [pair, v] : shared) {
                int other = pair.first == u ? pair.second : pair.second == u ? pair.first : -1;
                if (other < 0 || component_of.count(other)) continue;
                component_of[other] = static_cast<int>(components.size());
                comp.push_back(other);
                frontier.push_back(other);
            }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }

    sel.critical_pairs = 0;
    for (const std::vector<int>& comp : components) {
        ComponentResult result = ComponentSearch(comp, states, shared).run();
        sel.critical_pairs += result.pairs;
        for (auto& [cycle, option] : result.assignment)
            if (option) sel.chosen[cycle] = *option;
    }

    std::vector<int> s = s1;
    for (int i = 0; i < c; ++i)
        for (const PlacementChoice& p : sel.chosen[i].picks) s.push_back(p.s_vertex);
    sel.nice_set = normalized_vertex_set(std::move(s));
    return sel;
}

IncidenceGraph build_incidence_graph(const CactusDecomposition& d, const std::vector<int>& nice_set,
                                     const std::vector<CycleClassification>& classes, Mode mode) {
    IncidenceGraph ig;
    ig.node_count = d.cycle_count();
    for (auto [i, j] : critical_incidences(d, nice_set, mode)) {
        if (classes[i].cls != CycleClass::Negative || classes[j].cls != CycleClass::Negative)
            continue;
        ig.edges.push_back({i, j, d.shared_vertex(i, j)});
    }
    return ig;
}

namespace {

// The S vertex realizing a fresh active position at `anchor_pos`: the leaf of
// the anchor's S-free thread when one exists, otherwise the anchor itself.
int realize_placement(const CactusDecomposition& d, const ThreadProfile& tp, int cycle,
                      int anchor_pos, const std::vector<int>& s) {
    int w = d.cycles[cycle].vertices[anchor_pos];
    int best_leaf = -1;
    for (int tid : tp.threads_at[w]) {
        const Thread& t = tp.threads[tid];
        bool covered = false;
        for (int u : t.vertices)
            if (set_contains(s, u)) {
                covered = true;
                break;
            }
        if (!covered && (best_leaf < 0 || t.leaf() < best_leaf)) best_leaf = t.leaf();
    }
    return best_leaf >= 0 ? best_leaf : w;
}

// Lowest cycle position whose activation forms a geodesic triple with two
// already-active vertices.
int triple_position(const Cycle& cyc, const std::vector<int>& active_positions) {
    int girth = cyc.girth();
    for (int w = 0; w < girth; ++w) {
        if (set_contains(active_positions, w)) continue;
        for (size_t x = 0; x < active_positions.size(); ++x)
            for (size_t y = x + 1; y < active_positions.size(); ++y) {
                int px = active_positions[x], py = active_positions[y];
                int sum = cyc.cycle_distance(w, px) + cyc.cycle_distance(px, py) +
                          cyc.cycle_distance(w, py);
                if (sum == girth) return w;
            }
    }
    return -1;
}

struct ModeResult {
    NiceSelection selection;
    IncidenceGraph incidence;
    int tau = 0;
    std::vector<int> cover;
    int c_positive = 0;
    std::vector<int> certificate;
    std::vector<int> triple_cycles;  // positive cycles then cover cycles
};

ModeResult solve_mode(const Graph& g, const CactusContext& ctx, const std::vector<int>& s1,
                      int L, int B, Mode mode) {
    const CactusDecomposition& d = ctx.dec;
    const ThreadProfile& tp = ctx.threads;
    ModeResult result;
    result.selection = select_nice_set(g, d, tp, s1, mode);
    NiceSelection& sel = result.selection;

    if (static_cast<int>(sel.nice_set.size()) != L + B)
        throw Error(ErrorKind::InternalInconsistency,
                    "smallest biactive branch-resolving set has wrong size");
    if (!is_branch_resolving(tp, sel.nice_set) || !is_biactive(d, sel.nice_set))
        throw Error(ErrorKind::InternalInconsistency,
                    "constructed set is not biactive branch-resolving");

    result.incidence = build_incidence_graph(d, sel.nice_set, sel.classes, mode);
    if (static_cast<int>(result.incidence.edges.size()) != sel.critical_pairs)
        throw Error(ErrorKind::InternalInconsistency,
                    "realized critical incidences differ from the selection search");

    auto [tau, cover] = min_vertex_cover(result.incidence);
    result.tau = tau;
    result.cover = cover;
    for (const CycleClassification& cls : sel.classes)
        if (cls.cls == CycleClass::Positive) ++result.c_positive;

    // third vertices: one geodesic triple former per positive cycle, and one
    // per cover cycle of the incidence graph
    std::vector<int> cert = sel.nice_set;
    auto add_triple_vertex = [&](int cycle) {
        std::vector<int> active = active_positions_for(d, cycle, cert);
        int pos = triple_position(d.cycles[cycle], active);
        if (pos < 0)
            throw Error(ErrorKind::InternalInconsistency,
                        "no geodesic-triple-forming vertex on cycle " + std::to_string(cycle));
        cert.push_back(realize_placement(d, tp, cycle, pos, cert));
        cert = normalized_vertex_set(std::move(cert));
        result.triple_cycles.push_back(cycle);
    };
    for (int i = 0; i < d.cycle_count(); ++i)
        if (sel.classes[i].cls == CycleClass::Positive) add_triple_vertex(i);
    for (int i : cover) add_triple_vertex(i);

    result.certificate = cert;
    int expected = L + B + result.c_positive + result.tau;
    if (static_cast<int>(cert.size()) != expected)
        throw Error(ErrorKind::InternalInconsistency,
                    "certificate size " + std::to_string(cert.size()) + " differs from formula " +
                        std::to_string(expected));

    GeneratorDiagnosis diag = is_generator_structural(g, ctx, cert, mode);
    if (!diag.ok)
        throw Error(ErrorKind::InternalInconsistency,
                    std::string("certificate rejected by the structural verifier (") +
                        diag.message + ")");
    if (!is_generator_bruteforce(g, cert, mode))
        throw Error(ErrorKind::InternalInconsistency,
                    "certificate rejected by the distance-vector check");
    // a geodesic triple leaves no critical endpoints behind
    for (int i : result.triple_cycles) {
        std::vector<int> active = active_vertices(d, i, cert);
        CriticalStatus st = critical_vertices(d.cycles[i], active);
        if (!st.vertex_critical.empty() || !st.edge_critical.empty())
            throw Error(ErrorKind::InternalInconsistency,
                        "cycle " + std::to_string(i) + " kept a critical endpoint");
    }
    return result;
}

}  // namespace

DimensionReport compute_dimensions(const Graph& g) {
    DimensionReport rep;
    rep.n = g.vertex_count();
    rep.m = g.edge_count();
    rep.cyclomatic = cyclomatic_number(g);
    CactusContext ctx = analyze_structure(g);
    const CactusDecomposition& d = ctx.dec;
    const ThreadProfile& tp = ctx.threads;
    rep.L = compute_L(tp);
    rep.B = compute_B(g, d);

    if (d.cycle_count() == 0) {
        if (rep.n == 1) {
            rep.fast_path = "single_vertex";
            rep.dim = rep.edim = 0;
            return rep;
        }
        bool is_path = true;
        for (int v = 0; v < rep.n; ++v)
            if (g.degree(v) > 2) is_path = false;
        if (is_path) {
            rep.fast_path = "path";
            rep.dim = rep.edim = 1;
            int endpoint = 0;
            while (g.degree(endpoint) != 1) ++endpoint;
            rep.cert_vertex = rep.cert_edge = {endpoint};
        } else {
            rep.fast_path = "tree";
            rep.dim = rep.edim = rep.L;
            rep.cert_vertex = rep.cert_edge = base_branch_resolving_set(tp);
        }
        for (Mode mode : {Mode::Vertex, Mode::Edge}) {
            const auto& cert = mode == Mode::Vertex ? rep.cert_vertex : rep.cert_edge;
            if (!is_generator_structural(g, ctx, cert, mode).ok ||
                !is_generator_bruteforce(g, cert, mode))
                throw Error(ErrorKind::InternalInconsistency, "tree certificate rejected");
        }
        return rep;
    }

    std::vector<int> s1 = base_branch_resolving_set(tp);
    if (static_cast<int>(s1.size()) != rep.L)
        throw Error(ErrorKind::InternalInconsistency, "base branch-resolving set size != L");

    ModeResult vertex = solve_mode(g, ctx, s1, rep.L, rep.B, Mode::Vertex);
    ModeResult edge = solve_mode(g, ctx, s1, rep.L, rep.B, Mode::Edge);

    rep.c_abc = vertex.c_positive;
    rep.c_ade = edge.c_positive;
    rep.tau_vi = vertex.tau;
    rep.tau_ei = edge.tau;
    rep.dim = rep.L + rep.B + rep.c_abc + rep.tau_vi;
    rep.edim = rep.L + rep.B + rep.c_ade + rep.tau_ei;
    rep.cert_vertex = vertex.certificate;
    rep.cert_edge = edge.certificate;
    rep.gvi = vertex.incidence;
    rep.gei = edge.incidence;

    for (int i = 0; i < d.cycle_count(); ++i) {
        PerCycleDiag diag;
        diag.index = i;
        diag.girth = d.cycles[i].girth();
        diag.b = static_cast<int>(branch_active_positions(g, d, i).size());
        diag.abc_positive = vertex.selection.classes[i].cls == CycleClass::Positive;
        diag.ade_positive = edge.selection.classes[i].cls == CycleClass::Positive;
        CycleInfo info = make_cycle_info(g, d, tp, i, s1);
        auto flags_of = [&](const ModeResult& mr) {
            if (!mr.selection.classes[i].flexible) return mr.selection.classes[i].fixed_flags;
            return flags_for(d, tp, i, info, s1, &mr.selection.chosen[i]);
        };
        ConfigReport vflags = flags_of(vertex);
        ConfigReport eflags = flags_of(edge);
        diag.flags_vertex = vflags.letters();
        diag.flags_edge = eflags.letters();
        diag.witnesses_vertex = vflags.witnesses;
        diag.witnesses_edge = eflags.witnesses;
        diag.placement_vertex = vertex.selection.chosen[i].s_vertices();
        diag.placement_edge = edge.selection.chosen[i].s_vertices();
        rep.per_cycle.push_back(std::move(diag));
    }
    return rep;
}

}  // namespace cactidim
