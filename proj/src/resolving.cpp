#include "cactidim/resolving.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace cactidim {

const char* mode_name(Mode mode) { return mode == Mode::Vertex ? "vertex" : "edge"; }

bool ConfigReport::flag(char which) const {
    switch (which) {
        case 'A': return a;
        case 'B': return b;
        case 'C': return c;
        case 'D': return d;
        case 'E': return e;
    }
    return false;
}

std::string ConfigReport::letters() const {
    std::string out;
    if (a) out += 'A';
    if (b) out += 'B';
    if (c) out += 'C';
    if (d) out += 'D';
    if (e) out += 'E';
    return out;
}

std::vector<int> active_positions_for(const CactusDecomposition& d, int cycle,
                                      const std::vector<int>& s) {
    std::vector<int> positions;
    for (int v : s) {
        int p = d.gravity[cycle][v];
        if (p >= 0) positions.push_back(p);
    }
    return normalized_vertex_set(std::move(positions));
}

std::vector<int> active_vertices(const CactusDecomposition& d, int cycle,
                                 const std::vector<int>& s) {
    std::vector<int> out;
    for (int p : active_positions_for(d, cycle, s))
        out.push_back(d.cycles[cycle].vertices[p]);
    return normalized_vertex_set(std::move(out));
}

bool is_branch_resolving(const ThreadProfile& tp, const std::vector<int>& s) {
    std::vector<int> free_count(tp.ell.size(), 0);
    for (const Thread& t : tp.threads) {
        bool covered = false;
        for (int v : t.vertices)
            if (set_contains(s, v)) {
                covered = true;
                break;
            }
        if (!covered && ++free_count[t.anchor] > 1) return false;
    }
    return true;
}

bool is_biactive(const CactusDecomposition& d, const std::vector<int>& s) {
    for (int i = 0; i < d.cycle_count(); ++i)
        if (active_positions_for(d, i, s).size() < 2) return false;
    return true;
}

namespace {

// All labelings (start position, direction) realizing the minimal k.
struct Labeling {
    int start;  // stored position mapped to canonical index 0
    int dir;    // +1 or -1
    int k;
};

std::vector<Labeling> minimal_labelings(int girth, const std::vector<int>& active_positions) {
    std::vector<Labeling> all;
    for (int start : active_positions) {
        for (int dir : {+1, -1}) {
            int k = 0;
            for (int p : active_positions) {
                int idx = ((p - start) * dir % girth + girth) % girth;
                k = std::max(k, idx);
            }
            all.push_back({start, dir, k});
        }
    }
    int kmin = all.front().k;
    for (const Labeling& l : all) kmin = std::min(kmin, l.k);
    std::vector<Labeling> out;
    for (const Labeling& l : all)
        if (l.k == kmin) out.push_back(l);
    return out;
}

std::vector<int> mapped_active(const Labeling& l, int girth,
                               const std::vector<int>& active_positions) {
    std::vector<int> mapped;
    for (int p : active_positions)
        mapped.push_back(((p - l.start) * l.dir % girth + girth) % girth);
    std::sort(mapped.begin(), mapped.end());
    return mapped;
}

}  // namespace

ActiveProfile canonical_labeling(const Cycle& c, const std::vector<int>& active) {
    std::vector<int> positions;
    for (int v : active) {
        int p = c.position_of(v);
        if (p < 0)
            throw Error(ErrorKind::InternalInconsistency,
                        "canonical_labeling: vertex " + std::to_string(v) + " not on the cycle");
        positions.push_back(p);
    }
    positions = normalized_vertex_set(std::move(positions));
    if (positions.empty())
        throw Error(ErrorKind::InternalInconsistency, "canonical_labeling: empty active set");

    int girth = c.girth();
    ActiveProfile best;
    bool have = false;
    int best_dir = 0, best_start = 0;
    for (const Labeling& l : minimal_labelings(girth, positions)) {
        std::vector<int> mapped = mapped_active(l, girth, positions);
        // tie-break: lexicographically smallest sequence, then original
        // orientation, then smallest start position
        bool better = !have;
        if (have) {
            if (mapped != best.active_positions)
                better = mapped < best.active_positions;
            else if (l.dir != best_dir)
                better = l.dir > best_dir;
            else
                better = l.start < best_start;
        }
        if (better) {
            best.active_positions = std::move(mapped);
            best.k = l.k;
            best.a = static_cast<int>(positions.size());
            best_dir = l.dir;
            best_start = l.start;
            have = true;
        }
    }
    return best;
}

bool geodesic_triple_exists(const Cycle& c, const std::vector<int>& active) {
    std::vector<int> positions;
    for (int v : active) {
        int p = c.position_of(v);
        if (p >= 0) positions.push_back(p);
    }
    positions = normalized_vertex_set(std::move(positions));
    int a = static_cast<int>(positions.size());
    int girth = c.girth();
    for (int i = 0; i < a; ++i)
        for (int j = i + 1; j < a; ++j)
            for (int k = j + 1; k < a; ++k) {
                int sum = c.cycle_distance(positions[i], positions[j]) +
                          c.cycle_distance(positions[j], positions[k]) +
                          c.cycle_distance(positions[i], positions[k]);
                if (sum == girth) return true;
            }
    return false;
}

CycleView make_cycle_view(const CactusDecomposition& d, const ThreadProfile& tp, int cycle,
                          const std::vector<int>& s) {
    const Cycle& cyc = d.cycles[cycle];
    CycleView view;
    view.cycle_index = cycle;
    view.girth = cyc.girth();
    view.vertices = cyc.vertices;
    view.active = active_positions_for(d, cycle, s);
    view.sfree_count.assign(view.girth, 0);
    view.sfree_maxlen.assign(view.girth, 0);
    view.sfree_thread.assign(view.girth, -1);
    for (int p = 0; p < view.girth; ++p) {
        int v = cyc.vertices[p];
        for (int tid : tp.threads_at[v]) {
            const Thread& t = tp.threads[tid];
            bool covered = false;
            for (int w : t.vertices)
                if (set_contains(s, w)) {
                    covered = true;
                    break;
                }
            if (covered) continue;
            view.sfree_count[p] += 1;
            if (t.length() > view.sfree_maxlen[p]) {
                view.sfree_maxlen[p] = t.length();
                view.sfree_thread[p] = tid;
            }
        }
    }
    return view;
}

namespace {

void add_witness(ConfigReport& report, bool& flag, ConfigWitness w) {
    if (!flag) {
        flag = true;
        report.witnesses.push_back(w);
    }
}

// The five configurations, evaluated literally on one canonical labeling.
void evaluate_labeling(const CycleView& view, const Labeling& l, ConfigReport& report) {
    int g = view.girth;
    int k = l.k;
    int a = static_cast<int>(view.active.size());
    int fl = g / 2;
    int ce = (g + 1) / 2;
    bool even = g % 2 == 0;
    auto stored = [&](int canonical_idx) {
        return ((l.start + l.dir * canonical_idx) % g + g) % g;
    };
    auto vertex_at = [&](int canonical_idx) { return view.vertices[stored(canonical_idx)]; };

    if (a == 2 && even && k == g / 2)
        add_witness(report, report.a, {'A', vertex_at(k), -1, vertex_at(0)});

    auto first_thread_in = [&](const std::vector<std::pair<int, int>>& ranges,
                               int min_len) -> std::pair<int, int> {
        for (auto [lo, hi] : ranges)
            for (int i = lo; i <= hi; ++i) {
                int p = stored(i);
                if (view.sfree_count[p] > 0 && view.sfree_maxlen[p] >= min_len)
                    return {i, view.sfree_thread[p]};
            }
        return {-1, -1};
    };

    if (k <= fl - 1) {
        auto [i, tid] = first_thread_in({{k, fl - 1}, {ce + k + 1, g - 1}, {0, 0}}, 1);
        if (i >= 0) add_witness(report, report.b, {'B', vertex_at(i), tid, -1});
    }
    if (a == 2 && even && k <= g / 2) {
        auto [i, tid] = first_thread_in({{0, k}}, g / 2 - k);
        if (i >= 0) add_witness(report, report.c, {'C', vertex_at(i), tid, -1});
    }
    if (k <= ce - 1) {
        auto [i, tid] = first_thread_in({{k, ce - 1}, {fl + k + 1, g - 1}, {0, 0}}, 1);
        if (i >= 0) add_witness(report, report.d, {'D', vertex_at(i), tid, -1});
    }
    if (a == 2) {
        int needed = fl - k + 1;
        for (int i = 0; i <= k; ++i) {
            int p = stored(i);
            if (view.sfree_count[p] == 0 || view.sfree_maxlen[p] < needed) continue;
            if (!even) {
                add_witness(report, report.e, {'E', vertex_at(i), view.sfree_thread[p], -1});
                break;
            }
            // even girth: an S-free thread must also hang at v_j, j = g/2+k-i
            // (for j == i the same thread serves both clauses)
            int j = (g / 2 + k - i) % g;
            int pj = stored(j);
            if (view.sfree_count[pj] > 0) {
                add_witness(report, report.e, {'E', vertex_at(i), view.sfree_thread[p], vertex_at(j)});
                break;
            }
        }
    }
}

}  // namespace

ConfigReport config_flags(const CycleView& view) {
    ConfigReport report;
    if (view.active.empty()) return report;
    for (const Labeling& l : minimal_labelings(view.girth, view.active))
        evaluate_labeling(view, l, report);
    return report;
}

ConfigReport detect_configurations(const Graph& g, const CactusDecomposition& d,
                                   const ThreadProfile& tp, int cycle,
                                   const std::vector<int>& s) {
    if (!is_branch_resolving(tp, s))
        throw Error(ErrorKind::NotBiactiveBranchResolving,
                    "configurations are defined only for biactive branch-resolving sets "
                    "(set is not branch-resolving)");
    if (!is_biactive(d, s))
        throw Error(ErrorKind::NotBiactiveBranchResolving,
                    "configurations are defined only for biactive branch-resolving sets "
                    "(set is not biactive)");
    return config_flags(make_cycle_view(d, tp, cycle, s));
}

SPath s_path_from_positions(const Cycle& c, const std::vector<int>& positions, int cycle_index) {
    SPath path;
    path.cycle_index = cycle_index;
    int a = static_cast<int>(positions.size());
    if (a == 0)
        throw Error(ErrorKind::InternalInconsistency, "s_path: empty active set");
    int girth = c.girth();
    int best_gap = -1, best_t = -1, max_count = 0;
    for (int t = 0; t < a; ++t) {
        int next = positions[(t + 1) % a];
        int gap = t + 1 < a ? next - positions[t] : girth - positions[t] + next;
        if (gap > best_gap) {
            best_gap = gap;
            best_t = t;
            max_count = 1;
        } else if (gap == best_gap) {
            ++max_count;
        }
    }
    path.length = girth - best_gap;
    path.end_pos_a = positions[(best_t + 1) % a];
    path.end_pos_b = positions[best_t];
    path.unique = max_count == 1;
    return path;
}

SPath s_path(const Cycle& c, const std::vector<int>& active) {
    std::vector<int> positions;
    for (int v : active) {
        int p = c.position_of(v);
        if (p >= 0) positions.push_back(p);
    }
    return s_path_from_positions(c, normalized_vertex_set(std::move(positions)), -1);
}

CriticalStatus critical_vertices(const Cycle& c, const std::vector<int>& active) {
    CriticalStatus status;
    std::vector<int> positions;
    for (int v : active) {
        int p = c.position_of(v);
        if (p >= 0) positions.push_back(p);
    }
    positions = normalized_vertex_set(std::move(positions));
    if (positions.empty()) return status;
    SPath path = s_path_from_positions(c, positions, -1);
    int girth = c.girth();
    std::vector<int> ends = normalized_vertex_set(
        {c.vertices[path.end_pos_a], c.vertices[path.end_pos_b]});
    if (path.length <= girth / 2 - 1) status.vertex_critical = ends;
    if (path.length <= (girth + 1) / 2 - 1) status.edge_critical = ends;
    return status;
}

std::vector<std::pair<int, int>> critical_incidences(const CactusDecomposition& d,
                                                     const std::vector<int>& s, Mode mode) {
    int c = d.cycle_count();
    std::vector<std::vector<int>> critical(c);
    for (int i = 0; i < c; ++i) {
        std::vector<int> active = active_vertices(d, i, s);
        if (active.empty()) continue;
        CriticalStatus st = critical_vertices(d.cycles[i], active);
        critical[i] = mode == Mode::Vertex ? st.vertex_critical : st.edge_critical;
    }
    std::vector<std::pair<int, int>> pairs;
    for (int v = 0; v < static_cast<int>(d.cycle_membership.size()); ++v) {
        const auto& cycles = d.cycle_membership[v];
        if (cycles.size() < 2) continue;
        for (size_t x = 0; x < cycles.size(); ++x)
            for (size_t y = x + 1; y < cycles.size(); ++y)
                if (set_contains(critical[cycles[x]], v) && set_contains(critical[cycles[y]], v))
                    pairs.emplace_back(cycles[x], cycles[y]);
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return pairs;
}

namespace {

GeneratorDiagnosis ok_diagnosis() {
    GeneratorDiagnosis d;
    d.ok = true;
    d.message = "generator";
    return d;
}

GeneratorDiagnosis tree_diagnosis(const Graph& g, const ThreadProfile& tp,
                                  const std::vector<int>& s, Mode mode) {
    int n = g.vertex_count();
    if (n == 1) return ok_diagnosis();
    bool is_path = true;
    for (int v = 0; v < n && is_path; ++v)
        if (g.degree(v) > 2) is_path = false;
    if (is_path) {
        if (mode == Mode::Edge && g.edge_count() < 2) return ok_diagnosis();
        bool resolves = s.size() >= 2 || (s.size() == 1 && g.degree(s.front()) == 1);
        if (resolves) return ok_diagnosis();
        GeneratorDiagnosis d;
        d.cause = GeneratorDiagnosis::Cause::DegeneratePath;
        d.message = "a path needs an end vertex or two vertices in the set";
        return d;
    }
    if (!is_branch_resolving(tp, s)) {
        GeneratorDiagnosis d;
        d.cause = GeneratorDiagnosis::Cause::NotBranchResolving;
        d.message = "set is not branch-resolving";
        return d;
    }
    return ok_diagnosis();
}

}  // namespace

GeneratorDiagnosis is_generator_structural(const Graph& g, const CactusContext& ctx,
                                           const std::vector<int>& s_in, Mode mode) {
    std::vector<int> s = normalized_vertex_set(s_in);
    const CactusDecomposition& dec = ctx.dec;
    if (dec.cycle_count() == 0) return tree_diagnosis(g, ctx.threads, s, mode);

    if (!is_branch_resolving(ctx.threads, s)) {
        GeneratorDiagnosis d;
        d.cause = GeneratorDiagnosis::Cause::NotBranchResolving;
        d.message = "set is not branch-resolving";
        return d;
    }
    for (int i = 0; i < dec.cycle_count(); ++i) {
        if (active_positions_for(dec, i, s).size() < 2) {
            GeneratorDiagnosis d;
            d.cause = GeneratorDiagnosis::Cause::NotBiactive;
            d.cycle = i;
            d.message = "cycle " + std::to_string(i) + " has fewer than two active vertices";
            return d;
        }
    }
    for (int i = 0; i < dec.cycle_count(); ++i) {
        ConfigReport flags = config_flags(make_cycle_view(dec, ctx.threads, i, s));
        if (flags.any(mode)) {
            GeneratorDiagnosis d;
            d.cause = GeneratorDiagnosis::Cause::Configuration;
            d.cycle = i;
            std::string triple = mode == Mode::Vertex ? "ABC" : "ADE";
            for (char f : triple)
                if (flags.flag(f)) {
                    d.config = f;
                    break;
                }
            d.message = std::string("cycle ") + std::to_string(i) + " contains configuration " +
                        d.config;
            return d;
        }
    }
    auto pairs = critical_incidences(dec, s, mode);
    if (!pairs.empty()) {
        GeneratorDiagnosis d;
        d.cause = GeneratorDiagnosis::Cause::CriticalIncidence;
        d.pair = pairs.front();
        d.message = std::string("cycles ") + std::to_string(pairs.front().first) + " and " +
                    std::to_string(pairs.front().second) + " are " + mode_name(mode) +
                    "-critically incident";
        return d;
    }
    return ok_diagnosis();
}

GeneratorDiagnosis is_generator_structural(const Graph& g, const std::vector<int>& s, Mode mode) {
    return is_generator_structural(g, analyze_structure(g), s, mode);
}

}  // namespace cactidim
