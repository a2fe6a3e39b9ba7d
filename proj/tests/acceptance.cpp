// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Everything here is exact integer equality; there are no tolerances.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "cactidim/audit.hpp"
#include "cactidim/cactus.hpp"
#include "cactidim/instances.hpp"
#include "cactidim/oracle.hpp"
#include "cactidim/resolving.hpp"
#include "cactidim/solver.hpp"

using namespace cactidim;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion, what.c_str(),
                detail.c_str());
    if (!pass) ++failures;
}

Graph butterfly() {
    return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    return Graph::from_edges(n, std::move(edges));
}

struct SolvedInstance {
    Graph graph;
    DimensionReport report;
};

std::vector<SolvedInstance> solved_corpus;  // criteria 1, 2 and 4 instances

// criterion 1: solver equals the brute-force oracle on 300 seeded cacti
void criterion_1() {
    auto start = std::chrono::steady_clock::now();
    int count = 300, matched = 0;
    std::string first_bad;
    for (int i = 0; i < count; ++i) {
        CactusParams params;
        params.cycle_count = 1 + i % 3;
        int slack = 13 - 3 * params.cycle_count;
        params.n_target = 3 * params.cycle_count +
                          static_cast<int>((i * 2654435761ULL) % (slack + 1));
        params.max_girth = 8;
        params.thread_bias = 0.45;
        params.seed = 0xACCE907ULL + i;
        Graph g = random_cactus(params);
        DimensionReport rep = compute_dimensions(g);
        int ub = std::max(1, rep.L + rep.B + rep.cyclomatic);
        BruteforceResult v = metric_dimension_bruteforce(g, Mode::Vertex, 13, ub);
        BruteforceResult e = metric_dimension_bruteforce(g, Mode::Edge, 13, ub);
        if (v.value == rep.dim && e.value == rep.edim) {
            ++matched;
        } else if (first_bad.empty()) {
            first_bad = "instance " + std::to_string(i) + ": solver (" + std::to_string(rep.dim) +
                        "," + std::to_string(rep.edim) + ") oracle (" + std::to_string(v.value) +
                        "," + std::to_string(e.value) + ")";
        }
        solved_corpus.push_back({std::move(g), std::move(rep)});
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    std::string detail = std::to_string(matched) + "/" + std::to_string(count) +
                         " exact in both modes, " + std::to_string(elapsed) + " ms";
    if (!first_bad.empty()) detail += "; first mismatch: " + first_bad;
    report(1, "oracle equivalence on 300 random cacti (n <= 13, 1-3 cycles)", matched == count,
           detail);
}

// criterion 2: the tightness family reaches dim = edim = b + 2c
void criterion_2() {
    bool ok = true;
    std::string detail;
    for (int b : {0, 1, 2}) {
        for (int c : {2, 3}) {
            Graph g = extremal_family(b, c);
            DimensionReport rep = compute_dimensions(g);
            bool good = rep.dim == b + 2 * c && rep.edim == b + 2 * c && rep.L == b;
            for (const PerCycleDiag& diag : rep.per_cycle)
                good = good && diag.b == 1 && diag.abc_positive && diag.ade_positive;
            if (!good) {
                ok = false;
                detail += " (b=" + std::to_string(b) + ",c=" + std::to_string(c) + " got dim=" +
                          std::to_string(rep.dim) + " edim=" + std::to_string(rep.edim) + ")";
            }
            solved_corpus.push_back({std::move(g), std::move(rep)});
        }
    }
    // oracle confirmation for (0,2): n = 16, search capped at the proven bound 4
    Graph g02 = extremal_family(0, 2);
    BruteforceResult v = metric_dimension_bruteforce(g02, Mode::Vertex, 16, 4);
    BruteforceResult e = metric_dimension_bruteforce(g02, Mode::Edge, 16, 4);
    if (v.value != 4 || e.value != 4) {
        ok = false;
        detail += " (oracle on (0,2) gave " + std::to_string(v.value) + "," +
                  std::to_string(e.value) + ")";
    }
    report(2, "extremal family: dim = edim = b+2c for (b,c) in {0,1,2}x{2,3}", ok,
           ok ? "all six structurally, (0,2) by oracle" : detail);
}

// criterion 3: trees give L in both modes, paths give 1
void criterion_3() {
    int non_paths = 0, ok_count = 0, oracle_checked = 0;
    std::string detail;
    std::uint64_t seed = 1;
    while (non_paths < 100) {
        ++seed;
        int n = 5 + static_cast<int>(seed % 2 == 0 ? seed % 9 : seed % 36);
        Graph t = random_tree(n, 0x7EE5EEDULL + seed);
        bool is_path = true;
        for (int v = 0; v < t.vertex_count(); ++v)
            if (t.degree(v) > 2) is_path = false;
        if (is_path) continue;
        ++non_paths;
        DimensionReport rep = compute_dimensions(t);
        int L = rep.L;
        bool good = rep.dim == L && rep.edim == L;
        if (good && t.vertex_count() <= 13) {
            ++oracle_checked;
            good = metric_dimension_bruteforce(t, Mode::Vertex, 13).value == L &&
                   metric_dimension_bruteforce(t, Mode::Edge, 13).value == L;
        }
        if (good)
            ++ok_count;
        else if (detail.empty())
            detail = "tree seed " + std::to_string(seed) + " failed";
    }
    bool paths_ok = true;
    for (int n : {2, 3, 7, 25}) {
        DimensionReport rep = compute_dimensions(path_graph(n));
        paths_ok = paths_ok && rep.dim == 1 && rep.edim == 1;
    }
    bool ok = ok_count == 100 && paths_ok;
    if (!paths_ok) detail += " (a path did not return 1)";
    report(3, "trees: dim = edim = L on 100 non-paths, paths return 1", ok,
           ok ? std::to_string(oracle_checked) + " of them oracle-checked" : detail);
}

// criterion 4: the butterfly fixture, exactly
void criterion_4() {
    Graph g = butterfly();
    DimensionReport rep = compute_dimensions(g);
    bool ok = rep.dim == 2 && rep.edim == 3 && rep.tau_ei == 1 && rep.tau_vi == 0 &&
              rep.gei.edges.size() == 1 && rep.gei.edges[0].shared_vertex == 0 &&
              rep.gvi.edges.empty();
    report(4, "butterfly: dim=2 edim=3 tau_ei=1 tau_vi=0, incidence at the hub", ok,
           "dim=" + std::to_string(rep.dim) + " edim=" + std::to_string(rep.edim) + " tau_vi=" +
               std::to_string(rep.tau_vi) + " tau_ei=" + std::to_string(rep.tau_ei));
    solved_corpus.push_back({std::move(g), std::move(rep)});
}

// criterion 5: the characterization agrees with the distance-vector check
void criterion_5() {
    Rng rng(0xC0FFEEULL);
    int agreements = 0, total = 0;
    std::string detail;
    for (int i = 0; total < 1000; ++i) {
        CactusParams params;
        params.cycle_count = 1 + i % 3;
        params.n_target = std::max(3 * params.cycle_count + 1, 8 + i % 6);
        params.thread_bias = 0.5;
        params.seed = 0x5EED5ULL * (i + 1);
        Graph g = random_cactus(params);
        CactusContext ctx = analyze_structure(g);
        std::vector<int> s1 = base_branch_resolving_set(ctx.threads);
        for (int trial = 0; trial < 4 && total < 1000; ++trial) {
            std::vector<int> s = s1;
            for (int c = 0; c < ctx.dec.cycle_count(); ++c) {
                std::vector<int> ba = branch_active_positions(g, ctx.dec, c);
                int need = std::max(0, 2 - static_cast<int>(ba.size()));
                std::vector<int> fresh;
                for (int p = 0; p < ctx.dec.cycles[c].girth(); ++p)
                    if (!set_contains(ba, p)) fresh.push_back(p);
                while (need-- > 0 && !fresh.empty()) {
                    int pick = rng.below(static_cast<int>(fresh.size()));
                    s.push_back(ctx.dec.cycles[c].vertices[fresh[pick]]);
                    fresh.erase(fresh.begin() + pick);
                }
            }
            for (int v = 0; v < g.vertex_count(); ++v)
                if (rng.below(5) == 0) s.push_back(v);
            s = normalized_vertex_set(std::move(s));
            if (!is_branch_resolving(ctx.threads, s) || !is_biactive(ctx.dec, s)) continue;
            for (Mode mode : {Mode::Vertex, Mode::Edge}) {
                bool structural = is_generator_structural(g, ctx, s, mode).ok;
                bool brute = is_generator_bruteforce(g, s, mode);
                ++total;
                if (structural == brute)
                    ++agreements;
                else if (detail.empty())
                    detail = "disagreement on instance " + std::to_string(i);
            }
        }
    }
    report(5, "structural verifier == brute force on 1000 biactive branch-resolving sets",
           agreements == total,
           std::to_string(agreements) + "/" + std::to_string(total) + " agree" +
               (detail.empty() ? "" : "; " + detail));
}

// criterion 6: proven bounds on every instance of criteria 1, 2 and 4
void criterion_6() {
    int violations = 0, checked = 0;
    std::string detail;
    for (const SolvedInstance& inst : solved_corpus) {
        const DimensionReport& rep = inst.report;
        long long lb = rep.L + rep.B;
        long long ub = rep.L + rep.B + rep.cyclomatic;
        bool good = lb <= rep.dim && rep.dim <= ub && lb <= rep.edim && rep.edim <= ub;
        if (rep.cyclomatic >= 2)
            good = good && rep.dim <= rep.L + 2 * rep.cyclomatic &&
                   rep.edim <= rep.L + 2 * rep.cyclomatic;
        ++checked;
        if (!good) {
            ++violations;
            if (detail.empty()) detail = "; violated on an instance with n=" + std::to_string(rep.n);
        }
    }
    report(6, "bounds L+B <= dim,edim <= L+B+c (and L+2c for c >= 2)", violations == 0,
           std::to_string(checked) + " instances, " + std::to_string(violations) + " violations" +
               detail);
}

// criterion 7: zero-forcing bounds on every small instance
void criterion_7() {
    int violations = 0, checked = 0;
    for (const SolvedInstance& inst : solved_corpus) {
        if (inst.graph.vertex_count() > 12) continue;
        BruteforceResult z = zero_forcing_number(inst.graph, 12);
        const DimensionReport& rep = inst.report;
        ++checked;
        if (!(rep.dim <= z.value + rep.cyclomatic && rep.edim <= z.value + rep.cyclomatic &&
              rep.L + rep.B <= z.value))
            ++violations;
    }
    report(7, "zero forcing: dim,edim <= Z+c and L+B <= Z on all cacti with n <= 12",
           violations == 0 && checked > 0,
           std::to_string(checked) + " instances, " + std::to_string(violations) + " violations");
}

// criterion 8: geodesic triples suppress all five configurations
void criterion_8() {
    Rng rng(0x6E0DE51CULL);
    int ok_count = 0, total = 0;
    while (total < 500) {
        int girth = 3 + rng.below(10);
        int d1 = 1 + rng.below(girth - 2);
        int d2 = 1 + rng.below(girth - d1 - 1);
        int d3 = girth - d1 - d2;
        if (d1 > girth / 2 || d2 > girth / 2 || d3 > girth / 2) continue;
        // a cycle with random pendant threads
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < girth; ++v) edges.emplace_back(v - 1, v);
        edges.emplace_back(girth - 1, 0);
        int next = girth;
        for (int p = 0; p < girth; ++p) {
            int len = rng.below(4) == 0 ? 1 + rng.below(3) : 0;
            int attach = p;
            for (int step = 0; step < len; ++step) {
                edges.emplace_back(attach, next);
                attach = next++;
            }
        }
        Graph g = Graph::from_edges(next, std::move(edges));
        CactusContext ctx = analyze_structure(g);
        std::vector<int> s{0, d1, d1 + d2};
        for (int p = 0; p < girth; ++p)
            if (rng.below(8) == 0) s.push_back(p);
        s = normalized_vertex_set(std::move(s));
        if (!geodesic_triple_exists(ctx.dec.cycles[0], s)) continue;
        ConfigReport flags = config_flags(make_cycle_view(ctx.dec, ctx.threads, 0, s));
        ++total;
        if (flags.letters().empty()) ++ok_count;
    }
    report(8, "geodesic triple of actives implies all-false configuration flags", ok_count == 500,
           std::to_string(ok_count) + "/500 samples clean");
}

// criterion 9: every unicyclic region of every fuzzed cactus is isometric
void criterion_9() {
    int violations = 0, regions = 0;
    for (const SolvedInstance& inst : solved_corpus) {
        if (inst.report.cyclomatic == 0) continue;
        CactusDecomposition d = decompose_cactus(inst.graph);
        regions += d.cycle_count();
        if (!regions_are_isometric(inst.graph, d)) ++violations;
    }
    report(9, "unicyclic regions are isometric subgraphs on every instance", violations == 0,
           std::to_string(regions) + " regions checked, " + std::to_string(violations) +
               " violations");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    if (failures == 0)
        std::printf("acceptance: all 9 criteria passed\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures;
}
