#include <doctest.h>

#include <algorithm>

#include "cactidim/instances.hpp"
#include "cactidim/oracle.hpp"
#include "cactidim/solver.hpp"
#include "test_util.hpp"

using namespace cactidim;
using namespace cactidim::testutil;

TEST_CASE("base_branch_resolving_set examples") {
    CHECK(base_branch_resolving_set(thread_profile(star_graph(3))).size() == 2);
    CHECK(base_branch_resolving_set(thread_profile(cycle_graph(6))).empty());
    CHECK(base_branch_resolving_set(thread_profile(path_graph(7))).empty());

    // threads of lengths 1 and 3 at vertex 0 (the triangle is not a thread):
    // the length-3 thread's leaf goes into the set, the length-1 stays free
    Graph g = from_pairs(7, {{0, 1}, {0, 2}, {2, 3}, {3, 4}, {0, 5}, {0, 6}, {5, 6}});
    ThreadProfile tp = thread_profile(g);
    CHECK(tp.ell[0] == 2);
    std::vector<int> s1 = base_branch_resolving_set(tp);
    CHECK(s1 == std::vector<int>{4});
    CHECK(is_branch_resolving(tp, s1));
}

TEST_CASE("enumerate_biactive_placements examples") {
    Graph bf = butterfly();
    CactusDecomposition d = decompose_cactus(bf);
    ThreadProfile tp = thread_profile(bf);
    auto cands = enumerate_biactive_placements(bf, d, tp, 0, {});
    // anchors: all three triangle vertices (nothing is S1-active yet)
    REQUIRE(cands.size() == 3);
    std::vector<int> anchors;
    for (const auto& c : cands) anchors.push_back(d.cycles[0].vertices[c.anchor_position]);
    CHECK(normalized_vertex_set(anchors) == std::vector<int>{0, 1, 2});
    for (const auto& c : cands) CHECK(c.s_vertex == d.cycles[0].vertices[c.anchor_position]);

    // a cycle vertex carrying a thread contributes the thread's leaf
    Graph g = cycle_with_leaves(6, {2});
    CactusDecomposition dg = decompose_cactus(g);
    ThreadProfile tpg = thread_profile(g);
    for (const auto& c : enumerate_biactive_placements(g, dg, tpg, 0, {})) {
        int anchor = dg.cycles[0].vertices[c.anchor_position];
        if (anchor == 2)
            CHECK(c.s_vertex == 6);
        else
            CHECK(c.s_vertex == anchor);
    }
}

TEST_CASE("classify_cycle examples") {
    // plain C_6 is negative in both modes: 15 anchor pairs, the non-antipodal
    // ones avoid every configuration
    Graph c6 = cycle_graph(6);
    CactusDecomposition d6 = decompose_cactus(c6);
    ThreadProfile tp6 = thread_profile(c6);
    for (Mode mode : {Mode::Vertex, Mode::Edge}) {
        CycleClassification cls = classify_cycle(c6, d6, tp6, 0, {}, mode);
        CHECK(cls.cls == CycleClass::Negative);
        CHECK(cls.flexible);
        CHECK(cls.valid.size() == 15);
        CHECK(cls.feasible.size() == 12);  // all pairs except the 3 antipodal ones
    }

    // butterfly triangles: negative in both modes
    Graph bf = butterfly();
    CactusDecomposition db = decompose_cactus(bf);
    ThreadProfile tpb = thread_profile(bf);
    for (int i = 0; i < 2; ++i)
        for (Mode mode : {Mode::Vertex, Mode::Edge}) {
            CycleClassification cls = classify_cycle(bf, db, tpb, i, {}, mode);
            CHECK(cls.cls == CycleClass::Negative);
            CHECK(cls.feasible.size() == 2);
        }

    // extremal family blocks: positive in both modes
    Graph ex = extremal_family(1, 2);
    CactusDecomposition dx = decompose_cactus(ex);
    ThreadProfile tpx = thread_profile(ex);
    std::vector<int> s1 = base_branch_resolving_set(tpx);
    for (int i = 0; i < 2; ++i)
        for (Mode mode : {Mode::Vertex, Mode::Edge}) {
            CycleClassification cls = classify_cycle(ex, dx, tpx, i, s1, mode);
            CHECK(cls.cls == CycleClass::Positive);
            CHECK(cls.flexible);
            CHECK(cls.feasible.empty());
        }
}

TEST_CASE("select_nice_set examples") {
    Graph bf = butterfly();
    CactusDecomposition d = decompose_cactus(bf);
    ThreadProfile tp = thread_profile(bf);
    NiceSelection edge_sel = select_nice_set(bf, d, tp, {}, Mode::Edge);
    CHECK(edge_sel.critical_pairs == 1);  // the shared vertex cannot be avoided
    CHECK(edge_sel.nice_set.size() == 2);
    NiceSelection vertex_sel = select_nice_set(bf, d, tp, {}, Mode::Vertex);
    CHECK(vertex_sel.critical_pairs == 0);

    // two far-apart cycles: no shared vertex, no critical pairs in any mode
    Graph two = from_pairs(10, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6},
                                {6, 7}, {7, 8}, {8, 9}, {9, 7}});
    CactusDecomposition d2 = decompose_cactus(two);
    ThreadProfile tp2 = thread_profile(two);
    for (Mode mode : {Mode::Vertex, Mode::Edge}) {
        NiceSelection sel = select_nice_set(two, d2, tp2, {}, mode);
        CHECK(sel.critical_pairs == 0);
    }
}

TEST_CASE("build_incidence_graph examples") {
    Graph bf = butterfly();
    CactusDecomposition d = decompose_cactus(bf);
    ThreadProfile tp = thread_profile(bf);
    NiceSelection edge_sel = select_nice_set(bf, d, tp, {}, Mode::Edge);
    IncidenceGraph gei = build_incidence_graph(d, edge_sel.nice_set, edge_sel.classes, Mode::Edge);
    REQUIRE(gei.edges.size() == 1);
    CHECK(gei.edges[0].i == 0);
    CHECK(gei.edges[0].j == 1);
    CHECK(gei.edges[0].shared_vertex == 0);
    NiceSelection vertex_sel = select_nice_set(bf, d, tp, {}, Mode::Vertex);
    CHECK(build_incidence_graph(d, vertex_sel.nice_set, vertex_sel.classes, Mode::Vertex)
              .edges.empty());

    // three triangles at one vertex: every pair stays edge-critically incident
    Graph tri = triangle_bouquet(3);
    CactusDecomposition dt = decompose_cactus(tri);
    ThreadProfile tpt = thread_profile(tri);
    NiceSelection sel = select_nice_set(tri, dt, tpt, {}, Mode::Edge);
    IncidenceGraph ig = build_incidence_graph(dt, sel.nice_set, sel.classes, Mode::Edge);
    CHECK(ig.edges.size() == 3);
}

TEST_CASE("min_vertex_cover examples") {
    IncidenceGraph edgeless{3, {}};
    CHECK(min_vertex_cover(edgeless) == std::pair<int, std::vector<int>>{0, {}});
    IncidenceGraph single{2, {{0, 1, 7}}};
    CHECK(min_vertex_cover(single) == std::pair<int, std::vector<int>>{1, {0}});
    IncidenceGraph triangle{3, {{0, 1, -1}, {0, 2, -1}, {1, 2, -1}}};
    auto [tau, cover] = min_vertex_cover(triangle);
    CHECK(tau == 2);
    CHECK(cover == std::vector<int>{0, 1});
    IncidenceGraph path{4, {{0, 1, -1}, {1, 2, -1}, {2, 3, -1}}};
    auto [tau2, cover2] = min_vertex_cover(path);
    CHECK(tau2 == 2);
    CHECK(cover2 == std::vector<int>{0, 2});  // lexicographic among {1,2},{1,3},{0,2}
}

TEST_CASE("compute_dimensions on the butterfly") {
    DimensionReport rep = compute_dimensions(butterfly());
    CHECK(rep.dim == 2);
    CHECK(rep.edim == 3);
    CHECK(rep.L == 0);
    CHECK(rep.B == 2);
    CHECK(rep.c_abc == 0);
    CHECK(rep.c_ade == 0);
    CHECK(rep.tau_vi == 0);
    CHECK(rep.tau_ei == 1);
    REQUIRE(rep.gei.edges.size() == 1);
    CHECK(rep.gei.edges[0].shared_vertex == 0);
    CHECK(rep.cert_vertex.size() == 2);
    CHECK(rep.cert_edge.size() == 3);
    CHECK(metric_dimension_bruteforce(butterfly(), Mode::Vertex).value == rep.dim);
    CHECK(metric_dimension_bruteforce(butterfly(), Mode::Edge).value == rep.edim);
}

TEST_CASE("compute_dimensions on the extremal family") {
    DimensionReport rep = compute_dimensions(extremal_family(1, 2));
    CHECK(rep.L == 1);
    CHECK(rep.B == 2);
    CHECK(rep.c_abc == 2);
    CHECK(rep.c_ade == 2);
    CHECK(rep.tau_vi == 0);
    CHECK(rep.tau_ei == 0);
    CHECK(rep.dim == 5);
    CHECK(rep.edim == 5);
    for (const PerCycleDiag& diag : rep.per_cycle) {
        CHECK(diag.b == 1);
        CHECK(diag.abc_positive);
        CHECK(diag.ade_positive);
    }
}

TEST_CASE("compute_dimensions on plain cycles") {
    for (int girth : {3, 4, 5, 6, 7, 8}) {
        DimensionReport rep = compute_dimensions(cycle_graph(girth));
        CHECK(rep.dim == 2);
        CHECK(rep.edim == 2);
        CHECK(rep.B == 2);
        CHECK(rep.c_abc == 0);
        CHECK(rep.c_ade == 0);
    }
}

TEST_CASE("compute_dimensions on the triangle bouquet") {
    Graph tri = triangle_bouquet(3);
    DimensionReport rep = compute_dimensions(tri);
    CHECK(rep.tau_vi == 0);
    CHECK(rep.tau_ei == 2);
    CHECK(rep.dim == 3);
    CHECK(rep.edim == 5);
    CHECK(rep.dim == metric_dimension_bruteforce(tri, Mode::Vertex).value);
    CHECK(rep.edim == metric_dimension_bruteforce(tri, Mode::Edge).value);
}

TEST_CASE("compute_dimensions degenerate inputs") {
    DimensionReport single = compute_dimensions(Graph::from_edges(1, {}));
    CHECK(single.fast_path == "single_vertex");
    CHECK(single.dim == 0);
    CHECK(single.edim == 0);

    DimensionReport p2 = compute_dimensions(path_graph(2));
    CHECK(p2.fast_path == "path");
    CHECK(p2.dim == 1);
    CHECK(p2.edim == 1);

    DimensionReport p9 = compute_dimensions(path_graph(9));
    CHECK(p9.dim == 1);
    CHECK(p9.edim == 1);
    CHECK(p9.cert_vertex == std::vector<int>{0});

    DimensionReport star = compute_dimensions(star_graph(4));
    CHECK(star.fast_path == "tree");
    CHECK(star.dim == 3);
    CHECK(star.edim == 3);
    CHECK(star.dim == metric_dimension_bruteforce(star_graph(4), Mode::Vertex).value);
    CHECK(star.edim == metric_dimension_bruteforce(star_graph(4), Mode::Edge).value);
}

TEST_CASE("compute_dimensions rejects non-cacti") {
    Graph k4 = from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK_THROWS_AS(compute_dimensions(k4), Error);
}

TEST_CASE("certificates satisfy the formula and the verifiers") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        CactusParams params;
        params.n_target = 12;
        params.cycle_count = 1 + static_cast<int>(seed % 3);
        params.seed = seed * 11 + 3;
        Graph g = random_cactus(params);
        DimensionReport rep = compute_dimensions(g);
        CHECK(rep.dim == rep.L + rep.B + rep.c_abc + rep.tau_vi);
        CHECK(rep.edim == rep.L + rep.B + rep.c_ade + rep.tau_ei);
        CHECK(static_cast<int>(rep.cert_vertex.size()) == rep.dim);
        CHECK(static_cast<int>(rep.cert_edge.size()) == rep.edim);
        CHECK(is_generator_bruteforce(g, rep.cert_vertex, Mode::Vertex));
        CHECK(is_generator_bruteforce(g, rep.cert_edge, Mode::Edge));
    }
}

TEST_CASE("nice sets are smallest biactive branch-resolving sets with b <= a_S") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        CactusParams params;
        params.n_target = 12;
        params.cycle_count = 1 + static_cast<int>(seed % 3);
        params.seed = seed * 57 + 29;
        Graph g = random_cactus(params);
        CactusContext ctx = analyze_structure(g);
        std::vector<int> s1 = base_branch_resolving_set(ctx.threads);
        int L = compute_L(ctx.threads);
        int B = compute_B(g, ctx.dec);
        for (Mode mode : {Mode::Vertex, Mode::Edge}) {
            NiceSelection sel = select_nice_set(g, ctx.dec, ctx.threads, s1, mode);
            CHECK(static_cast<int>(sel.nice_set.size()) == L + B);
            CHECK(is_branch_resolving(ctx.threads, sel.nice_set));
            CHECK(is_biactive(ctx.dec, sel.nice_set));
            for (int i = 0; i < ctx.dec.cycle_count(); ++i) {
                size_t b = branch_active_positions(g, ctx.dec, i).size();
                size_t a = active_positions_for(ctx.dec, i, sel.nice_set).size();
                CHECK(b <= a);
            }
        }
    }
}

TEST_CASE("solver equals the oracle on small random cacti") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        CactusParams params;
        params.n_target = 9 + static_cast<int>(seed % 4);
        params.cycle_count = 1 + static_cast<int>(seed % 3);
        params.seed = seed * 101 + 17;
        Graph g = random_cactus(params);
        DimensionReport rep = compute_dimensions(g);
        int ub = rep.L + rep.B + rep.cyclomatic;
        CAPTURE(seed);
        CHECK(rep.dim == metric_dimension_bruteforce(g, Mode::Vertex, 14, ub).value);
        CHECK(rep.edim == metric_dimension_bruteforce(g, Mode::Edge, 14, ub).value);
    }
}
