#include "cactidim/instances.hpp"

#include <algorithm>
#include <string>

namespace cactidim {

Graph random_cactus(const CactusParams& params) {
    int n_target = params.n_target;
    int cycles_left = params.cycle_count;
    if (n_target < 1 || cycles_left < 0 || params.max_girth < 3 ||
        params.thread_bias < 0.0 || params.thread_bias > 1.0)
        throw Error(ErrorKind::InfeasibleParams, "invalid cactus generator parameters");
    if (cycles_left > 0 && n_target < 3 * cycles_left)
        throw Error(ErrorKind::InfeasibleParams,
                    "n_target must be at least 3 * cycle_count (need " +
                        std::to_string(3 * cycles_left) + ", got " + std::to_string(n_target) +
                        ")");

    Rng rng(params.seed);
    int n = 1;
    std::vector<std::pair<int, int>> edges;

    // invariant: n_target - n >= 2 * cycles_left, so every remaining cycle
    // still fits (a cycle of girth g consumes g-1 fresh vertices)
    while (cycles_left > 0 || n < n_target) {
        int budget = n_target - n;
        bool place_cycle;
        if (cycles_left == 0)
            place_cycle = false;
        else if (budget - 1 < 2 * cycles_left)  // a pendant vertex would starve a cycle
            place_cycle = true;
        else
            place_cycle = rng.unit() >= params.thread_bias;

        int attach = rng.below(n);
        if (place_cycle) {
            int girth_cap = std::min(params.max_girth, budget - 2 * (cycles_left - 1) + 1);
            int girth = rng.between(3, girth_cap);
            for (int i = 0; i < girth - 1; ++i) {
                int v = n++;
                edges.emplace_back(i == 0 ? attach : v - 1, v);
            }
            edges.emplace_back(n - 1, attach);
            --cycles_left;
        } else {
            int len_cap = std::max(1, std::min(3, budget - 2 * cycles_left));
            int len = rng.between(1, len_cap);
            for (int i = 0; i < len; ++i) {
                int v = n++;
                edges.emplace_back(i == 0 ? attach : v - 1, v);
            }
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw Error(ErrorKind::InfeasibleParams, "tree needs at least one vertex");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(rng.below(v), v);
    return Graph::from_edges(n, std::move(edges));
}

Graph extremal_family(int b, int c) {
    if (b < 0 || c < 2)
        throw Error(ErrorKind::InfeasibleParams,
                    "extremal family needs b >= 0 and c >= 2");
    std::vector<std::pair<int, int>> edges;
    int u = 0;
    int next = 1;
    for (int i = 0; i < b + 1; ++i) edges.emplace_back(u, next++);
    for (int i = 0; i < c; ++i) {
        // 6-cycle v, x1..x5 with a pendant leaf at v, joined to u at v
        int v = next++;
        int prev = v;
        for (int j = 0; j < 5; ++j) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, v);
        edges.emplace_back(v, next++);  // the leaf
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(next, std::move(edges));
}

}  // namespace cactidim
