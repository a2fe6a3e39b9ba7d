#pragma once

#include <cstdint>

#include "cactidim/graph.hpp"

namespace cactidim {

// Small deterministic generator (splitmix64) so instances are reproducible
// across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

    // uniform in [lo, hi]
    int between(int lo, int hi) { return lo + below(hi - lo + 1); }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

struct CactusParams {
    int n_target = 12;
    int cycle_count = 2;
    int max_girth = 8;
    double thread_bias = 0.4;
    std::uint64_t seed = 1;
};

// Grows a cactus by attaching pendant paths and cycles at uniformly chosen
// existing vertices. Exactly n_target vertices, exactly cycle_count cycles,
// deterministic per parameter set. Requires n_target >= 3 * cycle_count
// (and n_target >= 1) or throws InfeasibleParams.
Graph random_cactus(const CactusParams& params);

// Uniform random-attachment tree on n vertices.
Graph random_tree(int n, std::uint64_t seed);

// The tightness family: a star with b+1 leaves at its center u, plus c
// disjoint copies of a 6-cycle with one pendant leaf, each joined to u by an
// edge at its degree-3 vertex. n = b+2+7c, m = b+1+8c. Requires b >= 0 and
// c >= 2 or throws InfeasibleParams.
Graph extremal_family(int b, int c);

}  // namespace cactidim
