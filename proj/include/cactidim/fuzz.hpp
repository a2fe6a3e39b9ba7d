#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cactidim/graph.hpp"

namespace cactidim {

struct FuzzParams {
    int count = 100;
    std::uint64_t seed = 1;
    int max_n = 13;
    int max_cycles = 3;  // cycle count drawn from 1..max_cycles (0 = trees)
    int max_girth = 8;
    double thread_bias = 0.4;
    int oracle_limit = 14;
    int zf_limit = 12;
    int jobs = 0;  // 0 = hardware concurrency
};

struct FuzzFailure {
    int instance = -1;
    std::string what;
    std::string edge_list;
    std::string shrunk_edge_list;
};

struct FuzzSummary {
    int checked = 0;
    int oracle_compared = 0;
    std::vector<FuzzFailure> failures;

    bool ok() const { return failures.empty(); }
};

// Everything checked per instance: solver runs clean, formulas consistent,
// regions isometric, bounds hold, solver equals the brute-force oracle when
// the graph is small enough, and the structural verifier agrees with the
// distance-vector check on sampled sets. Returns a failure description or
// nothing.
std::optional<std::string> check_instance(const Graph& g, int oracle_limit, int zf_limit,
                                          bool* oracle_ran = nullptr);

// Greedy vertex-deletion minimization preserving check_instance failure.
Graph shrink_failure(const Graph& g, int oracle_limit, int zf_limit);

Graph fuzz_instance(const FuzzParams& params, int index);

// Deterministic per (params); instances are distributed across workers and
// results merged in instance order.
FuzzSummary run_fuzz_campaign(const FuzzParams& params);

}  // namespace cactidim
