#pragma once

#include <string>
#include <vector>

#include "cactidim/graph.hpp"
#include "cactidim/oracle.hpp"
#include "cactidim/solver.hpp"

namespace cactidim {

// Outcome of checking the proven bounds against a solved instance. Failures
// are data for the caller; nothing throws here.
struct BoundsAudit {
    struct Entry {
        std::string name;
        bool pass = false;
        long long lhs = 0;
        long long rhs = 0;
    };

    std::vector<Entry> entries;
    bool zf_ran = false;      // zero-forcing bounds need a small graph
    int z = -1;
    std::vector<int> zf_witness;

    bool all_pass() const;
};

// Structural bounds always; zero-forcing bounds (dim <= Z+c, edim <= Z+c,
// L+B <= Z) only when n <= zf_limit.
BoundsAudit audit_bounds(const Graph& g, const DimensionReport& report, int zf_limit = 12);

}  // namespace cactidim
