#pragma once

#include <optional>
#include <vector>

#include "cactidim/graph.hpp"
#include "cactidim/resolving.hpp"

namespace cactidim {

// Ground-truth generator check by exhaustive distance-vector comparison.
// Vertex mode: all vertices get pairwise-distinct distance vectors to S.
// Edge mode: all edges, with d(s, vw) = min{d(s,v), d(s,w)}.
bool is_generator_bruteforce(const Graph& g, const std::vector<int>& s, Mode mode);
bool is_generator_bruteforce(const Graph& g, const DistanceMatrix& dist,
                             const std::vector<int>& s, Mode mode);

struct BruteforceResult {
    int value = 0;
    std::vector<int> witness;  // lexicographically first minimum witness
};

// Minimum generator size by subset enumeration in (size, lex) order.
// Throws TooLarge when n exceeds `max_n`. `upper_bound`, when given, caps the
// search (used with the proven L+B+c bound on cacti); exhausting it without a
// hit raises InternalInconsistency since that would contradict the bound.
BruteforceResult metric_dimension_bruteforce(const Graph& g, Mode mode, int max_n = 14,
                                             std::optional<int> upper_bound = std::nullopt);

// Iterates the color-change rule (a black vertex with exactly one white
// neighbor forces it) to a fixed point; returns the final black set.
std::vector<int> zero_forcing_closure(const Graph& g, const std::vector<int>& s);

// Smallest set whose closure is V(G), by subset enumeration.
BruteforceResult zero_forcing_number(const Graph& g, int max_n = 12);

}  // namespace cactidim
