#include "cactidim/oracle.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace cactidim {

namespace {

// Distance rows from each landmark only; avoids the full n x n table when
// checking large certificates.
std::vector<std::vector<int>> landmark_rows(const Graph& g, const std::vector<int>& s) {
    std::vector<std::vector<int>> rows;
    rows.reserve(s.size());
    for (int v : s) rows.push_back(bfs_distances(g, v));
    return rows;
}

bool vectors_distinct(std::vector<std::vector<int>> vectors) {
    std::sort(vectors.begin(), vectors.end());
    for (size_t i = 1; i < vectors.size(); ++i)
        if (vectors[i] == vectors[i - 1]) return false;
    return true;
}

bool check_with_rows(const Graph& g, const std::vector<std::vector<int>>& rows, Mode mode) {
    if (mode == Mode::Vertex) {
        if (g.vertex_count() > 1 && rows.empty()) return false;
        std::vector<std::vector<int>> vectors(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) {
            vectors[v].reserve(rows.size());
            for (const auto& row : rows) vectors[v].push_back(row[v]);
        }
        return vectors_distinct(std::move(vectors));
    }
    if (g.edge_count() > 1 && rows.empty()) return false;
    std::vector<std::vector<int>> vectors(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        vectors[e].reserve(rows.size());
        for (const auto& row : rows) vectors[e].push_back(vertex_edge_distance(row, g.edges()[e]));
    }
    return vectors_distinct(std::move(vectors));
}

}  // namespace

bool is_generator_bruteforce(const Graph& g, const std::vector<int>& s, Mode mode) {
    return check_with_rows(g, landmark_rows(g, normalized_vertex_set(s)), mode);
}

bool is_generator_bruteforce(const Graph& g, const DistanceMatrix& dist,
                             const std::vector<int>& s, Mode mode) {
    std::vector<std::vector<int>> rows;
    for (int v : normalized_vertex_set(s)) {
        std::vector<int> row(g.vertex_count());
        for (int u = 0; u < g.vertex_count(); ++u) row[u] = dist.at(v, u);
        rows.push_back(std::move(row));
    }
    return check_with_rows(g, rows, mode);
}

namespace {

// Enumerates size-k subsets of 0..n-1 in lexicographic order.
bool next_combination(std::vector<int>& idx, int n) {
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

template <typename Check>
BruteforceResult ascending_subset_search(int n, int max_size, const Check& check,
                                         const char* what) {
    if (check(std::vector<int>{})) return {0, {}};
    for (int size = 1; size <= max_size; ++size) {
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        do {
            if (check(idx)) return {size, idx};
        } while (next_combination(idx, n));
    }
    throw Error(ErrorKind::InternalInconsistency,
                std::string(what) + ": no subset within the imposed bound succeeded");
}

}  // namespace

BruteforceResult metric_dimension_bruteforce(const Graph& g, Mode mode, int max_n,
                                             std::optional<int> upper_bound) {
    int n = g.vertex_count();
    if (n > max_n)
        throw Error(ErrorKind::TooLarge, "brute-force dimension limited to n <= " +
                                             std::to_string(max_n) + ", got n = " +
                                             std::to_string(n));
    DistanceMatrix dist = all_pairs_distances(g);
    int cap = upper_bound ? std::min(*upper_bound, n) : n;
    return ascending_subset_search(
        n, cap,
        [&](const std::vector<int>& s) { return is_generator_bruteforce(g, dist, s, mode); },
        "metric_dimension_bruteforce");
}

std::vector<int> zero_forcing_closure(const Graph& g, const std::vector<int>& s) {
    int n = g.vertex_count();
    std::vector<char> black(n, 0);
    for (int v : s) black[v] = 1;
    std::vector<int> white_neighbors(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v))
            if (!black[w]) ++white_neighbors[v];
    std::deque<int> queue;
    for (int v = 0; v < n; ++v)
        if (black[v] && white_neighbors[v] == 1) queue.push_back(v);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (!black[v] || white_neighbors[v] != 1) continue;
        int forced = -1;
        for (int w : g.neighbors(v))
            if (!black[w]) {
                forced = w;
                break;
            }
        black[forced] = 1;
        for (int w : g.neighbors(forced)) {
            --white_neighbors[w];
            if (black[w] && white_neighbors[w] == 1) queue.push_back(w);
        }
        if (white_neighbors[forced] == 1) queue.push_back(forced);
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (black[v]) out.push_back(v);
    return out;
}

BruteforceResult zero_forcing_number(const Graph& g, int max_n) {
    int n = g.vertex_count();
    if (n > max_n)
        throw Error(ErrorKind::TooLarge, "zero forcing search limited to n <= " +
                                             std::to_string(max_n) + ", got n = " +
                                             std::to_string(n));
    return ascending_subset_search(
        n, n,
        [&](const std::vector<int>& s) {
            return static_cast<int>(zero_forcing_closure(g, s).size()) == n;
        },
        "zero_forcing_number");
}

}  // namespace cactidim
