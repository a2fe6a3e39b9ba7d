#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cactidim {

enum class ErrorKind {
    MalformedLine,
    SelfLoop,
    DuplicateEdge,
    Disconnected,
    NotACactus,
    TooLarge,
    InfeasibleParams,
    InternalInconsistency,
    NotBiactiveBranchResolving,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// An edge as an unordered pair of vertex ids, normalized so u < v.
struct EdgeRef {
    int u;
    int v;

    EdgeRef(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool operator==(const EdgeRef& o) const { return u == o.u && v == o.v; }
    bool operator<(const EdgeRef& o) const {
        return u != o.u ? u < o.u : v < o.v;
    }
};

// Simple connected undirected graph on dense vertex ids 0..n-1.
// Construction rejects self-loops, duplicate edges and disconnected input.
class Graph {
public:
    Graph() = default;

    // Validates simplicity and connectivity; `original_ids` (optional) maps
    // compact id -> the id the vertex had in the input.
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edge_pairs,
                            std::vector<long long> original_ids = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<EdgeRef>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    long long original_id(int v) const { return original_ids_[v]; }
    const std::vector<long long>& original_ids() const { return original_ids_; }

private:
    int n_ = 0;
    std::vector<EdgeRef> edges_;            // sorted lexicographically
    std::vector<std::vector<int>> adj_;     // sorted neighbor lists
    std::vector<long long> original_ids_;   // compact id -> input id
};

// Parses whitespace-separated "u v" lines; '#' starts a comment, blank lines
// are ignored. Input ids are arbitrary non-negative integers and get
// compacted (in sorted order) to 0..n-1; the mapping is kept on the graph.
// A "# n=1" directive declares a single isolated vertex (the one graph that
// cannot be written as an edge list).
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);

// Canonical edge-list text for a graph (original ids, sorted lines).
std::string to_edge_list(const Graph& g);

// Hop distances between all vertex pairs, via BFS from every vertex.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(int n) : n_(n), d_(static_cast<size_t>(n) * n, -1) {}

    int size() const { return n_; }
    int at(int u, int v) const { return d_[static_cast<size_t>(u) * n_ + v]; }
    void set(int u, int v, int value) { d_[static_cast<size_t>(u) * n_ + v] = value; }

private:
    int n_ = 0;
    std::vector<int> d_;
};

DistanceMatrix all_pairs_distances(const Graph& g);

// Single-source hop distances (one BFS); -1 for unreachable.
std::vector<int> bfs_distances(const Graph& g, int source);

// d(u, vw) = min{d(u,v), d(u,w)}.
int vertex_edge_distance(const DistanceMatrix& dist, int u, EdgeRef e);
int vertex_edge_distance(const std::vector<int>& dist_from_u, EdgeRef e);

// |E| - |V| + 1; equals the number of cycles in a cactus.
int cyclomatic_number(const Graph& g);

// DOT text (one `graph { ... }` block, labels are original ids). Vertices in
// `fill_blue` / `fill_red` get a fill color; vertices in both get a third one.
std::string to_dot(const Graph& g, const std::vector<int>& fill_blue = {},
                   const std::vector<int>& fill_red = {});

// Subgraph induced by `vertices` (need not be sorted). Compact ids follow the
// sorted order of `vertices`; original ids carry through. Throws Disconnected
// if the induced subgraph is not connected.
Graph induced_subgraph(const Graph& g, std::vector<int> vertices,
                       std::vector<int>* selected_out = nullptr);

// Sorted-unique helpers used for vertex sets throughout.
std::vector<int> normalized_vertex_set(std::vector<int> s);
bool set_contains(const std::vector<int>& sorted_set, int v);

}  // namespace cactidim
