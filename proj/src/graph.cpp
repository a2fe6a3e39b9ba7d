#include "cactidim/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace cactidim {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MalformedLine: return "MalformedLine";
        case ErrorKind::SelfLoop: return "SelfLoop";
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::NotACactus: return "NotACactus";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::InfeasibleParams: return "InfeasibleParams";
        case ErrorKind::InternalInconsistency: return "InternalInconsistency";
        case ErrorKind::NotBiactiveBranchResolving: return "NotBiactiveBranchResolving";
    }
    return "Unknown";
}

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edge_pairs,
                        std::vector<long long> original_ids) {
    Graph g;
    g.n_ = n;
    if (n <= 0)
        throw Error(ErrorKind::MalformedLine, "graph has no vertices");
    g.adj_.resize(n);
    g.edges_.reserve(edge_pairs.size());
    std::set<EdgeRef> seen;
    for (auto [a, b] : edge_pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw Error(ErrorKind::MalformedLine,
                        "edge (" + std::to_string(a) + "," + std::to_string(b) +
                            ") references a vertex outside 0.." + std::to_string(n - 1));
        if (a == b)
            throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(a));
        EdgeRef e(a, b);
        if (!seen.insert(e).second)
            throw Error(ErrorKind::DuplicateEdge,
                        "duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
    g.edges_.assign(seen.begin(), seen.end());
    for (const EdgeRef& e : g.edges_) {
        g.adj_[e.u].push_back(e.v);
        g.adj_[e.v].push_back(e.u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());

    if (original_ids.empty()) {
        g.original_ids_.resize(n);
        for (int v = 0; v < n; ++v) g.original_ids_[v] = v;
    } else {
        if (static_cast<int>(original_ids.size()) != n)
            throw Error(ErrorKind::InternalInconsistency, "original id table size mismatch");
        g.original_ids_ = std::move(original_ids);
    }

    // connectivity
    std::vector<char> visited(n, 0);
    std::deque<int> queue{0};
    visited[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.adj_[v]) {
            if (!visited[w]) {
                visited[w] = 1;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    if (reached != n) {
        int missing = 0;
        while (visited[missing]) ++missing;
        throw Error(ErrorKind::Disconnected,
                    "graph is disconnected: vertex " + std::to_string(g.original_ids_[missing]) +
                        " is not reachable from vertex " + std::to_string(g.original_ids_[0]));
    }
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph parse_edge_list(std::istream& in) {
    std::vector<std::pair<long long, long long>> raw_edges;
    std::string line;
    int line_no = 0;
    long long declared_n = -1;
    while (std::getline(in, line)) {
        ++line_no;
        std::string trimmed = line;
        size_t hash = trimmed.find('#');
        std::string comment;
        if (hash != std::string::npos) {
            comment = trimmed.substr(hash + 1);
            trimmed = trimmed.substr(0, hash);
        }
        // the "# n=K" directive, useful only for the single-vertex graph
        if (!comment.empty()) {
            std::istringstream cs(comment);
            std::string token;
            if (cs >> token && token.rfind("n=", 0) == 0) {
                try {
                    declared_n = std::stoll(token.substr(2));
                } catch (const std::exception&) {
                    // not a directive, just a comment
                }
            }
        }
        std::istringstream ls(trimmed);
        long long a, b;
        if (!(ls >> a)) continue;  // blank or comment-only line
        if (!(ls >> b))
            throw Error(ErrorKind::MalformedLine,
                        "line " + std::to_string(line_no) + ": expected two integers, got \"" +
                            line + "\"");
        std::string extra;
        if (ls >> extra)
            throw Error(ErrorKind::MalformedLine,
                        "line " + std::to_string(line_no) + ": trailing content \"" + extra + "\"");
        if (a < 0 || b < 0)
            throw Error(ErrorKind::MalformedLine,
                        "line " + std::to_string(line_no) + ": vertex ids must be non-negative");
        if (a == b)
            throw Error(ErrorKind::SelfLoop,
                        "line " + std::to_string(line_no) + ": self-loop at vertex " +
                            std::to_string(a));
        raw_edges.emplace_back(a, b);
    }

    if (raw_edges.empty()) {
        if (declared_n == 1) {
            return Graph::from_edges(1, {}, {0});
        }
        throw Error(ErrorKind::MalformedLine,
                    "input contains no edges (a single-vertex graph needs a \"# n=1\" line)");
    }

    // compact arbitrary ids to 0..n-1 in sorted order, remember the mapping
    std::map<long long, int> compact;
    for (auto& [a, b] : raw_edges) {
        compact.emplace(a, 0);
        compact.emplace(b, 0);
    }
    std::vector<long long> original;
    original.reserve(compact.size());
    for (auto& [id, slot] : compact) {
        slot = static_cast<int>(original.size());
        original.push_back(id);
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(raw_edges.size());
    std::set<EdgeRef> seen;
    for (auto [a, b] : raw_edges) {
        EdgeRef e(compact[a], compact[b]);
        if (!seen.insert(e).second)
            throw Error(ErrorKind::DuplicateEdge,
                        "duplicate edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
        edges.emplace_back(e.u, e.v);
    }
    int n = static_cast<int>(original.size());
    return Graph::from_edges(n, std::move(edges), std::move(original));
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    if (g.edge_count() == 0) {
        out << "# n=" << g.vertex_count() << "\n";
        return out.str();
    }
    for (const EdgeRef& e : g.edges())
        out << g.original_id(e.u) << " " << g.original_id(e.v) << "\n";
    return out.str();
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    int n = g.vertex_count();
    DistanceMatrix m(n);
    for (int s = 0; s < n; ++s) {
        std::vector<int> row = bfs_distances(g, s);
        for (int v = 0; v < n; ++v) m.set(s, v, row[v]);
    }
    return m;
}

int vertex_edge_distance(const DistanceMatrix& dist, int u, EdgeRef e) {
    return std::min(dist.at(u, e.u), dist.at(u, e.v));
}

int vertex_edge_distance(const std::vector<int>& dist_from_u, EdgeRef e) {
    return std::min(dist_from_u[e.u], dist_from_u[e.v]);
}

int cyclomatic_number(const Graph& g) {
    return g.edge_count() - g.vertex_count() + 1;
}

std::string to_dot(const Graph& g, const std::vector<int>& fill_blue,
                   const std::vector<int>& fill_red) {
    auto blue = normalized_vertex_set(fill_blue);
    auto red = normalized_vertex_set(fill_red);
    std::ostringstream out;
    out << "graph {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << g.original_id(v) << " [label=\"" << g.original_id(v) << "\"";
        bool in_blue = set_contains(blue, v);
        bool in_red = set_contains(red, v);
        if (in_blue && in_red)
            out << ", style=filled, fillcolor=plum";
        else if (in_blue)
            out << ", style=filled, fillcolor=lightblue";
        else if (in_red)
            out << ", style=filled, fillcolor=lightsalmon";
        out << "];\n";
    }
    for (const EdgeRef& e : g.edges())
        out << "  " << g.original_id(e.u) << " -- " << g.original_id(e.v) << ";\n";
    out << "}\n";
    return out.str();
}

Graph induced_subgraph(const Graph& g, std::vector<int> vertices,
                       std::vector<int>* selected_out) {
    vertices = normalized_vertex_set(std::move(vertices));
    std::vector<int> index(g.vertex_count(), -1);
    for (size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (const EdgeRef& e : g.edges())
        if (index[e.u] >= 0 && index[e.v] >= 0)
            edges.emplace_back(index[e.u], index[e.v]);
    std::vector<long long> original;
    original.reserve(vertices.size());
    for (int v : vertices) original.push_back(g.original_id(v));
    if (selected_out) *selected_out = vertices;
    int n = static_cast<int>(vertices.size());
    return Graph::from_edges(n, std::move(edges), std::move(original));
}

std::vector<int> normalized_vertex_set(std::vector<int> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

bool set_contains(const std::vector<int>& sorted_set, int v) {
    return std::binary_search(sorted_set.begin(), sorted_set.end(), v);
}

}  // namespace cactidim
