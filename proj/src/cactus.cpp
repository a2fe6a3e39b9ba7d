#include "cactidim/cactus.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace cactidim {

int Cycle::position_of(int v) const {
    for (int i = 0; i < girth(); ++i)
        if (vertices[i] == v) return i;
    return -1;
}

int Cycle::cycle_distance(int pos_a, int pos_b) const {
    int g = girth();
    int d = pos_a > pos_b ? pos_a - pos_b : pos_b - pos_a;
    return std::min(d, g - d);
}

int CactusDecomposition::shared_vertex(int i, int j) const {
    for (int v : cycles[i].vertices)
        if (cycles[j].position_of(v) >= 0) return v;
    return -1;
}

namespace {

// Iterative Hopcroft-Tarjan biconnected components; returns blocks as edge lists.
std::vector<std::vector<EdgeRef>> biconnected_blocks(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::vector<EdgeRef>> blocks;
    std::vector<EdgeRef> edge_stack;

    struct Frame {
        int v;
        int parent;
        size_t next_neighbor;
    };

    int timer = 0;
    std::vector<Frame> stack;
    stack.push_back({0, -1, 0});
    disc[0] = low[0] = timer++;
    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& nb = g.neighbors(f.v);
        if (f.next_neighbor < nb.size()) {
            int w = nb[f.next_neighbor++];
            if (w == f.parent) continue;
            if (disc[w] < 0) {
                edge_stack.emplace_back(f.v, w);
                disc[w] = low[w] = timer++;
                stack.push_back({w, f.v, 0});
            } else if (disc[w] < disc[f.v]) {
                edge_stack.emplace_back(f.v, w);
                low[f.v] = std::min(low[f.v], disc[w]);
            }
        } else {
            int v = f.v, parent = f.parent;
            stack.pop_back();
            if (parent >= 0) {
                if (!stack.empty()) low[parent] = std::min(low[parent], low[v]);
                if (low[v] >= disc[parent]) {
                    // pop the block rooted at edge (parent, v)
                    std::vector<EdgeRef> block;
                    EdgeRef sentinel(parent, v);
                    while (!edge_stack.empty()) {
                        EdgeRef e = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(e);
                        if (e == sentinel) break;
                    }
                    blocks.push_back(std::move(block));
                }
            }
        }
    }
    return blocks;
}

std::string block_description(const Graph& g, const std::vector<EdgeRef>& block) {
    std::set<long long> ids;
    for (const EdgeRef& e : block) {
        ids.insert(g.original_id(e.u));
        ids.insert(g.original_id(e.v));
    }
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (long long id : ids) {
        if (!first) out << ",";
        out << id;
        first = false;
    }
    out << "}";
    return out.str();
}

}  // namespace

CactusDecomposition decompose_cactus(const Graph& g) {
    CactusDecomposition d;
    int n = g.vertex_count();
    d.cycle_membership.resize(n);

    for (const auto& block : biconnected_blocks(g)) {
        if (block.size() < 2) continue;  // bridge edge
        std::set<int> verts;
        for (const EdgeRef& e : block) {
            verts.insert(e.u);
            verts.insert(e.v);
        }
        if (block.size() != verts.size())
            throw Error(ErrorKind::NotACactus,
                        "not a cactus: block " + block_description(g, block) + " has " +
                            std::to_string(block.size()) + " edges on " +
                            std::to_string(verts.size()) + " vertices");
        // |E| == |V|: the block is a single cycle iff every vertex has block-degree 2
        std::map<int, std::vector<int>> block_adj;
        for (const EdgeRef& e : block) {
            block_adj[e.u].push_back(e.v);
            block_adj[e.v].push_back(e.u);
        }
        for (auto& [v, nb] : block_adj)
            if (nb.size() != 2)
                throw Error(ErrorKind::NotACactus,
                            "not a cactus: block " + block_description(g, block) +
                                " is not a simple cycle");
        // walk the cycle starting at its smallest vertex, toward its smaller neighbor
        int start = *verts.begin();
        Cycle cyc;
        cyc.vertices.push_back(start);
        int prev = start;
        int cur = std::min(block_adj[start][0], block_adj[start][1]);
        while (cur != start) {
            cyc.vertices.push_back(cur);
            auto& nb = block_adj[cur];
            int next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
        }
        if (cyc.girth() < 3)
            throw Error(ErrorKind::InternalInconsistency, "degenerate cycle block");
        d.cycles.push_back(std::move(cyc));
    }

    std::sort(d.cycles.begin(), d.cycles.end(), [](const Cycle& a, const Cycle& b) {
        return a.vertices < b.vertices;
    });

    for (int i = 0; i < d.cycle_count(); ++i)
        for (int v : d.cycles[i].vertices) d.cycle_membership[v].push_back(i);

    // components T_v(C_i): BFS in G - E(C_i) from each cycle vertex
    d.gravity.assign(d.cycle_count(), {});
    d.components.assign(d.cycle_count(), {});
    for (int i = 0; i < d.cycle_count(); ++i) {
        const Cycle& cyc = d.cycles[i];
        int girth = cyc.girth();
        std::vector<char> on_cycle(n, 0);
        for (int v : cyc.vertices) on_cycle[v] = 1;
        auto is_cycle_edge = [&](int a, int b) {
            if (!on_cycle[a] || !on_cycle[b]) return false;
            int pa = cyc.position_of(a), pb = cyc.position_of(b);
            int diff = (pa - pb + girth) % girth;
            return diff == 1 || diff == girth - 1;
        };
        auto& grav = d.gravity[i];
        grav.assign(n, -1);
        d.components[i].assign(girth, {});
        for (int p = 0; p < girth; ++p) {
            int root = cyc.vertices[p];
            if (grav[root] >= 0) continue;  // cannot happen: cycle vertices are distinct
            std::deque<int> queue{root};
            grav[root] = p;
            while (!queue.empty()) {
                int v = queue.front();
                queue.pop_front();
                d.components[i][p].push_back(v);
                for (int w : g.neighbors(v)) {
                    if (grav[w] >= 0 || is_cycle_edge(v, w)) continue;
                    grav[w] = p;
                    queue.push_back(w);
                }
            }
            std::sort(d.components[i][p].begin(), d.components[i][p].end());
        }
    }
    return d;
}

ThreadProfile thread_profile(const Graph& g) {
    int n = g.vertex_count();
    ThreadProfile tp;
    tp.ell.assign(n, 0);
    tp.threads_at.assign(n, {});
    tp.thread_of.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) < 3) continue;
        for (int u : g.neighbors(v)) {
            if (g.degree(u) > 2) continue;
            // walk away from v along the degree-2 chain
            std::vector<int> chain;  // v-adjacent end first
            int prev = v, cur = u;
            bool is_thread = false;
            while (true) {
                chain.push_back(cur);
                if (g.degree(cur) == 1) {
                    is_thread = true;
                    break;
                }
                if (g.degree(cur) != 2) break;
                const auto& nb = g.neighbors(cur);
                int next = nb[0] == prev ? nb[1] : nb[0];
                if (next == v) break;  // closed a cycle back to the anchor
                prev = cur;
                cur = next;
            }
            if (!is_thread) continue;
            Thread t;
            t.anchor = v;
            t.vertices.assign(chain.rbegin(), chain.rend());  // leaf first
            int id = static_cast<int>(tp.threads.size());
            for (int w : t.vertices) tp.thread_of[w] = id;
            tp.threads_at[v].push_back(id);
            tp.ell[v] += 1;
            tp.threads.push_back(std::move(t));
        }
    }
    return tp;
}

int compute_L(const ThreadProfile& tp) {
    int total = 0;
    for (int count : tp.ell)
        if (count > 1) total += count - 1;
    return total;
}

std::vector<int> branch_active_positions(const Graph& g, const CactusDecomposition& d,
                                         int cycle) {
    const Cycle& cyc = d.cycles[cycle];
    std::vector<int> positions;
    for (int p = 0; p < cyc.girth(); ++p) {
        int v = cyc.vertices[p];
        if (g.degree(v) >= 4) {
            positions.push_back(p);
            continue;
        }
        for (int u : d.components[cycle][p]) {
            if (u != v && g.degree(u) >= 3) {
                positions.push_back(p);
                break;
            }
        }
    }
    return positions;
}

std::vector<int> branch_active_vertices(const Graph& g, const CactusDecomposition& d,
                                        int cycle) {
    std::vector<int> out;
    for (int p : branch_active_positions(g, d, cycle))
        out.push_back(d.cycles[cycle].vertices[p]);
    return out;
}

int compute_B(const Graph& g, const CactusDecomposition& d) {
    int total = 0;
    for (int i = 0; i < d.cycle_count(); ++i) {
        int b = static_cast<int>(branch_active_positions(g, d, i).size());
        total += std::max(0, 2 - b);
    }
    return total;
}

Region unicyclic_region(const Graph& g, const CactusDecomposition& d, int cycle) {
    int n = g.vertex_count();
    std::vector<char> on_any_cycle(n, 0);
    std::set<EdgeRef> cycle_edges;
    for (const Cycle& c : d.cycles) {
        int girth = c.girth();
        for (int p = 0; p < girth; ++p) {
            on_any_cycle[c.vertices[p]] = 1;
            cycle_edges.emplace(c.vertices[p], c.vertices[(p + 1) % girth]);
        }
    }

    // grow from C_i along non-cycle edges; a vertex on another cycle may
    // terminate a path but never continue it (it cannot be an interior vertex)
    std::vector<char> in_region(n, 0);
    std::deque<int> queue;
    for (int v : d.cycles[cycle].vertices) {
        in_region[v] = 1;
        queue.push_back(v);
    }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (on_any_cycle[v] && d.cycles[cycle].position_of(v) < 0) continue;
        for (int w : g.neighbors(v)) {
            if (in_region[w] || cycle_edges.count(EdgeRef(v, w))) continue;
            in_region[w] = 1;
            queue.push_back(w);
        }
    }

    Region r;
    r.cycle_index = cycle;
    for (int v = 0; v < n; ++v)
        if (in_region[v]) r.vertices.push_back(v);
    for (int v : r.vertices) {
        for (int j : d.cycle_membership[v]) {
            if (j != cycle) {
                r.boundary.push_back(v);
                break;
            }
        }
    }
    return r;
}

std::vector<int> regional_set(const Region& r, const std::vector<int>& s) {
    std::vector<int> out;
    for (int v : s)
        if (set_contains(r.vertices, v)) out.push_back(v);
    out.insert(out.end(), r.boundary.begin(), r.boundary.end());
    return normalized_vertex_set(std::move(out));
}

bool regions_are_isometric(const Graph& g, const CactusDecomposition& d) {
    for (int i = 0; i < d.cycle_count(); ++i) {
        Region r = unicyclic_region(g, d, i);
        std::vector<int> selected;
        Graph sub = induced_subgraph(g, r.vertices, &selected);
        for (size_t a = 0; a < selected.size(); ++a) {
            std::vector<int> inner = bfs_distances(sub, static_cast<int>(a));
            std::vector<int> outer = bfs_distances(g, selected[a]);
            for (size_t b = 0; b < selected.size(); ++b)
                if (inner[b] != outer[selected[b]]) return false;
        }
    }
    return true;
}

CactusContext analyze_structure(const Graph& g) {
    CactusContext ctx;
    ctx.dec = decompose_cactus(g);
    ctx.threads = thread_profile(g);
    return ctx;
}

}  // namespace cactidim
