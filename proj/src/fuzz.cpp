#include "cactidim/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "cactidim/audit.hpp"
#include "cactidim/cactus.hpp"
#include "cactidim/instances.hpp"
#include "cactidim/oracle.hpp"
#include "cactidim/solver.hpp"

namespace cactidim {

namespace {

std::uint64_t graph_fingerprint(const Graph& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&](std::uint64_t x) {
        h ^= x;
        h *= 0x100000001b3ULL;
    };
    mix(static_cast<std::uint64_t>(g.vertex_count()));
    for (const EdgeRef& e : g.edges()) {
        mix(static_cast<std::uint64_t>(e.u));
        mix(static_cast<std::uint64_t>(e.v));
    }
    return h;
}

// A deterministic biactive branch-resolving sample for the structural-vs-
// brute-force spot check.
std::vector<int> sample_bbr(const Graph& g, const CactusContext& ctx, Rng& rng) {
    std::vector<int> s = base_branch_resolving_set(ctx.threads);
    const CactusDecomposition& d = ctx.dec;
    for (int i = 0; i < d.cycle_count(); ++i) {
        std::vector<int> ba = branch_active_positions(g, d, i);
        int need = std::max(0, 2 - static_cast<int>(ba.size()));
        std::vector<int> fresh;
        for (int p = 0; p < d.cycles[i].girth(); ++p)
            if (!set_contains(ba, p)) fresh.push_back(p);
        while (need-- > 0 && !fresh.empty()) {
            int pick = rng.below(static_cast<int>(fresh.size()));
            s.push_back(d.cycles[i].vertices[fresh[pick]]);
            fresh.erase(fresh.begin() + pick);
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (rng.below(5) == 0) s.push_back(v);
    return normalized_vertex_set(std::move(s));
}

}  // namespace

std::optional<std::string> check_instance(const Graph& g, int oracle_limit, int zf_limit,
                                          bool* oracle_ran) {
    if (oracle_ran) *oracle_ran = false;
    DimensionReport rep;
    CactusContext ctx;
    try {
        ctx = analyze_structure(g);
        rep = compute_dimensions(g);
    } catch (const Error& e) {
        return std::string("solver error: ") + e.what();
    }
    // paths are the one fast path whose answer (1) is not the component sum
    if (rep.fast_path != "path" &&
        (rep.dim != rep.L + rep.B + rep.c_abc + rep.tau_vi ||
         rep.edim != rep.L + rep.B + rep.c_ade + rep.tau_ei))
        return std::string("formula components do not add up");
    if (!regions_are_isometric(g, ctx.dec)) return std::string("region isometry violated");

    BoundsAudit audit = audit_bounds(g, rep, zf_limit);
    for (const BoundsAudit::Entry& entry : audit.entries)
        if (!entry.pass)
            return "bound violated: " + entry.name + " (" + std::to_string(entry.lhs) + " vs " +
                   std::to_string(entry.rhs) + ")";

    Rng rng(graph_fingerprint(g));
    for (int trial = 0; trial < 2; ++trial) {
        std::vector<int> s = sample_bbr(g, ctx, rng);
        for (Mode mode : {Mode::Vertex, Mode::Edge}) {
            bool structural = is_generator_structural(g, ctx, s, mode).ok;
            bool brute = is_generator_bruteforce(g, s, mode);
            if (structural != brute) {
                std::ostringstream what;
                what << "structural/oracle disagreement (" << mode_name(mode) << " mode) on set {";
                for (size_t i = 0; i < s.size(); ++i)
                    what << (i ? "," : "") << g.original_id(s[i]);
                what << "}: structural=" << structural << " oracle=" << brute;
                return what.str();
            }
        }
    }

    if (g.vertex_count() <= oracle_limit) {
        if (oracle_ran) *oracle_ran = true;
        // the proven cap L+B+c covers everything but paths (dimension 1)
        int ub = std::max(1, rep.L + rep.B + rep.cyclomatic);
        try {
            BruteforceResult v = metric_dimension_bruteforce(g, Mode::Vertex, oracle_limit, ub);
            BruteforceResult e = metric_dimension_bruteforce(g, Mode::Edge, oracle_limit, ub);
            if (v.value != rep.dim)
                return "dim mismatch: solver " + std::to_string(rep.dim) + ", oracle " +
                       std::to_string(v.value);
            if (e.value != rep.edim)
                return "edim mismatch: solver " + std::to_string(rep.edim) + ", oracle " +
                       std::to_string(e.value);
        } catch (const Error& e) {
            return std::string("oracle error: ") + e.what();
        }
    }
    return std::nullopt;
}

Graph shrink_failure(const Graph& g, int oracle_limit, int zf_limit) {
    Graph current = g;
    bool shrunk = true;
    while (shrunk && current.vertex_count() > 2) {
        shrunk = false;
        for (int skip = 0; skip < current.vertex_count(); ++skip) {
            std::vector<int> keep;
            for (int v = 0; v < current.vertex_count(); ++v)
                if (v != skip) keep.push_back(v);
            Graph candidate;
            try {
                candidate = induced_subgraph(current, keep);
            } catch (const Error&) {
                continue;  // deletion disconnects
            }
            if (check_instance(candidate, oracle_limit, zf_limit).has_value()) {
                current = std::move(candidate);
                shrunk = true;
                break;
            }
        }
    }
    return current;
}

Graph fuzz_instance(const FuzzParams& params, int index) {
    Rng rng(params.seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(index + 1)));
    CactusParams cp;
    cp.cycle_count = params.max_cycles == 0 ? 0 : 1 + rng.below(params.max_cycles);
    int min_n = std::max(4, 3 * cp.cycle_count);
    cp.n_target = min_n + (params.max_n > min_n ? rng.below(params.max_n - min_n + 1) : 0);
    cp.max_girth = params.max_girth;
    cp.thread_bias = params.thread_bias;
    cp.seed = rng.next();
    return random_cactus(cp);
}

FuzzSummary run_fuzz_campaign(const FuzzParams& params) {
    FuzzSummary summary;
    summary.checked = params.count;

    struct InstanceResult {
        bool oracle_ran = false;
        std::optional<std::string> failure;
        std::string edge_list;
    };
    std::vector<InstanceResult> results(params.count);

    int jobs = params.jobs > 0 ? params.jobs
                               : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<int>(jobs, std::max(1, params.count));
    std::atomic<int> next{0};
    auto worker = [&]() {
        while (true) {
            int i = next.fetch_add(1);
            if (i >= params.count) break;
            Graph g = fuzz_instance(params, i);
            InstanceResult& r = results[i];
            r.edge_list = to_edge_list(g);
            r.failure = check_instance(g, params.oracle_limit, params.zf_limit, &r.oracle_ran);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();

    // merge in instance order; shrink failures serially for determinism
    for (int i = 0; i < params.count; ++i) {
        if (results[i].oracle_ran) ++summary.oracle_compared;
        if (!results[i].failure) continue;
        FuzzFailure f;
        f.instance = i;
        f.what = *results[i].failure;
        f.edge_list = results[i].edge_list;
        Graph shrunk = shrink_failure(fuzz_instance(params, i), params.oracle_limit,
                                      params.zf_limit);
        f.shrunk_edge_list = to_edge_list(shrunk);
        summary.failures.push_back(std::move(f));
    }
    return summary;
}

}  // namespace cactidim
