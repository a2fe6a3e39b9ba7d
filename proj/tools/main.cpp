#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cactidim/audit.hpp"
#include "cactidim/fuzz.hpp"
#include "cactidim/instances.hpp"
#include "cactidim/oracle.hpp"
#include "cactidim/report.hpp"
#include "cactidim/solver.hpp"

namespace {

using namespace cactidim;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotACactus = 2;
constexpr int kExitFuzzMismatch = 3;

Graph read_graph(const std::string& path) {
    if (path == "-") return parse_edge_list(std::cin);
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::MalformedLine, "cannot open \"" + path + "\"");
    return parse_edge_list(in);
}

int exit_code_for(const Error& e) {
    return e.kind() == ErrorKind::NotACactus ? kExitNotACactus : kExitUsage;
}

struct AnalyzeArgs {
    std::string input;
    std::string mode = "both";
    bool json = false;
    std::string dot_path;
    int zf_limit = 12;
};

int run_analyze(const AnalyzeArgs& args) {
    Graph g = read_graph(args.input);
    DimensionReport rep = compute_dimensions(g);
    BoundsAudit audit = audit_bounds(g, rep, args.zf_limit);
    if (!args.dot_path.empty()) {
        std::ofstream out(args.dot_path);
        if (!out) throw Error(ErrorKind::MalformedLine, "cannot write \"" + args.dot_path + "\"");
        out << to_dot(g, rep.cert_vertex, rep.cert_edge);
    }
    if (args.json) {
        std::cout << report_to_json(g, rep, &audit).dump(2) << "\n";
    } else if (args.mode == "vertex") {
        std::cout << "dim=" << rep.dim << "\n" << report_table(g, rep, &audit);
    } else if (args.mode == "edge") {
        std::cout << "edim=" << rep.edim << "\n" << report_table(g, rep, &audit);
    } else {
        std::cout << report_table(g, rep, &audit);
    }
    return kExitOk;
}

int run_zf(const std::string& input, int limit) {
    Graph g = read_graph(input);
    BruteforceResult z = zero_forcing_number(g, limit);
    std::cout << "Z=" << z.value << " witness={";
    for (size_t i = 0; i < z.witness.size(); ++i)
        std::cout << (i ? "," : "") << g.original_id(z.witness[i]);
    std::cout << "}\n";
    bool cactus = true;
    try {
        decompose_cactus(g);
    } catch (const Error&) {
        cactus = false;
    }
    if (!cactus) {
        std::cout << "input is not a cactus; dimension audits skipped\n";
        return kExitOk;
    }
    DimensionReport rep = compute_dimensions(g);
    long long c = rep.cyclomatic;
    auto verdict = [](bool pass) { return pass ? "pass" : "FAIL"; };
    std::cout << "dim=" << rep.dim << " edim=" << rep.edim << " c=" << c << "\n";
    std::cout << "audit dim <= Z+c: " << verdict(rep.dim <= z.value + c) << "\n";
    std::cout << "audit edim <= Z+c: " << verdict(rep.edim <= z.value + c) << "\n";
    std::cout << "audit L+B <= Z: " << verdict(rep.L + rep.B <= z.value) << "\n";
    return kExitOk;
}

int run_fuzz(const FuzzParams& params) {
    FuzzSummary summary = run_fuzz_campaign(params);
    for (const FuzzFailure& f : summary.failures) {
        std::cout << "FAILURE on instance " << f.instance << ": " << f.what << "\n";
        std::cout << "edge list:\n" << f.edge_list;
        std::cout << "minimized reproduction:\n" << f.shrunk_edge_list;
    }
    std::cout << (summary.checked - static_cast<int>(summary.failures.size())) << "/"
              << summary.checked << " match";
    std::cout << " (oracle compared on " << summary.oracle_compared << " instances";
    if (summary.oracle_compared < summary.checked)
        std::cout << "; larger instances ran bound audits only";
    std::cout << ")\n";
    return summary.ok() ? kExitOk : kExitFuzzMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact vertex and edge metric dimension of cactus graphs"};
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    CLI::App* analyze = app.add_subcommand("analyze", "solve one graph and print the report");
    analyze->add_option("input", analyze_args.input, "edge-list file, or - for stdin")
        ->required();
    analyze->add_option("--mode", analyze_args.mode, "vertex|edge|both (default both)")
        ->check(CLI::IsMember({"vertex", "edge", "both"}));
    analyze->add_flag("--json", analyze_args.json, "emit the JSON report");
    analyze->add_option("--dot", analyze_args.dot_path, "write DOT with certificates highlighted");
    analyze->add_option("--zf-limit", analyze_args.zf_limit,
                        "max n for the zero-forcing audit (default 12)");

    FuzzParams fuzz_params;
    CLI::App* fuzz = app.add_subcommand("fuzz", "random cacti: solver vs oracle campaign");
    fuzz->add_option("--count", fuzz_params.count, "instances to generate (default 100)");
    fuzz->add_option("--seed", fuzz_params.seed, "campaign seed (default 1)");
    fuzz->add_option("--max-n", fuzz_params.max_n, "largest instance size (default 13)");
    fuzz->add_option("--cycles", fuzz_params.max_cycles,
                     "cycle count drawn from 1..this (0 = trees; default 3)");
    fuzz->add_option("--max-girth", fuzz_params.max_girth, "largest cycle girth (default 8)");
    fuzz->add_option("--thread-bias", fuzz_params.thread_bias,
                     "probability of growing a pendant path (default 0.4)");
    fuzz->add_option("--oracle-limit", fuzz_params.oracle_limit,
                     "max n for brute-force comparison (default 14)");
    fuzz->add_option("--zf-limit", fuzz_params.zf_limit,
                     "max n for zero-forcing audits (default 12)");
    fuzz->add_option("--jobs", fuzz_params.jobs, "worker threads (default: all cores)");

    CLI::App* gen = app.add_subcommand("gen", "emit a generated instance as an edge list");
    gen->require_subcommand(1);
    CactusParams cactus_params;
    CLI::App* gen_cactus = gen->add_subcommand("cactus", "random cactus");
    gen_cactus->add_option("--n", cactus_params.n_target, "vertex count")->required();
    gen_cactus->add_option("--cycles", cactus_params.cycle_count, "cycle count")->required();
    gen_cactus->add_option("--max-girth", cactus_params.max_girth, "largest girth (default 8)");
    gen_cactus->add_option("--thread-bias", cactus_params.thread_bias,
                           "pendant path probability (default 0.4)");
    gen_cactus->add_option("--seed", cactus_params.seed, "seed (default 1)");
    int tree_n = 1;
    std::uint64_t tree_seed = 1;
    CLI::App* gen_tree = gen->add_subcommand("tree", "random attachment tree");
    gen_tree->add_option("--n", tree_n, "vertex count")->required();
    gen_tree->add_option("--seed", tree_seed, "seed (default 1)");
    int ex_b = 0, ex_c = 2;
    CLI::App* gen_extremal = gen->add_subcommand("extremal", "the L+2c tightness family");
    gen_extremal->add_option("--b", ex_b, "number of threads at the hub (L value)")->required();
    gen_extremal->add_option("--c", ex_c, "number of cycles (>= 2)")->required();

    std::string zf_input;
    int zf_limit = 12;
    CLI::App* zf = app.add_subcommand("zf", "zero forcing number and bound audits");
    zf->add_option("input", zf_input, "edge-list file, or - for stdin")->required();
    zf->add_option("--limit", zf_limit, "max n for the subset search (default 12)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*analyze) return run_analyze(analyze_args);
        if (*fuzz) return run_fuzz(fuzz_params);
        if (*gen_cactus) {
            std::cout << to_edge_list(random_cactus(cactus_params));
            return kExitOk;
        }
        if (*gen_tree) {
            std::cout << to_edge_list(random_tree(tree_n, tree_seed));
            return kExitOk;
        }
        if (*gen_extremal) {
            std::cout << to_edge_list(extremal_family(ex_b, ex_c));
            return kExitOk;
        }
        if (*zf) return run_zf(zf_input, zf_limit);
    } catch (const Error& e) {
        std::cerr << "error (" << error_kind_name(e.kind()) << "): " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
