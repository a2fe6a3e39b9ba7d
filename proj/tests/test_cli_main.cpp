// Drives the installed CLI binary (path in argv[1]) through its subcommands
// and checks outputs and exit codes.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace {

std::string g_binary;
int g_failures = 0;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = g_binary + " " + args + " 2>&1";
    std::array<char, 4096> buffer{};
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        result.output = "popen failed";
        return result;
    }
    size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

void expect(bool condition, const std::string& what, const RunResult& r) {
    if (condition) {
        std::printf("[ok] %s\n", what.c_str());
    } else {
        std::printf("[FAIL] %s\n  exit=%d output:\n%s\n", what.c_str(), r.exit_code,
                    r.output.c_str());
        ++g_failures;
    }
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("cli_test_") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: cli_tests <path-to-cactidim>\n");
        return 2;
    }
    g_binary = argv[1];

    std::string butterfly = write_temp("butterfly.txt", "0 1\n0 2\n1 2\n0 3\n0 4\n3 4\n");
    std::string k4 = write_temp("k4.txt", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    std::string tree = write_temp("tree.txt", "0 1\n0 2\n0 3\n");
    std::string bad = write_temp("bad.txt", "0 1\n0 1\n");

    RunResult r = run("analyze " + butterfly);
    expect(r.exit_code == 0 && contains(r.output, "dim=2 edim=3"), "analyze butterfly", r);

    r = run("analyze " + butterfly + " --json");
    expect(r.exit_code == 0 && contains(r.output, "\"dim\": 2") &&
               contains(r.output, "\"edim\": 3") && contains(r.output, "\"per_cycle\""),
           "analyze --json carries the contract fields", r);

    RunResult again = run("analyze " + butterfly + " --json");
    expect(again.exit_code == 0 && again.output == r.output,
           "analyze --json is byte-identical across runs", again);

    r = run("analyze " + k4);
    expect(r.exit_code == 2 && contains(r.output, "block {0,1,2,3}"), "K_4 exits 2", r);

    r = run("analyze " + bad);
    expect(r.exit_code == 1 && contains(r.output, "duplicate"), "duplicate edge exits 1", r);

    r = run("analyze " + tree);
    expect(r.exit_code == 0 && contains(r.output, "fast path: tree") &&
               contains(r.output, "dim=2 edim=2"),
           "tree analyze notes the fast path", r);

    r = run("analyze " + butterfly + " --dot cli_test_out.dot");
    std::ifstream dot("cli_test_out.dot");
    std::string dot_text((std::istreambuf_iterator<char>(dot)), std::istreambuf_iterator<char>());
    expect(r.exit_code == 0 && contains(dot_text, "graph {") && contains(dot_text, "fillcolor"),
           "dot export highlights certificates", r);

    r = run("gen extremal --b 0 --c 2");
    int edge_lines = 0;
    for (size_t pos = 0; pos < r.output.size();) {
        size_t end = r.output.find('\n', pos);
        if (end == std::string::npos) end = r.output.size();
        if (end > pos && std::isdigit(static_cast<unsigned char>(r.output[pos]))) ++edge_lines;
        pos = end + 1;
    }
    expect(r.exit_code == 0 && edge_lines == 17, "gen extremal 0 2 prints 17 edge lines", r);

    r = run("gen tree --n 1");
    expect(r.exit_code == 0 && contains(r.output, "# n=1"), "gen tree --n 1 prints the header", r);

    r = run("gen cactus --n 12 --cycles 0 --seed 5");
    expect(r.exit_code == 0, "gen cactus with zero cycles is a tree", r);

    RunResult gen1 = run("gen cactus --n 14 --cycles 3 --seed 9");
    RunResult gen2 = run("gen cactus --n 14 --cycles 3 --seed 9");
    expect(gen1.exit_code == 0 && gen1.output == gen2.output, "gen is deterministic", gen1);

    r = run("gen cactus --n 5 --cycles 2 --seed 1");
    expect(r.exit_code == 1, "infeasible gen params exit 1", r);

    r = run("fuzz --count 40 --seed 11 --max-n 12");
    expect(r.exit_code == 0 && contains(r.output, "40/40 match"), "fuzz campaign passes", r);

    RunResult fuzz2 = run("fuzz --count 40 --seed 11 --max-n 12");
    expect(fuzz2.output == r.output, "fuzz summary is deterministic", fuzz2);

    r = run("fuzz --count 10 --seed 3 --max-n 13 --oracle-limit 10");
    expect(r.exit_code == 0 && contains(r.output, "bound audits only"),
           "fuzz notes oracle-skipped instances", r);

    std::string p6 = write_temp("p6.txt", "0 1\n1 2\n2 3\n3 4\n4 5\n");
    r = run("zf " + p6);
    expect(r.exit_code == 0 && contains(r.output, "Z=1"), "zf on P_6", r);

    std::string c6 = write_temp("c6.txt", "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    r = run("zf " + c6);
    expect(r.exit_code == 0 && contains(r.output, "Z=2"), "zf on C_6", r);

    r = run("zf " + butterfly);
    expect(r.exit_code == 0 && contains(r.output, "audit dim <= Z+c: pass") &&
               contains(r.output, "audit edim <= Z+c: pass") &&
               contains(r.output, "audit L+B <= Z: pass"),
           "zf audits pass on the butterfly", r);

    std::string big = write_temp("big.txt", [] {
        std::string text;
        for (int v = 1; v < 14; ++v)
            text += std::to_string(v - 1) + " " + std::to_string(v) + "\n";
        return text;
    }());
    r = run("zf " + big + " --limit 12");
    expect(r.exit_code == 1, "zf beyond the limit exits 1", r);

    if (g_failures == 0) std::printf("cli tests: all passed\n");
    return g_failures;
}
