#include "cactidim/audit.hpp"

namespace cactidim {

bool BoundsAudit::all_pass() const {
    for (const Entry& e : entries)
        if (!e.pass) return false;
    return true;
}

BoundsAudit audit_bounds(const Graph& g, const DimensionReport& report, int zf_limit) {
    BoundsAudit audit;
    auto check = [&](const std::string& name, long long lhs, long long rhs) {
        audit.entries.push_back({name, lhs <= rhs, lhs, rhs});
    };
    long long L = report.L, B = report.B, c = report.cyclomatic;
    check("L+B <= dim", L + B, report.dim);
    check("L+B <= edim", L + B, report.edim);
    // the component-sum bounds come from the dimension formula, which does
    // not cover paths (their dimension is 1, all components 0)
    if (report.fast_path != "path") {
        check("dim <= L+B+c", report.dim, L + B + c);
        check("edim <= L+B+c", report.edim, L + B + c);
    }
    if (c >= 2) {
        check("dim <= L+2c", report.dim, L + 2 * c);
        check("edim <= L+2c", report.edim, L + 2 * c);
    }
    if (g.vertex_count() <= zf_limit) {
        BruteforceResult zf = zero_forcing_number(g, zf_limit);
        audit.zf_ran = true;
        audit.z = zf.value;
        audit.zf_witness = zf.witness;
        check("dim <= Z+c", report.dim, zf.value + c);
        check("edim <= Z+c", report.edim, zf.value + c);
        check("L+B <= Z", L + B, zf.value);
    }
    return audit;
}

}  // namespace cactidim
