#include "cactidim/report.hpp"

#include <sstream>

namespace cactidim {

namespace {

nlohmann::ordered_json id_list(const Graph& g, const std::vector<int>& vertices) {
    auto out = nlohmann::ordered_json::array();
    for (int v : vertices) out.push_back(g.original_id(v));
    return out;
}

nlohmann::ordered_json incidence_json(const Graph& g, const IncidenceGraph& ig) {
    auto out = nlohmann::ordered_json::array();
    for (const IncidenceEdge& e : ig.edges) {
        nlohmann::ordered_json entry;
        entry["cycles"] = {e.i, e.j};
        entry["shared_vertex"] = g.original_id(e.shared_vertex);
        out.push_back(entry);
    }
    return out;
}

nlohmann::ordered_json witness_json(const Graph& g, const std::vector<ConfigWitness>& witnesses) {
    auto out = nlohmann::ordered_json::array();
    for (const ConfigWitness& w : witnesses) {
        nlohmann::ordered_json entry;
        entry["flag"] = std::string(1, w.flag);
        if (w.vertex >= 0) entry["vertex"] = g.original_id(w.vertex);
        if (w.partner >= 0) entry["partner"] = g.original_id(w.partner);
        out.push_back(entry);
    }
    return out;
}

}  // namespace

nlohmann::ordered_json report_to_json(const Graph& g, const DimensionReport& rep,
                                      const BoundsAudit* audit) {
    nlohmann::ordered_json j;
    j["n"] = rep.n;
    j["m"] = rep.m;
    j["cyclomatic"] = rep.cyclomatic;
    j["is_cactus"] = rep.is_cactus;
    j["L"] = rep.L;
    j["B"] = rep.B;
    auto cycles = nlohmann::ordered_json::array();
    for (const PerCycleDiag& diag : rep.per_cycle) {
        nlohmann::ordered_json c;
        c["index"] = diag.index;
        c["girth"] = diag.girth;
        c["b"] = diag.b;
        c["class_abc"] = diag.abc_positive ? "positive" : "negative";
        c["class_ade"] = diag.ade_positive ? "positive" : "negative";
        c["flags"] = {{"vertex", diag.flags_vertex}, {"edge", diag.flags_edge}};
        if (!diag.witnesses_vertex.empty())
            c["flags"]["vertex_witnesses"] = witness_json(g, diag.witnesses_vertex);
        if (!diag.witnesses_edge.empty())
            c["flags"]["edge_witnesses"] = witness_json(g, diag.witnesses_edge);
        c["placement"] = {{"vertex", id_list(g, diag.placement_vertex)},
                          {"edge", id_list(g, diag.placement_edge)}};
        cycles.push_back(std::move(c));
    }
    j["per_cycle"] = std::move(cycles);
    j["c_abc"] = rep.c_abc;
    j["c_ade"] = rep.c_ade;
    j["tau_vi"] = rep.tau_vi;
    j["tau_ei"] = rep.tau_ei;
    j["dim"] = rep.dim;
    j["edim"] = rep.edim;
    j["cert_vertex"] = id_list(g, rep.cert_vertex);
    j["cert_edge"] = id_list(g, rep.cert_edge);
    j["incidence_vi"] = incidence_json(g, rep.gvi);
    j["incidence_ei"] = incidence_json(g, rep.gei);
    if (!rep.fast_path.empty()) j["fast_path"] = rep.fast_path;
    nlohmann::ordered_json audits;
    if (audit) {
        for (const BoundsAudit::Entry& entry : audit->entries)
            audits[entry.name] = entry.pass ? "pass" : "FAIL";
        if (audit->zf_ran) {
            audits["Z"] = audit->z;
            audits["Z_witness"] = id_list(g, audit->zf_witness);
        } else {
            audits["zero_forcing"] = "skipped";
        }
    }
    j["audits"] = std::move(audits);
    return j;
}

std::string report_table(const Graph& g, const DimensionReport& rep, const BoundsAudit* audit) {
    std::ostringstream out;
    out << "n=" << rep.n << " m=" << rep.m << " cyclomatic=" << rep.cyclomatic
        << (rep.is_cactus ? " cactus=yes" : " cactus=no") << "\n";
    if (!rep.fast_path.empty()) out << "fast path: " << rep.fast_path << "\n";
    out << "L=" << rep.L << " B=" << rep.B << " c_abc=" << rep.c_abc << " c_ade=" << rep.c_ade
        << " tau_vi=" << rep.tau_vi << " tau_ei=" << rep.tau_ei << "\n";
    out << "dim=" << rep.dim << " edim=" << rep.edim << "\n";
    auto show_set = [&](const std::vector<int>& vs) {
        std::ostringstream s;
        s << "{";
        for (size_t i = 0; i < vs.size(); ++i) {
            if (i) s << ",";
            s << g.original_id(vs[i]);
        }
        s << "}";
        return s.str();
    };
    out << "cert_vertex=" << show_set(rep.cert_vertex) << " cert_edge=" << show_set(rep.cert_edge)
        << "\n";
    if (!rep.per_cycle.empty()) {
        out << "cycle girth b abc      ade      flags(v/e) placement(v/e)\n";
        for (const PerCycleDiag& diag : rep.per_cycle) {
            std::string fv = diag.flags_vertex.empty() ? "-" : diag.flags_vertex;
            std::string fe = diag.flags_edge.empty() ? "-" : diag.flags_edge;
            out << "  " << diag.index << "    " << diag.girth << "    " << diag.b << " "
                << (diag.abc_positive ? "positive" : "negative") << " "
                << (diag.ade_positive ? "positive" : "negative") << " " << fv << "/" << fe << " "
                << show_set(diag.placement_vertex) << "/" << show_set(diag.placement_edge) << "\n";
        }
    }
    for (const IncidenceEdge& e : rep.gei.edges)
        out << "edge-critical incidence: cycles " << e.i << "," << e.j << " at vertex "
            << g.original_id(e.shared_vertex) << "\n";
    for (const IncidenceEdge& e : rep.gvi.edges)
        out << "vertex-critical incidence: cycles " << e.i << "," << e.j << " at vertex "
            << g.original_id(e.shared_vertex) << "\n";
    if (audit) {
        for (const BoundsAudit::Entry& entry : audit->entries)
            out << "audit " << entry.name << ": " << (entry.pass ? "pass" : "FAIL") << " ("
                << entry.lhs << " vs " << entry.rhs << ")\n";
        if (audit->zf_ran)
            out << "Z=" << audit->z << " witness=" << show_set(audit->zf_witness) << "\n";
        else
            out << "zero-forcing audit skipped (graph too large)\n";
    }
    return out.str();
}

}  // namespace cactidim
