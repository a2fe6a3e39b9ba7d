#pragma once

#include <string>

#include <json.hpp>

#include "cactidim/audit.hpp"
#include "cactidim/solver.hpp"

namespace cactidim {

// JSON report with the stable field names consumed by downstream tooling:
// {n, m, cyclomatic, is_cactus, L, B, per_cycle:[{index, girth, b, class_abc,
//  class_ade, flags, placement}], c_abc, c_ade, tau_vi, tau_ei, dim, edim,
//  cert_vertex, cert_edge, audits:{...}}. Vertex ids are the input's ids.
nlohmann::ordered_json report_to_json(const Graph& g, const DimensionReport& rep,
                                      const BoundsAudit* audit);

// Human-readable rendering of the same data.
std::string report_table(const Graph& g, const DimensionReport& rep, const BoundsAudit* audit);

}  // namespace cactidim
