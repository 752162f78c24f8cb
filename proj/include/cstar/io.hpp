#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cstar/applications.hpp"
#include "cstar/campaign.hpp"
#include "cstar/gruss.hpp"

namespace cstar {

using Json = nlohmann::json;

// Instance document:
//   { "dims": {"n": N, "k": K}, "nodes": [...], "weights": [...],
//     "f_values": [M, ...], "g_values": [M, ...],
//     "x": M, "x_prime": M, "y": M, "y_prime": M }
// where M is a row-major list of N*K complex entries, each [re, im] (a bare number means im = 0).
// Nested rows ([[[re, im], ...], ...]) are also accepted.

/// Throws InputError anchored at line:column for syntax errors and at a JSON pointer for
/// schema errors.
GrussInstance parse_instance(std::string_view text);

Json matrix_to_json(const Matrix& m);
Json instance_to_json(const GrussInstance& instance);

struct InstanceMeta {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t nodes = 0;
    std::optional<std::uint64_t> seed;
};

Json report_to_json(const InequalityReport& report, const InstanceMeta& meta);

/// Keys mirror the CLI flags: seed, instances, max_n, max_k, max_nodes, tol_id, tol_ineq, out, jobs.
/// Missing keys keep the values already in `base`.
CampaignConfig parse_config(std::string_view text, CampaignConfig base = {});

Json summary_to_json(const CampaignSummary& summary, const CampaignConfig& config);

Json exp_report_to_json(const ExpAppReport& report);

}  // namespace cstar
