#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cstar/gruss.hpp"

namespace cstar {

struct CampaignConfig {
    std::uint64_t seed = 42;
    int instances = 1000;
    int max_n = 4;
    int max_k = 4;
    int max_nodes = 16;
    double tolerance_identity = kIdentityTol;
    double tolerance_inequality = kInequalityTol;
    std::string output_dir = ".";
    int jobs = 1;

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

struct CampaignRow {
    std::uint64_t seed = 0;
    int n = 0;
    int k = 0;
    int m = 0;
    InequalityReport report;
};

/// Random admissible instance: dims in [1, max_n] x [1, max_k], nodes in [1, max_nodes],
/// Gaussian bounding pairs and generator-built f, g.
GrussInstance make_campaign_instance(std::uint64_t seed, const CampaignConfig& config);

CampaignRow run_campaign_instance(std::uint64_t index, const CampaignConfig& config);

/// Reference implementation: instances evaluated one after another.
std::vector<CampaignRow> run_campaign_serial(const CampaignConfig& config);

/// OpenMP fan-out over `config.jobs` threads; rows are stored by index, so the output equals
/// run_campaign_serial bit for bit.
std::vector<CampaignRow> run_campaign_parallel(const CampaignConfig& config);

struct CampaignSummary {
    int instances = 0;
    int violations = 0;          // rows with pass == false
    int identity_failures = 0;   // rows whose center-defect identity residual exceeds tolerance
    double worst_slack01 = 0.0;  // minimum relative slack over rows
    double worst_slack12 = 0.0;
    double worst_slack23 = 0.0;
    double worst_premise_margin = 0.0;
    double worst_identity_residual = 0.0;  // maximum relative residual
    double runtime_seconds = 0.0;
};

CampaignSummary summarize(const std::vector<CampaignRow>& rows);

inline constexpr const char* kCampaignCsvHeader =
    "seed,n,k,m,L0,L1,L2,L3,slack01,slack12,slack23,premise_margin_f,premise_margin_g,pass";

std::string campaign_csv(const std::vector<CampaignRow>& rows);

}  // namespace cstar
