#include "cstar/campaign.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

#ifdef CSTAR_HAVE_OPENMP
#include <omp.h>
#endif

#include "cstar/random.hpp"

namespace cstar {

namespace {

void require(bool condition, const char* message) {
    if (!condition) throw std::invalid_argument(message);
}

double relative(double value, double a, double b) { return value / (1.0 + std::max(a, b)); }

}  // namespace

void CampaignConfig::validate() const {
    require(instances > 0, "instances must be positive");
    require(max_n >= 1 && max_n <= 8, "max_n must lie in [1, 8]");
    require(max_k >= 1 && max_k <= 8, "max_k must lie in [1, 8]");
    require(max_nodes >= 1 && max_nodes <= 64, "max_nodes must lie in [1, 64]");
    require(tolerance_identity > 0.0 && tolerance_identity <= 1e-3,
            "tolerance_identity must lie in (0, 1e-3]");
    require(tolerance_inequality > 0.0 && tolerance_inequality <= 1e-3,
            "tolerance_inequality must lie in (0, 1e-3]");
    require(jobs >= 1, "jobs must be positive");
}

GrussInstance make_campaign_instance(std::uint64_t seed, const CampaignConfig& config) {
    Rng rng(seed);
    const auto n = static_cast<std::size_t>(rng.uniform_int(1, config.max_n));
    const auto k = static_cast<std::size_t>(rng.uniform_int(1, config.max_k));
    const auto m = static_cast<std::size_t>(rng.uniform_int(1, config.max_nodes));
    MeasurePtr measure = random_measure(rng, m);
    BoundingPair pf{random_matrix(rng, n, k), random_matrix(rng, n, k)};
    BoundingPair pg{random_matrix(rng, n, k), random_matrix(rng, n, k)};
    const std::uint64_t f_seed = mix_seed(seed, 1);
    const std::uint64_t g_seed = mix_seed(seed, 2);
    SampledFunction f = admissible_random_function(pf, measure, f_seed);
    SampledFunction g = admissible_random_function(pg, measure, g_seed);
    return {std::move(f), std::move(g), std::move(pf), std::move(pg)};
}

CampaignRow run_campaign_instance(std::uint64_t index, const CampaignConfig& config) {
    const std::uint64_t seed = mix_seed(config.seed, index);
    const GrussInstance instance = make_campaign_instance(seed, config);
    CampaignRow row;
    row.seed = seed;
    row.n = static_cast<int>(instance.f.rows());
    row.k = static_cast<int>(instance.f.cols());
    row.m = static_cast<int>(instance.f.size());
    row.report = evaluate(instance, config.tolerance_inequality, config.tolerance_identity);
    return row;
}

std::vector<CampaignRow> run_campaign_serial(const CampaignConfig& config) {
    config.validate();
    std::vector<CampaignRow> rows(static_cast<std::size_t>(config.instances));
    for (int i = 0; i < config.instances; ++i) {
        rows[static_cast<std::size_t>(i)] = run_campaign_instance(static_cast<std::uint64_t>(i), config);
    }
    return rows;
}

std::vector<CampaignRow> run_campaign_parallel(const CampaignConfig& config) {
    config.validate();
    std::vector<CampaignRow> rows(static_cast<std::size_t>(config.instances));
#ifdef CSTAR_HAVE_OPENMP
    // Exceptions must not escape an OpenMP region.
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16) num_threads(config.jobs)
    for (int i = 0; i < config.instances; ++i) {
        try {
            rows[static_cast<std::size_t>(i)] =
                run_campaign_instance(static_cast<std::uint64_t>(i), config);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
#else
    for (int i = 0; i < config.instances; ++i) {
        rows[static_cast<std::size_t>(i)] = run_campaign_instance(static_cast<std::uint64_t>(i), config);
    }
#endif
    return rows;
}

CampaignSummary summarize(const std::vector<CampaignRow>& rows) {
    CampaignSummary s;
    s.instances = static_cast<int>(rows.size());
    constexpr double inf = std::numeric_limits<double>::infinity();
    s.worst_slack01 = s.worst_slack12 = s.worst_slack23 = s.worst_premise_margin = inf;
    for (const CampaignRow& row : rows) {
        const InequalityReport& r = row.report;
        if (!r.pass) ++s.violations;
        if (!r.identities_hold) ++s.identity_failures;
        s.worst_slack01 = std::min(s.worst_slack01, relative(r.slack01, r.L0, r.L1));
        s.worst_slack12 = std::min(s.worst_slack12, relative(r.slack12, r.L1, r.L2));
        s.worst_slack23 = std::min(s.worst_slack23, relative(r.slack23, r.L2, r.L3));
        s.worst_premise_margin =
            std::min({s.worst_premise_margin, r.premise_margin_f / (1.0 + r.premise_scale_f),
                      r.premise_margin_g / (1.0 + r.premise_scale_g)});
        s.worst_identity_residual =
            std::max({s.worst_identity_residual, r.identity_residual_f / (1.0 + r.identity_scale_f),
                      r.identity_residual_g / (1.0 + r.identity_scale_g)});
    }
    if (rows.empty()) s.worst_slack01 = s.worst_slack12 = s.worst_slack23 = s.worst_premise_margin = 0.0;
    return s;
}

std::string campaign_csv(const std::vector<CampaignRow>& rows) {
    std::string out = kCampaignCsvHeader;
    out += '\n';
    for (const CampaignRow& row : rows) {
        const InequalityReport& r = row.report;
        out += fmt::format(
            "{},{},{},{},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{}\n",
            row.seed, row.n, row.k, row.m, r.L0, r.L1, r.L2, r.L3, r.slack01, r.slack12, r.slack23,
            r.premise_margin_f, r.premise_margin_g, r.pass ? 1 : 0);
    }
    return out;
}

}  // namespace cstar
