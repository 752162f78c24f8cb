// cstar: verification front end for the Hilbert C*-module Gruss toolkit.
//
//   cstar verify INSTANCE.json        one instance, report JSON on stdout
//   cstar campaign [CONFIG.json] ...  seeded random admissible instances -> campaign.csv, summary.json
//   cstar sharpness                   the two-node step witness
//   cstar expapp ...                  exponential bounds sweep -> expapp.csv
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 input or config error.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cstar/applications.hpp"
#include "cstar/campaign.hpp"
#include "cstar/error.hpp"
#include "cstar/gruss.hpp"
#include "cstar/io.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    return static_cast<bool>(out);
}

int cmd_verify(const std::string& path, double tol_ineq, double tol_id) {
    const auto text = read_file(path);
    if (!text) {
        std::cerr << path << ": cannot read file\n";
        return kExitInput;
    }
    try {
        const cstar::GrussInstance instance = cstar::parse_instance(*text);
        const cstar::InequalityReport report = cstar::evaluate(instance, tol_ineq, tol_id);
        const cstar::InstanceMeta meta{instance.f.rows(), instance.f.cols(), instance.f.size(), {}};
        std::cout << cstar::report_to_json(report, meta).dump(2) << "\n";
        return report.pass ? kExitPass : kExitFail;
    } catch (const cstar::InputError& e) {
        std::cerr << path << ":" << e.what() << "\n";
        return kExitInput;
    } catch (const cstar::Error& e) {
        std::cerr << path << ": " << e.what() << "\n";
        return kExitInput;
    }
}

struct CampaignFlags {
    std::string config_path;
    cstar::CampaignConfig config;
};

int cmd_campaign(const CampaignFlags& flags, const CLI::App& sub) {
    cstar::CampaignConfig config;
    try {
        if (!flags.config_path.empty()) {
            const auto text = read_file(flags.config_path);
            if (!text) {
                std::cerr << flags.config_path << ": cannot read file\n";
                return kExitInput;
            }
            config = cstar::parse_config(*text, config);
        }
        // Explicit flags override the config file.
        const cstar::CampaignConfig& f = flags.config;
        if (sub.count("--seed")) config.seed = f.seed;
        if (sub.count("--instances")) config.instances = f.instances;
        if (sub.count("--max-n")) config.max_n = f.max_n;
        if (sub.count("--max-k")) config.max_k = f.max_k;
        if (sub.count("--max-nodes")) config.max_nodes = f.max_nodes;
        if (sub.count("--tol-id")) config.tolerance_identity = f.tolerance_identity;
        if (sub.count("--tol-ineq")) config.tolerance_inequality = f.tolerance_inequality;
        if (sub.count("--out")) config.output_dir = f.output_dir;
        if (sub.count("--jobs")) config.jobs = f.jobs;
        config.validate();
    } catch (const cstar::InputError& e) {
        std::cerr << flags.config_path << ":" << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "campaign config: " << e.what() << "\n";
        return kExitInput;
    }

    const auto start = std::chrono::steady_clock::now();
    const auto rows = config.jobs > 1 ? cstar::run_campaign_parallel(config)
                                      : cstar::run_campaign_serial(config);
    cstar::CampaignSummary summary = cstar::summarize(rows);
    summary.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::error_code ec;
    std::filesystem::create_directories(config.output_dir, ec);
    const std::filesystem::path dir(config.output_dir);
    const cstar::Json summary_json = cstar::summary_to_json(summary, config);
    if (!write_file(dir / "campaign.csv", cstar::campaign_csv(rows)) ||
        !write_file(dir / "summary.json", summary_json.dump(2) + "\n")) {
        std::cerr << "campaign: cannot write to " << config.output_dir << "\n";
        return kExitInput;
    }
    std::cout << summary_json.dump(2) << "\n";
    return summary.violations == 0 && summary.identity_failures == 0 ? kExitPass : kExitFail;
}

int cmd_sharpness(double left_weight, const std::string& emit_path) {
    if (!(left_weight > 0.0 && left_weight < 1.0)) {
        std::cerr << "sharpness: --left-weight must lie in (0, 1)\n";
        return kExitInput;
    }
    const cstar::GrussInstance instance = cstar::step_instance(left_weight);
    const cstar::InequalityReport report = cstar::evaluate(instance);
    if (!emit_path.empty() && !write_file(emit_path, cstar::instance_to_json(instance).dump(2) + "\n")) {
        std::cerr << "sharpness: cannot write " << emit_path << "\n";
        return kExitInput;
    }
    cstar::Json out = cstar::report_to_json(report, {1, 1, 2, {}});
    out["left_weight"] = left_weight;
    std::cout << out.dump(2) << "\n";
    bool attained = true;
    for (double value : {report.L0, report.L1, report.L2, report.L3}) {
        attained = attained && std::abs(value - 1.0) <= 1e-12;
    }
    return attained ? kExitPass : kExitFail;
}

int cmd_expapp(const cstar::ExpSweepConfig& config, const std::string& out_dir) {
    cstar::ExpSweepResult result;
    try {
        result = cstar::run_exp_sweep(config);
    } catch (const std::invalid_argument& e) {
        std::cerr << "expapp: " << e.what() << "\n";
        return kExitInput;
    }
    for (const std::string& descriptor : result.rejected) {
        std::cerr << "expapp: rejected " << descriptor << " (not invertible)\n";
    }
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (!write_file(std::filesystem::path(out_dir) / "expapp.csv", cstar::exp_sweep_csv(result))) {
        std::cerr << "expapp: cannot write to " << out_dir << "\n";
        return kExitInput;
    }
    int negative_bound = 0;
    for (const auto& row : result.rows) {
        if (row.report.margin_bound < -config.tolerance * (1.0 + row.report.scale)) ++negative_bound;
    }
    cstar::Json summary{{"rows", result.rows.size()},
                        {"rejected", result.rejected.size()},
                        {"margin_i_failures", result.variance_failures},
                        {"margin_ii_negative", negative_bound}};
    std::cout << summary.dump(2) << "\n";
    return result.variance_failures == 0 ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gruss-type inequality verification for Hilbert C*-modules"};
    app.require_subcommand(1);

    std::string instance_path;
    double verify_tol_ineq = cstar::kInequalityTol;
    double verify_tol_id = cstar::kIdentityTol;
    auto* verify = app.add_subcommand("verify", "Evaluate the inequality chain on one instance file");
    verify->add_option("instance", instance_path, "Instance JSON file")->required();
    verify->add_option("--tol-ineq", verify_tol_ineq, "Relative tolerance for inequalities");
    verify->add_option("--tol-id", verify_tol_id, "Relative tolerance for identities");

    CampaignFlags campaign_flags;
    cstar::CampaignConfig& cc = campaign_flags.config;
    auto* campaign = app.add_subcommand("campaign", "Run a seeded campaign of admissible instances");
    campaign->add_option("config", campaign_flags.config_path, "Optional config JSON file");
    campaign->add_option("--seed", cc.seed, "Campaign seed");
    campaign->add_option("--instances", cc.instances, "Number of instances");
    campaign->add_option("--max-n", cc.max_n, "Largest module row count (<= 8)");
    campaign->add_option("--max-k", cc.max_k, "Largest algebra dimension (<= 8)");
    campaign->add_option("--max-nodes", cc.max_nodes, "Largest node count (<= 64)");
    campaign->add_option("--tol-id", cc.tolerance_identity, "Identity tolerance");
    campaign->add_option("--tol-ineq", cc.tolerance_inequality, "Inequality tolerance");
    campaign->add_option("--out", cc.output_dir, "Output directory");
    campaign->add_option("--jobs", cc.jobs, "Worker threads");

    double left_weight = 0.5;
    std::string emit_path;
    auto* sharpness = app.add_subcommand("sharpness", "Evaluate the step-function sharpness witness");
    sharpness->add_option("--left-weight", left_weight, "Weight of the left node (0.5 is the witness)");
    sharpness->add_option("--emit-instance", emit_path, "Also write the instance as JSON");

    cstar::ExpSweepConfig exp_config;
    std::string exp_out = ".";
    auto* expapp = app.add_subcommand("expapp", "Sweep the matrix-exponential bounds");
    expapp->add_option("--norm-cap", exp_config.norm_cap, "Largest ||A|| (<= 50)");
    expapp->add_option("--k", exp_config.k, "Matrix dimension");
    expapp->add_option("--samples", exp_config.samples, "Samples per family");
    expapp->add_option("--seed", exp_config.seed, "Sweep seed");
    expapp->add_option("--tol", exp_config.tolerance, "Relative tolerance for margin (i)");
    expapp->add_option("--out", exp_out, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*verify) return cmd_verify(instance_path, verify_tol_ineq, verify_tol_id);
        if (*campaign) return cmd_campaign(campaign_flags, *campaign);
        if (*sharpness) return cmd_sharpness(left_weight, emit_path);
        if (*expapp) return cmd_expapp(exp_config, exp_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitInput;
}
