#include "cstar/applications.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include <fmt/format.h>

#include "cstar/error.hpp"
#include "cstar/gruss.hpp"
#include "cstar/random.hpp"

namespace cstar {

namespace {

void require_invertible(const AlgebraElement& a) {
    if (!a.is_square()) throw ShapeMismatch("exponential application needs a square A");
    const HermitianEigenResult gram = hermitian_eigen(hermitian_part(adjoint(a) * a));
    const double sigma_max = std::sqrt(std::max(gram.eigenvalues.back(), 0.0));
    const double sigma_min = std::sqrt(std::max(gram.eigenvalues.front(), 0.0));
    if (sigma_min == 0.0 || sigma_min < 1e-8 * sigma_max) {
        throw Singular(fmt::format("A is not invertible (sigma_min = {:.3g}, ||A|| = {:.3g})",
                                   sigma_min, sigma_max));
    }
}

Matrix rescale_to_norm(const Matrix& m, double target) {
    const double norm = operator_norm(m);
    return norm == 0.0 ? m : (target / norm) * m;
}

}  // namespace

AlgebraElement exp_integral_closed_form(const AlgebraElement& a) {
    require_invertible(a);
    return inverse(a) * (matrix_exp(a) - Matrix::identity(a.rows()));
}

ExpAppReport exp_bound_check(const AlgebraElement& a, const QuadratureScheme& scheme) {
    require_invertible(a);
    if (operator_norm(a) > kExpNormCap) {
        throw std::domain_error(fmt::format("||A|| exceeds the cap {}", kExpNormCap));
    }
    const std::size_t k = a.rows();
    const SampledFunction f = discretize([&](double t) { return matrix_exp(t * a); }, scheme);

    Matrix gram(k, k);
    for (std::size_t i = 0; i < f.size(); ++i) gram += f.weight(i) * inner_product(f[i], f[i]);
    const Matrix mean = bochner_integral(f);
    const Matrix mean_abs_sq = inner_product(mean, mean);
    const Matrix closed = exp_integral_closed_form(a);
    const Matrix exp_a = matrix_exp(a);
    const Matrix exp_abs_sq = inner_product(exp_a, exp_a);

    const Matrix variance = gram - mean_abs_sq;
    const Matrix bound = 2.25 * exp_abs_sq;
    const BoundingPair pair{-exp_a, 2.0 * exp_a};

    ExpAppReport report{gram, mean_abs_sq, closed, exp_abs_sq};
    report.margin_variance = loewner_margin(variance);
    report.margin_bound = loewner_margin(bound - variance);
    report.margin_combined = loewner_margin(bound + inner_product(closed, closed) - gram);
    report.premise_margin = center_defect(f, pair).premise.value;
    report.quadrature_error = operator_norm(mean - closed);
    report.scale = operator_norm(exp_abs_sq) + operator_norm(gram);
    return report;
}

ScalarExpMargins scalar_exp_margins(double a) {
    if (a == 0.0) throw Singular("scalar exponential margins need a != 0");
    const double mean = std::expm1(a) / a;
    const double gram = std::expm1(2.0 * a) / (2.0 * a);
    const double bound = 2.25 * std::exp(2.0 * a);
    const double variance = gram - mean * mean;
    return {variance, bound - variance, bound + mean * mean - gram};
}

ExpSweepResult run_exp_sweep(const ExpSweepConfig& config) {
    if (config.k <= 0 || config.samples <= 0) {
        throw std::invalid_argument("sweep needs positive k and samples");
    }
    if (!(config.norm_cap > 0.0) || config.norm_cap > kExpNormCap) {
        throw std::invalid_argument(fmt::format("norm cap must lie in (0, {}]", kExpNormCap));
    }
    const auto k = static_cast<std::size_t>(config.k);
    Rng rng(config.seed);

    std::vector<std::pair<std::string, Matrix>> samples;
    for (int i = 0; i < config.samples; ++i) {
        if (k == 1) {
            const double value = config.samples == 1
                                     ? config.norm_cap
                                     : -config.norm_cap + 2.0 * config.norm_cap * i / (config.samples - 1);
            samples.emplace_back(fmt::format("real:{:.17g}", value), Matrix::scalar(value));
        } else {
            const double radius = rng.uniform(0.0, config.norm_cap);
            samples.emplace_back(fmt::format("hermitian:{}", i),
                                 rescale_to_norm(random_hermitian(rng, k), radius));
        }
    }
    for (int i = 0; i < config.samples; ++i) {
        const double radius = rng.uniform(0.0, config.norm_cap);
        samples.emplace_back(fmt::format("general:{}", i),
                             rescale_to_norm(random_matrix(rng, k, k), radius));
    }

    ExpSweepResult result;
    for (auto& [descriptor, a] : samples) {
        try {
            ExpAppReport report = exp_bound_check(a);
            const Margin variance{report.margin_variance, report.scale};
            if (!variance.holds(config.tolerance)) ++result.variance_failures;
            result.rows.push_back({descriptor, operator_norm(a), std::move(report)});
        } catch (const Singular&) {
            result.rejected.push_back(descriptor);
        }
    }
    return result;
}

std::string exp_sweep_csv(const ExpSweepResult& result) {
    std::string out =
        "A_descriptor,norm_A,margin_i,margin_ii,margin_iii,premise_margin,quadrature_error\n";
    for (const ExpSweepRow& row : result.rows) {
        const ExpAppReport& r = row.report;
        out += fmt::format("{},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", row.descriptor,
                           row.norm_a, r.margin_variance, r.margin_bound, r.margin_combined,
                           r.premise_margin, r.quadrature_error);
    }
    return out;
}

}  // namespace cstar
