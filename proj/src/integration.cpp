#include "cstar/integration.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>

#include "cstar/error.hpp"

namespace cstar {

namespace {

constexpr double kWeightSumTol = 1e-12;

}  // namespace

DiscreteProbabilityMeasure::DiscreteProbabilityMeasure(std::vector<double> nodes,
                                                       std::vector<double> weights)
    : nodes_(std::move(nodes)), weights_(std::move(weights)) {
    if (nodes_.empty()) throw InvalidMeasure("measure needs at least one node");
    if (nodes_.size() != weights_.size()) {
        throw InvalidMeasure("measure has " + std::to_string(nodes_.size()) + " nodes but " +
                             std::to_string(weights_.size()) + " weights");
    }
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (!std::isfinite(weights_[i]) || weights_[i] < 0.0 || !std::isfinite(nodes_[i])) {
            throw InvalidMeasure("weight " + std::to_string(i) + " is negative or not finite");
        }
    }
    const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
    if (std::abs(total - 1.0) > kWeightSumTol) {
        throw InvalidMeasure("weights sum to " + std::to_string(total) + ", not 1");
    }
    for (double& w : weights_) w /= total;
}

DiscreteProbabilityMeasure DiscreteProbabilityMeasure::uniform(std::vector<double> nodes) {
    std::vector<double> weights(nodes.size(), nodes.empty() ? 0.0 : 1.0 / nodes.size());
    return {std::move(nodes), std::move(weights)};
}

MeasurePtr make_measure(std::vector<double> nodes, std::vector<double> weights) {
    return std::make_shared<const DiscreteProbabilityMeasure>(std::move(nodes), std::move(weights));
}

SampledFunction::SampledFunction(MeasurePtr measure, std::vector<ModuleElement> values)
    : measure_(std::move(measure)), values_(std::move(values)) {
    if (!measure_) throw InvalidMeasure("sampled function needs a measure");
    if (values_.size() != measure_->size()) {
        throw ShapeMismatch("sampled function has " + std::to_string(values_.size()) +
                            " values for " + std::to_string(measure_->size()) + " nodes");
    }
    for (const ModuleElement& v : values_) {
        if (v.rows() != values_.front().rows() || v.cols() != values_.front().cols()) {
            throw ShapeMismatch("sampled function values differ in shape");
        }
    }
}

SampledFunction SampledFunction::map(const std::function<Matrix(const Matrix&)>& fn) const {
    std::vector<ModuleElement> out;
    out.reserve(values_.size());
    for (const ModuleElement& v : values_) out.push_back(fn(v));
    return {measure_, std::move(out)};
}

GaussLegendreRule gauss_legendre(int points) {
    if (points <= 0) throw std::invalid_argument("Gauss-Legendre rule needs a positive order");
    const auto n = static_cast<std::size_t>(points);
    GaussLegendreRule rule{std::vector<double>(n), std::vector<double>(n)};
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double derivative = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre recurrence for P_n(x) and P_n'(x).
            double p0 = 1.0;
            double p1 = x;
            for (std::size_t k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
                p0 = p1;
                p1 = p2;
            }
            derivative = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
            const double step = p1 / derivative;
            x -= step;
            if (std::abs(step) < 1e-16) break;
        }
        const double weight = 2.0 / ((1.0 - x * x) * derivative * derivative);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = weight;
        rule.weights[n - 1 - i] = weight;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

MeasurePtr quadrature_measure(const QuadratureScheme& scheme) {
    if (scheme.panels <= 0 || scheme.points_per_panel <= 0) {
        throw std::invalid_argument("quadrature scheme needs positive panels and points");
    }
    const GaussLegendreRule rule = gauss_legendre(scheme.points_per_panel);
    const double width = 1.0 / scheme.panels;
    std::vector<double> nodes;
    std::vector<double> weights;
    for (int p = 0; p < scheme.panels; ++p) {
        const double left = p * width;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            nodes.push_back(left + 0.5 * width * (rule.nodes[i] + 1.0));
            weights.push_back(0.5 * width * rule.weights[i]);
        }
    }
    return make_measure(std::move(nodes), std::move(weights));
}

void require_compatible(const SampledFunction& f, const SampledFunction& g) {
    if (f.measure_ptr() != g.measure_ptr() && !(f.measure() == g.measure())) {
        throw MeasureMismatch("functions are sampled on different measures");
    }
    if (f.rows() != g.rows() || f.cols() != g.cols()) {
        throw ShapeMismatch("functions take values in different modules");
    }
}

ModuleElement bochner_integral(const SampledFunction& f) {
    Matrix sum(f.rows(), f.cols());
    for (std::size_t i = 0; i < f.size(); ++i) sum += f.weight(i) * f[i];
    return sum;
}

Residual integral_right_action_residual(const SampledFunction& f, const AlgebraElement& a) {
    const SampledFunction fa = f.map([&](const Matrix& v) { return right_action(v, a); });
    const Matrix lhs = bochner_integral(fa);
    const Matrix rhs = right_action(bochner_integral(f), a);
    double scale = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) scale += f.weight(i) * frobenius_norm(f[i]);
    return {operator_norm(lhs - rhs), scale * frobenius_norm(a)};
}

Residual integral_adjoint_residual(const SampledFunction& f) {
    if (f.rows() != f.cols()) throw ShapeMismatch("integral_adjoint_residual needs square values");
    const Matrix lhs = bochner_integral(f.map([](const Matrix& v) { return adjoint(v); }));
    const Matrix rhs = adjoint(bochner_integral(f));
    double scale = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) scale += f.weight(i) * frobenius_norm(f[i]);
    return {operator_norm(lhs - rhs), scale};
}

Margin integral_positivity_margin(const SampledFunction& f, double tol) {
    if (f.rows() != f.cols()) throw ShapeMismatch("integral_positivity_margin needs square values");
    double scale = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const PsdCheck check = is_psd(f[i], tol);
        if (!check.psd) {
            throw NotPsd("value at node " + std::to_string(i) + " has eigenvalue " +
                         std::to_string(check.margin));
        }
        scale += f.weight(i) * operator_norm(f[i]);
    }
    return {loewner_margin(bochner_integral(f)), scale};
}

double l2_norm(const SampledFunction& f) {
    double sum = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double norm = module_norm(f[i]);
        sum += f.weight(i) * norm * norm;
    }
    return std::sqrt(sum);
}

SampledFunction constant_function(const ModuleElement& a, MeasurePtr measure) {
    const std::size_t m = measure ? measure->size() : 0;
    return {std::move(measure), std::vector<ModuleElement>(m, a)};
}

SampledFunction discretize(const std::function<ModuleElement(double)>& fn,
                           const QuadratureScheme& scheme) {
    MeasurePtr measure = quadrature_measure(scheme);
    std::vector<ModuleElement> values;
    values.reserve(measure->size());
    for (double t : measure->nodes()) values.push_back(fn(t));
    return {std::move(measure), std::move(values)};
}

}  // namespace cstar
