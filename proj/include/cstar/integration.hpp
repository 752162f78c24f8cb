#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "cstar/linalg.hpp"
#include "cstar/module.hpp"

namespace cstar {

/// Nodes with nonnegative weights summing to one.
class DiscreteProbabilityMeasure {
public:
    /// Weight sums within 1e-12 of one are renormalized; anything else throws InvalidMeasure.
    DiscreteProbabilityMeasure(std::vector<double> nodes, std::vector<double> weights);

    static DiscreteProbabilityMeasure uniform(std::vector<double> nodes);

    const std::vector<double>& nodes() const noexcept { return nodes_; }
    const std::vector<double>& weights() const noexcept { return weights_; }
    std::size_t size() const noexcept { return nodes_.size(); }

    friend bool operator==(const DiscreteProbabilityMeasure&,
                           const DiscreteProbabilityMeasure&) = default;

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

using MeasurePtr = std::shared_ptr<const DiscreteProbabilityMeasure>;

MeasurePtr make_measure(std::vector<double> nodes, std::vector<double> weights);

/// A module-valued function sampled at the nodes of a measure.
class SampledFunction {
public:
    /// Throws ShapeMismatch if the values are misaligned with the nodes or differ in shape.
    SampledFunction(MeasurePtr measure, std::vector<ModuleElement> values);

    const DiscreteProbabilityMeasure& measure() const noexcept { return *measure_; }
    const MeasurePtr& measure_ptr() const noexcept { return measure_; }
    const std::vector<ModuleElement>& values() const noexcept { return values_; }
    const ModuleElement& operator[](std::size_t i) const noexcept { return values_[i]; }
    std::size_t size() const noexcept { return values_.size(); }
    std::size_t rows() const noexcept { return values_.front().rows(); }
    std::size_t cols() const noexcept { return values_.front().cols(); }
    double weight(std::size_t i) const noexcept { return measure_->weights()[i]; }

    /// Pointwise image under `fn`, on the same measure.
    SampledFunction map(const std::function<Matrix(const Matrix&)>& fn) const;

private:
    MeasurePtr measure_;
    std::vector<ModuleElement> values_;
};

/// Composite Gauss-Legendre rule on [0, 1].
struct QuadratureScheme {
    int panels = 8;
    int points_per_panel = 8;
};

struct GaussLegendreRule {
    std::vector<double> nodes;    // on [-1, 1], ascending
    std::vector<double> weights;  // sum to 2
};

GaussLegendreRule gauss_legendre(int points);

/// The probability measure induced by a composite scheme on [0, 1].
MeasurePtr quadrature_measure(const QuadratureScheme& scheme);

/// Throws MeasureMismatch unless f and g live on the same measure, ShapeMismatch unless their
/// values share a shape.
void require_compatible(const SampledFunction& f, const SampledFunction& g);

/// sum_i w_i f_i, accumulated in node order.
ModuleElement bochner_integral(const SampledFunction& f);

/// ||int (f a) - (int f) a||
Residual integral_right_action_residual(const SampledFunction& f, const AlgebraElement& a);

/// ||int f* - (int f)*|| for algebra-valued f.
Residual integral_adjoint_residual(const SampledFunction& f);

/// Minimum eigenvalue of int f for pointwise PSD f. Throws NotPsd naming the first bad node.
Margin integral_positivity_margin(const SampledFunction& f, double tol = kDefaultHermitianTol);

/// (sum_i w_i ||f_i||^2)^{1/2}
double l2_norm(const SampledFunction& f);

SampledFunction constant_function(const ModuleElement& a, MeasurePtr measure);

SampledFunction discretize(const std::function<ModuleElement(double)>& fn,
                           const QuadratureScheme& scheme = {});

}  // namespace cstar
