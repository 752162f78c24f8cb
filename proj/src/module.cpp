#include "cstar/module.hpp"

#include <cmath>
#include <string>

#include "cstar/error.hpp"

namespace cstar {

namespace {

void require_same_shape(const ModuleElement& x, const ModuleElement& y, const char* op) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) {
        throw ShapeMismatch(std::string(op) + ": module elements have different shapes");
    }
}

void require_functional_dim(const PositiveFunctional& phi, const ModuleElement& x) {
    if (phi.dim() != x.cols()) {
        throw ShapeMismatch("positive functional dimension does not match the algebra");
    }
}

}  // namespace

AlgebraElement inner_product(const ModuleElement& x, const ModuleElement& y) {
    require_same_shape(x, y, "inner_product");
    return adjoint(x) * y;
}

ModuleElement right_action(const ModuleElement& x, const AlgebraElement& a) {
    if (!a.is_square() || a.rows() != x.cols()) {
        throw ShapeMismatch("right_action: algebra element does not act on this module");
    }
    return x * a;
}

AlgebraElement absolute_value(const ModuleElement& x) { return psd_sqrt(inner_product(x, x)); }

double module_norm(const ModuleElement& x) { return std::sqrt(operator_norm(inner_product(x, x))); }

PositiveFunctional::PositiveFunctional(Matrix density, double tol) : density_(std::move(density)) {
    if (!density_.is_square()) throw ShapeMismatch("functional density must be square");
    const PsdCheck check = is_psd(density_, tol);
    if (!check.psd) {
        throw NotPsd("functional density has eigenvalue " + std::to_string(check.margin));
    }
}

Complex PositiveFunctional::operator()(const AlgebraElement& a) const {
    if (a.rows() != dim() || a.cols() != dim()) {
        throw ShapeMismatch("positive functional applied to an element of the wrong size");
    }
    Complex sum = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) {
        for (std::size_t j = 0; j < dim(); ++j) sum += density_(i, j) * a(j, i);
    }
    return sum;
}

SchwarzGap schwarz_basic_margin(const ModuleElement& x, const ModuleElement& y) {
    require_same_shape(x, y, "schwarz_basic_margin");
    const AlgebraElement xx = inner_product(x, x);
    const AlgebraElement yy = inner_product(y, y);
    const AlgebraElement xy = inner_product(x, y);
    const double norm_xx = operator_norm(xx);
    AlgebraElement gap = norm_xx * yy - adjoint(xy) * xy;
    const double margin = loewner_margin(gap);
    return {std::move(gap), {margin, norm_xx * operator_norm(yy)}};
}

Margin schwarz_functional_margin(const PositiveFunctional& phi, const ModuleElement& x,
                                 const ModuleElement& y) {
    require_same_shape(x, y, "schwarz_functional_margin");
    require_functional_dim(phi, x);
    const double phi_xx = phi(inner_product(x, x)).real();
    const double phi_yy = phi(inner_product(y, y)).real();
    const double phi_xy = std::norm(phi(inner_product(x, y)));
    return {phi_xx * phi_yy - phi_xy, std::abs(phi_xx * phi_yy)};
}

Margin schwarz_radius_margin(const PositiveFunctional& phi, const ModuleElement& x,
                             const ModuleElement& y) {
    require_same_shape(x, y, "schwarz_radius_margin");
    require_functional_dim(phi, x);
    const AlgebraElement xy = inner_product(x, y);
    const double phi_xx = phi(inner_product(x, x)).real();
    const double radius = spectral_radius(inner_product(y, y));
    const double rhs = phi(xy * adjoint(xy)).real();
    return {phi_xx * radius - rhs, std::abs(phi_xx * radius)};
}

Margin schwarz_seminorm_margin(const ModuleElement& x, const ModuleElement& y) {
    require_same_shape(x, y, "schwarz_seminorm_margin");
    const double norm_xx = operator_norm(inner_product(x, x));
    const double norm_yy = operator_norm(inner_product(y, y));
    const double norm_xy = operator_norm(inner_product(x, y));
    return {norm_xx * norm_yy - norm_xy * norm_xy, norm_xx * norm_yy};
}

}  // namespace cstar
