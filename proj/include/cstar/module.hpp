#pragma once

#include "cstar/linalg.hpp"

namespace cstar {

// The C*-algebra is k x k complex matrices; the Hilbert module is n x k complex matrices
// with <x, y> = x* y and right action x . a = x a.
using AlgebraElement = Matrix;
using ModuleElement = Matrix;

AlgebraElement inner_product(const ModuleElement& x, const ModuleElement& y);
ModuleElement right_action(const ModuleElement& x, const AlgebraElement& a);

/// |x| = <x, x>^{1/2}.
AlgebraElement absolute_value(const ModuleElement& x);

/// ||x|| = ||<x, x>||^{1/2}, the largest singular value of x.
double module_norm(const ModuleElement& x);

/// phi(a) = trace(density * a) for a PSD density.
class PositiveFunctional {
public:
    /// Throws NotPsd if the density is not PSD within tol.
    explicit PositiveFunctional(Matrix density, double tol = kDefaultHermitianTol);

    Complex operator()(const AlgebraElement& a) const;
    const Matrix& density() const noexcept { return density_; }
    std::size_t dim() const noexcept { return density_.rows(); }

private:
    Matrix density_;
};

struct SchwarzGap {
    AlgebraElement gap;  // ||<x,x>|| <y,y> - <y,x><x,y>
    Margin margin;       // minimum eigenvalue of gap
};

SchwarzGap schwarz_basic_margin(const ModuleElement& x, const ModuleElement& y);

/// phi<x,x> phi<y,y> - |phi<x,y>|^2
Margin schwarz_functional_margin(const PositiveFunctional& phi, const ModuleElement& x,
                                 const ModuleElement& y);

/// phi<x,x> r(<y,y>) - phi(<x,y><y,x>)
Margin schwarz_radius_margin(const PositiveFunctional& phi, const ModuleElement& x,
                             const ModuleElement& y);

/// ||<x,x>|| ||<y,y>|| - ||<x,y>||^2, using the operator norm as the C*-seminorm.
Margin schwarz_seminorm_margin(const ModuleElement& x, const ModuleElement& y);

}  // namespace cstar
