#pragma once

#include <cstdint>

#include "cstar/integration.hpp"
#include "cstar/linalg.hpp"
#include "cstar/module.hpp"

namespace cstar {

inline constexpr double kIdentityTol = 1e-11;
inline constexpr double kInequalityTol = 1e-9;

/// Bounding elements x (lower) and x' (upper) for a module-valued function.
struct BoundingPair {
    ModuleElement lower;
    ModuleElement upper;

    ModuleElement midpoint() const { return 0.5 * (lower + upper); }
    ModuleElement half_range() const { return 0.5 * (upper - lower); }
};

/// [f, g] = int <f, g> - <int f, int g>
AlgebraElement gruss_functional(const SampledFunction& f, const SampledFunction& g);

/// 1/2 sum_i sum_j w_i w_j <f_i - f_j, g_i - g_j>. Equal to gruss_functional in exact arithmetic.
AlgebraElement korkine(const SampledFunction& f, const SampledFunction& g);

/// || [f - e_a, g - e_b] - [f, g] ||
Residual translation_residual(const SampledFunction& f, const SampledFunction& g,
                              const ModuleElement& a, const ModuleElement& b);

/// Algebra real part (a + a*) / 2.
inline AlgebraElement real_part(const AlgebraElement& a) { return hermitian_part(a); }

struct CenterDefect {
    AlgebraElement defect;       // 1/4 |x' - x|^2 - int |f - (x' + x)/2|^2
    AlgebraElement real_form;    // int Re<x' - f, f - x>
    AlgebraElement spread;       // int |f - (x' + x)/2|^2
    Residual identity;           // ||defect - real_form||
    Margin premise;              // smaller minimum eigenvalue of defect and real_form
};

CenterDefect center_defect(const SampledFunction& f, const BoundingPair& pair);

struct InequalityReport {
    double L0 = 0.0;  // ||[f, g]||
    double L1 = 0.0;  // ||[f, f]||^{1/2} ||[g, g]||^{1/2}
    double L2 = 0.0;  // ||1/4|x'-x|^2 - int Re<x'-f, f-x>||^{1/2} times the same for g
    double L3 = 0.0;  // 1/4 ||x' - x|| ||y' - y||
    double slack01 = 0.0;
    double slack12 = 0.0;
    double slack23 = 0.0;
    double premise_margin_f = 0.0;
    double premise_margin_g = 0.0;
    double premise_scale_f = 0.0;
    double premise_scale_g = 0.0;
    double identity_residual_f = 0.0;
    double identity_residual_g = 0.0;
    double identity_scale_f = 0.0;
    double identity_scale_g = 0.0;
    double tolerance_inequality = kInequalityTol;
    double tolerance_identity = kIdentityTol;
    bool premise_holds = false;
    bool chain_holds = false;
    bool identities_hold = false;
    bool pass = false;
};

InequalityReport inequality_chain(const SampledFunction& f, const SampledFunction& g,
                                  const BoundingPair& pf, const BoundingPair& pg,
                                  double tol = kInequalityTol, double tol_identity = kIdentityTol);

struct GrussInstance {
    SampledFunction f;
    SampledFunction g;
    BoundingPair pf;
    BoundingPair pg;
};

InequalityReport evaluate(const GrussInstance& instance, double tol = kInequalityTol,
                          double tol_identity = kIdentityTol);

/// The scalar step function -1 on [0, 1/2], +1 on [1/2, 1] as a two-node measure with weights
/// (left_weight, 1 - left_weight), f = g, x = y = -1, x' = y' = 1.
GrussInstance step_instance(double left_weight = 0.5);

struct SharpnessResult {
    GrussInstance instance;
    InequalityReport report;
};

/// Equal-weight step instance; every chain value equals 1.
SharpnessResult sharpness_witness();

/// f(t_i) = (x + x')/2 + lambda_i (x' - x)/2 with lambda_i uniform on [-1, 1].
SampledFunction admissible_random_function(const BoundingPair& pair, MeasurePtr measure,
                                           std::uint64_t seed);

struct LandauResult {
    double d_fg = 0.0;
    double d_ff = 0.0;
    double d_gg = 0.0;
    double slack = 0.0;  // sqrt(d_ff d_gg) - |d_fg|
};

/// Scalar real f, g only; throws NotScalar otherwise.
LandauResult landau_discrepancy(const SampledFunction& f, const SampledFunction& g);

struct AlgebraGrussResult {
    double lhs = 0.0;          // ||int f g - int f int g||
    double rhs = 0.0;          // ||[f*, f*]||^{1/2} ||[g, g]||^{1/2}
    double rhs_literal = 0.0;  // ||[f, f]||^{1/2} ||[g, g]||^{1/2}; not a valid bound in general
    double slack = 0.0;        // rhs - lhs
    double scale = 0.0;
};

/// The algebra viewed as a module over itself (n = k).
AlgebraGrussResult algebra_gruss_check(const SampledFunction& f, const SampledFunction& g);

}  // namespace cstar
