#include "cstar/gruss.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "cstar/error.hpp"
#include "cstar/random.hpp"

namespace cstar {

namespace {

double frobenius_l2(const SampledFunction& f) {
    double sum = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double norm = frobenius_norm(f[i]);
        sum += f.weight(i) * norm * norm;
    }
    return std::sqrt(sum);
}

SampledFunction translate(const SampledFunction& f, const ModuleElement& a) {
    return f.map([&](const Matrix& v) { return v - a; });
}

bool slack_holds(double slack, double lhs, double rhs, double tol) {
    return slack >= -tol * (1.0 + std::max(lhs, rhs));
}

void require_scalar_real(const SampledFunction& f) {
    if (f.rows() != 1 || f.cols() != 1) throw NotScalar("landau_discrepancy needs scalar samples");
    for (const Matrix& v : f.values()) {
        if (v(0, 0).imag() != 0.0) throw NotScalar("landau_discrepancy needs real samples");
    }
}

}  // namespace

AlgebraElement gruss_functional(const SampledFunction& f, const SampledFunction& g) {
    require_compatible(f, g);
    AlgebraElement mean_product(f.cols(), f.cols());
    for (std::size_t i = 0; i < f.size(); ++i) mean_product += f.weight(i) * inner_product(f[i], g[i]);
    return mean_product - inner_product(bochner_integral(f), bochner_integral(g));
}

AlgebraElement korkine(const SampledFunction& f, const SampledFunction& g) {
    require_compatible(f, g);
    AlgebraElement sum(f.cols(), f.cols());
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = 0; j < f.size(); ++j) {
            if (i == j) continue;
            sum += (f.weight(i) * f.weight(j)) * inner_product(f[i] - f[j], g[i] - g[j]);
        }
    }
    return 0.5 * sum;
}

Residual translation_residual(const SampledFunction& f, const SampledFunction& g,
                              const ModuleElement& a, const ModuleElement& b) {
    require_compatible(f, g);
    if (a.rows() != f.rows() || a.cols() != f.cols() || b.rows() != g.rows() ||
        b.cols() != g.cols()) {
        throw ShapeMismatch("translation_residual: translations do not match the module");
    }
    const AlgebraElement shifted = gruss_functional(translate(f, a), translate(g, b));
    const AlgebraElement plain = gruss_functional(f, g);
    const double scale = (frobenius_l2(f) + frobenius_norm(a)) * (frobenius_l2(g) + frobenius_norm(b));
    return {operator_norm(shifted - plain), scale};
}

CenterDefect center_defect(const SampledFunction& f, const BoundingPair& pair) {
    const ModuleElement& x = pair.lower;
    const ModuleElement& x_prime = pair.upper;
    if (x.rows() != f.rows() || x.cols() != f.cols() || x_prime.rows() != f.rows() ||
        x_prime.cols() != f.cols()) {
        throw ShapeMismatch("center_defect: bounding pair does not match the module");
    }
    const ModuleElement mid = pair.midpoint();
    const ModuleElement range = x_prime - x;
    const AlgebraElement quarter_range = 0.25 * inner_product(range, range);

    AlgebraElement spread(f.cols(), f.cols());
    AlgebraElement real_form(f.cols(), f.cols());
    double identity_scale = frobenius_norm(quarter_range);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const ModuleElement centered = f[i] - mid;
        spread += f.weight(i) * inner_product(centered, centered);
        const ModuleElement above = x_prime - f[i];
        const ModuleElement below = f[i] - x;
        real_form += f.weight(i) * real_part(inner_product(above, below));
        identity_scale += f.weight(i) * frobenius_norm(above) * frobenius_norm(below);
    }
    AlgebraElement defect = quarter_range - spread;
    const double identity = operator_norm(defect - real_form);
    const double margin = std::min(loewner_margin(defect), loewner_margin(real_form));
    const double premise_scale = operator_norm(quarter_range) + operator_norm(spread);
    return {std::move(defect), std::move(real_form), std::move(spread),
            {identity, identity_scale}, {margin, premise_scale}};
}

InequalityReport inequality_chain(const SampledFunction& f, const SampledFunction& g,
                                  const BoundingPair& pf, const BoundingPair& pg, double tol,
                                  double tol_identity) {
    require_compatible(f, g);
    InequalityReport r;
    r.tolerance_inequality = tol;
    r.tolerance_identity = tol_identity;

    const CenterDefect df = center_defect(f, pf);
    const CenterDefect dg = center_defect(g, pg);
    r.premise_margin_f = df.premise.value;
    r.premise_margin_g = dg.premise.value;
    r.premise_scale_f = df.premise.scale;
    r.premise_scale_g = dg.premise.scale;
    r.identity_residual_f = df.identity.value;
    r.identity_residual_g = dg.identity.value;
    r.identity_scale_f = df.identity.scale;
    r.identity_scale_g = dg.identity.scale;

    r.L0 = operator_norm(gruss_functional(f, g));
    r.L1 = std::sqrt(operator_norm(gruss_functional(f, f))) *
           std::sqrt(operator_norm(gruss_functional(g, g)));

    const ModuleElement range_f = pf.upper - pf.lower;
    const ModuleElement range_g = pg.upper - pg.lower;
    const AlgebraElement middle_f = 0.25 * inner_product(range_f, range_f) - df.real_form;
    const AlgebraElement middle_g = 0.25 * inner_product(range_g, range_g) - dg.real_form;
    r.L2 = std::sqrt(operator_norm(middle_f)) * std::sqrt(operator_norm(middle_g));
    r.L3 = 0.25 * module_norm(range_f) * module_norm(range_g);

    r.slack01 = r.L1 - r.L0;
    r.slack12 = r.L2 - r.L1;
    r.slack23 = r.L3 - r.L2;

    r.premise_holds = df.premise.holds(tol) && dg.premise.holds(tol);
    r.chain_holds = slack_holds(r.slack01, r.L0, r.L1, tol) && slack_holds(r.slack12, r.L1, r.L2, tol) &&
                    slack_holds(r.slack23, r.L2, r.L3, tol);
    r.identities_hold = df.identity.within(tol_identity) && dg.identity.within(tol_identity);
    r.pass = r.premise_holds && r.chain_holds;
    return r;
}

InequalityReport evaluate(const GrussInstance& instance, double tol, double tol_identity) {
    return inequality_chain(instance.f, instance.g, instance.pf, instance.pg, tol, tol_identity);
}

GrussInstance step_instance(double left_weight) {
    MeasurePtr measure = make_measure({0.25, 0.75}, {left_weight, 1.0 - left_weight});
    SampledFunction f(measure, {Matrix::scalar(-1.0), Matrix::scalar(1.0)});
    BoundingPair pair{Matrix::scalar(-1.0), Matrix::scalar(1.0)};
    return {f, f, pair, pair};
}

SharpnessResult sharpness_witness() {
    GrussInstance instance = step_instance(0.5);
    InequalityReport report = evaluate(instance);
    return {std::move(instance), report};
}

SampledFunction admissible_random_function(const BoundingPair& pair, MeasurePtr measure,
                                           std::uint64_t seed) {
    Rng rng(seed);
    const ModuleElement mid = pair.midpoint();
    const ModuleElement half = pair.half_range();
    std::vector<ModuleElement> values;
    values.reserve(measure->size());
    for (std::size_t i = 0; i < measure->size(); ++i) {
        values.push_back(mid + rng.uniform(-1.0, 1.0) * half);
    }
    return {std::move(measure), std::move(values)};
}

LandauResult landau_discrepancy(const SampledFunction& f, const SampledFunction& g) {
    require_compatible(f, g);
    require_scalar_real(f);
    require_scalar_real(g);
    double mean_f = 0.0;
    double mean_g = 0.0;
    double mean_fg = 0.0;
    double mean_ff = 0.0;
    double mean_gg = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double w = f.weight(i);
        const double a = f[i](0, 0).real();
        const double b = g[i](0, 0).real();
        mean_f += w * a;
        mean_g += w * b;
        mean_fg += w * a * b;
        mean_ff += w * a * a;
        mean_gg += w * b * b;
    }
    LandauResult r;
    r.d_fg = mean_fg - mean_f * mean_g;
    r.d_ff = mean_ff - mean_f * mean_f;
    r.d_gg = mean_gg - mean_g * mean_g;
    r.slack = std::sqrt(std::abs(r.d_ff * r.d_gg)) - std::abs(r.d_fg);
    return r;
}

AlgebraGrussResult algebra_gruss_check(const SampledFunction& f, const SampledFunction& g) {
    require_compatible(f, g);
    if (f.rows() != f.cols()) throw ShapeMismatch("algebra_gruss_check needs square values");
    const Matrix mean_f = bochner_integral(f);
    const Matrix mean_g = bochner_integral(g);
    Matrix mean_product(f.rows(), f.cols());
    for (std::size_t i = 0; i < f.size(); ++i) mean_product += f.weight(i) * (f[i] * g[i]);

    const SampledFunction f_star = f.map([](const Matrix& v) { return adjoint(v); });
    const double norm_gg = operator_norm(gruss_functional(g, g));

    AlgebraGrussResult r;
    r.lhs = operator_norm(mean_product - mean_f * mean_g);
    r.rhs = std::sqrt(operator_norm(gruss_functional(f_star, f_star))) * std::sqrt(norm_gg);
    r.rhs_literal = std::sqrt(operator_norm(gruss_functional(f, f))) * std::sqrt(norm_gg);
    r.slack = r.rhs - r.lhs;
    r.scale = frobenius_l2(f) * frobenius_l2(g);
    return r;
}

}  // namespace cstar
