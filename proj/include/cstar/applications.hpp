#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cstar/integration.hpp"
#include "cstar/linalg.hpp"
#include "cstar/module.hpp"

namespace cstar {

inline constexpr double kExpNormCap = 50.0;

/// int_0^1 e^{tA} dt = A^{-1}(e^A - I). Throws Singular when sigma_min(A) < 1e-8 ||A||.
AlgebraElement exp_integral_closed_form(const AlgebraElement& a);

/// Bounds for f(t) = e^{tA} on [0, 1] with the bounding pair x = -e^A, x' = 2e^A.
struct ExpAppReport {
    AlgebraElement gram_integral;   // int |e^{tA}|^2 dt
    AlgebraElement mean_abs_sq;     // |int e^{tA} dt|^2
    AlgebraElement closed_form;     // A^{-1}(e^A - I)
    AlgebraElement exp_abs_sq;      // |e^A|^2
    double margin_variance = 0.0;   // (i)   int |e^{tA}|^2 - |int e^{tA}|^2 >= 0
    double margin_bound = 0.0;      // (ii)  9/4 |e^A|^2 - (int |e^{tA}|^2 - |int e^{tA}|^2) >= 0
    double margin_combined = 0.0;   // (iii) 9/4 |e^A|^2 + |A^{-1}(e^A - I)|^2 - int |e^{tA}|^2 >= 0
    double premise_margin = 0.0;    // center defect of the pair (-e^A, 2e^A)
    double quadrature_error = 0.0;  // ||int e^{tA} dt - A^{-1}(e^A - I)||
    double scale = 0.0;             // ||e^A||^2 + ||int |e^{tA}|^2||
};

ExpAppReport exp_bound_check(const AlgebraElement& a, const QuadratureScheme& scheme = {});

/// Closed forms of margins (i)-(iii) for a real scalar a != 0.
struct ScalarExpMargins {
    double variance = 0.0;
    double bound = 0.0;
    double combined = 0.0;
};

ScalarExpMargins scalar_exp_margins(double a);

struct ExpSweepConfig {
    double norm_cap = 2.0;
    int k = 1;
    int samples = 100;
    std::uint64_t seed = 42;
    double tolerance = 1e-10;
};

struct ExpSweepRow {
    std::string descriptor;
    double norm_a = 0.0;
    ExpAppReport report;
};

struct ExpSweepResult {
    std::vector<ExpSweepRow> rows;
    std::vector<std::string> rejected;  // descriptors of non-invertible samples
    int variance_failures = 0;
};

/// Hermitian and general A with ||A|| up to the cap. For k = 1 the Hermitian half is the grid
/// of `samples` evenly spaced reals on [-cap, cap].
ExpSweepResult run_exp_sweep(const ExpSweepConfig& config);

std::string exp_sweep_csv(const ExpSweepResult& result);

}  // namespace cstar
