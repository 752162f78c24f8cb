#pragma once

// Test-only oracles and generators. Nothing here calls into the eigensolver, so checks built
// on these stay independent of the code under test.

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "cstar/linalg.hpp"
#include "cstar/random.hpp"

namespace cstar::testing {

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

/// Largest singular value by power iteration on M* M.
inline double power_iteration_norm(const Matrix& m, int iterations = 5000) {
    const Matrix gram = adjoint(m) * m;
    const std::size_t n = gram.rows();
    std::vector<Complex> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Complex(1.0 + 0.1 * i, 0.3 * i);
    double lambda = 0.0;
    for (int it = 0; it < iterations; ++it) {
        std::vector<Complex> w(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) w[i] += gram(i, j) * v[j];
        }
        double norm = 0.0;
        for (const Complex& z : w) norm += std::norm(z);
        norm = std::sqrt(norm);
        if (norm == 0.0) return 0.0;
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
        lambda = norm;
    }
    return std::sqrt(lambda);
}

/// Truncated Taylor series with many terms, no scaling; valid for small norms.
inline Matrix taylor_exp(const Matrix& m, int terms = 60) {
    Matrix result = Matrix::identity(m.rows());
    Matrix term = Matrix::identity(m.rows());
    for (int j = 1; j < terms; ++j) {
        term = (1.0 / j) * (term * m);
        result += term;
    }
    return result;
}

inline double scalar(const Matrix& m) { return m(0, 0).real(); }

}  // namespace cstar::testing
