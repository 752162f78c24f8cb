#include "cstar/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "cstar/error.hpp"

namespace cstar {

namespace {

void require_positive(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) {
        throw ShapeMismatch("matrix dimensions must be positive");
    }
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeMismatch(std::string(op) + ": " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
    }
}

void require_square(const Matrix& m, const char* op) {
    if (!m.is_square()) {
        throw ShapeMismatch(std::string(op) + " requires a square matrix");
    }
}

double off_diagonal_norm(const Matrix& h) {
    double sum = 0.0;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        for (std::size_t j = 0; j < h.cols(); ++j) {
            if (i != j) sum += std::norm(h(i, j));
        }
    }
    return std::sqrt(sum);
}

// Rotation U on the (p, q) plane, stored as its 2x2 block.
struct PlaneRotation {
    Complex pp, pq, qp, qq;
};

// H <- U* H U restricted to rows/cols p and q; V <- V U.
void apply_rotation(Matrix& h, Matrix& v, std::size_t p, std::size_t q, const PlaneRotation& u) {
    const std::size_t n = h.rows();
    for (std::size_t k = 0; k < n; ++k) {
        const Complex hkp = h(k, p);
        const Complex hkq = h(k, q);
        h(k, p) = hkp * u.pp + hkq * u.qp;
        h(k, q) = hkp * u.pq + hkq * u.qq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex hpk = h(p, k);
        const Complex hqk = h(q, k);
        h(p, k) = std::conj(u.pp) * hpk + std::conj(u.qp) * hqk;
        h(q, k) = std::conj(u.pq) * hpk + std::conj(u.qq) * hqk;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = vkp * u.pp + vkq * u.qp;
        v(k, q) = vkp * u.pq + vkq * u.qq;
    }
    h(p, q) = 0.0;
    h(q, p) = 0.0;
    h(p, p) = h(p, p).real();
    h(q, q) = h(q, q).real();
}

// The phase diag(1, e^{-i phi}) makes the (p, q) entry real, then a real Jacobi rotation
// annihilates it.
PlaneRotation jacobi_rotation(const Matrix& h, std::size_t p, std::size_t q) {
    const Complex apq = h(p, q);
    const double magnitude = std::abs(apq);
    const Complex phase = apq / magnitude;
    const double theta = (h(q, q).real() - h(p, p).real()) / (2.0 * magnitude);
    double t = 0.0;
    if (std::abs(theta) > 1e150) {
        t = 0.5 / theta;
    } else {
        t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    }
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const Complex conj_phase = std::conj(phase);
    return {c, s, -s * conj_phase, c * conj_phase};
}

// Householder reduction to upper Hessenberg form, in place.
void reduce_to_hessenberg(Matrix& h) {
    const std::size_t n = h.rows();
    if (n < 3) return;
    std::vector<Complex> v(n);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double column_norm = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) column_norm += std::norm(h(i, k));
        column_norm = std::sqrt(column_norm);
        if (column_norm == 0.0) continue;
        const Complex x0 = h(k + 1, k);
        const Complex phase = std::abs(x0) == 0.0 ? Complex(1.0) : x0 / std::abs(x0);
        const Complex alpha = -phase * column_norm;
        std::fill(v.begin(), v.end(), Complex(0.0));
        for (std::size_t i = k + 1; i < n; ++i) v[i] = h(i, k);
        v[k + 1] -= alpha;
        double vnorm = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) vnorm += std::norm(v[i]);
        vnorm = std::sqrt(vnorm);
        if (vnorm == 0.0) continue;
        for (std::size_t i = k + 1; i < n; ++i) v[i] /= vnorm;
        // H <- (I - 2 v v*) H
        for (std::size_t j = 0; j < n; ++j) {
            Complex dot = 0.0;
            for (std::size_t i = k + 1; i < n; ++i) dot += std::conj(v[i]) * h(i, j);
            for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= 2.0 * v[i] * dot;
        }
        // H <- H (I - 2 v v*)
        for (std::size_t i = 0; i < n; ++i) {
            Complex dot = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) dot += h(i, j) * v[j];
            for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= 2.0 * dot * std::conj(v[j]);
        }
        for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
    }
}

struct Givens {
    double c;
    Complex s;
};

// G = [[c, s], [-conj(s), c]] with G [a; b] = [r; 0].
Givens make_givens(Complex a, Complex b) {
    const double abs_b = std::abs(b);
    if (abs_b == 0.0) return {1.0, 0.0};
    const double abs_a = std::abs(a);
    if (abs_a == 0.0) return {0.0, std::conj(b) / abs_b};
    const double r = std::hypot(abs_a, abs_b);
    return {abs_a / r, (a / abs_a) * std::conj(b) / r};
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    require_positive(rows, cols);
    entries_.assign(rows * cols, Complex(0.0));
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    require_positive(rows, cols);
    if (entries_.size() != rows * cols) {
        throw ShapeMismatch("matrix entry count " + std::to_string(entries_.size()) +
                            " does not match " + std::to_string(rows) + "x" + std::to_string(cols));
    }
    for (const Complex& z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw std::invalid_argument("matrix entries must be finite");
        }
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(std::span<const double> values) {
    Matrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

Matrix Matrix::scalar(Complex value) { return Matrix(1, 1, {value}); }

Matrix& Matrix::operator+=(const Matrix& other) {
    require_same_shape(*this, other, "operator+");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    require_same_shape(*this, other, "operator-");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
    return *this;
}

Matrix& Matrix::operator*=(Complex factor) noexcept {
    for (Complex& z : entries_) z *= factor;
    return *this;
}

Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
Matrix operator-(Matrix m) { return m *= -1.0; }
Matrix operator*(Complex factor, Matrix m) { return m *= factor; }
Matrix operator*(Matrix m, Complex factor) { return m *= factor; }

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols() != rhs.rows()) {
        throw ShapeMismatch("matrix product: " + std::to_string(lhs.rows()) + "x" +
                            std::to_string(lhs.cols()) + " * " + std::to_string(rhs.rows()) + "x" +
                            std::to_string(rhs.cols()));
    }
    Matrix out(lhs.rows(), rhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i) {
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            const Complex a = lhs(i, k);
            for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
        }
    }
    return out;
}

Matrix adjoint(const Matrix& m) {
    Matrix out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = std::conj(m(i, j));
    }
    return out;
}

Matrix hermitian_part(const Matrix& m) {
    require_square(m, "hermitian_part");
    Matrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    }
    return out;
}

Complex trace(const Matrix& m) {
    require_square(m, "trace");
    Complex sum = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) sum += m(i, i);
    return sum;
}

double frobenius_norm(const Matrix& m) {
    double sum = 0.0;
    for (const Complex& z : m.entries()) sum += std::norm(z);
    return std::sqrt(sum);
}

HermitianEigenResult hermitian_eigen(const Matrix& h, double tol) {
    require_square(h, "hermitian_eigen");
    const double scale = frobenius_norm(h);
    const double asymmetry = frobenius_norm(h - adjoint(h));
    if (asymmetry > tol * (1.0 + scale)) {
        throw NotHermitian("hermitian_eigen: ||H - H*|| = " + std::to_string(asymmetry));
    }

    const std::size_t n = h.rows();
    Matrix a = hermitian_part(h);
    Matrix v = Matrix::identity(n);
    const double threshold = kJacobiOffDiagonalTol * scale;

    bool converged = false;
    for (int sweep = 0; sweep <= kJacobiMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= threshold) {
            converged = true;
            break;
        }
        if (sweep == kJacobiMaxSweeps) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) == 0.0) continue;
                apply_rotation(a, v, p, q, jacobi_rotation(a, p, q));
            }
        }
    }
    if (!converged) {
        throw NoConvergence("hermitian_eigen: no convergence after " +
                            std::to_string(kJacobiMaxSweeps) + " sweeps");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() < a(j, j).real();
    });

    HermitianEigenResult result{std::vector<double>(n), Matrix(n, n)};
    for (std::size_t c = 0; c < n; ++c) {
        result.eigenvalues[c] = a(order[c], order[c]).real();
        for (std::size_t r = 0; r < n; ++r) result.basis(r, c) = v(r, order[c]);
    }
    return result;
}

Matrix psd_sqrt(const Matrix& h, double tol) {
    const HermitianEigenResult eig = hermitian_eigen(h);
    const double norm = std::max(std::abs(eig.eigenvalues.front()), std::abs(eig.eigenvalues.back()));
    const double floor = -tol * (1.0 + norm);
    const std::size_t n = h.rows();
    std::vector<double> roots(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double lambda = eig.eigenvalues[i];
        if (lambda < floor) {
            throw NotPsd("psd_sqrt: eigenvalue " + std::to_string(lambda) + " below band");
        }
        roots[i] = lambda > 0.0 ? std::sqrt(lambda) : 0.0;
    }
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Complex sum = 0.0;
            for (std::size_t c = 0; c < n; ++c) {
                sum += eig.basis(i, c) * roots[c] * std::conj(eig.basis(j, c));
            }
            out(i, j) = sum;
        }
    }
    return hermitian_part(out);
}

double operator_norm(const Matrix& m) {
    // Use the smaller Gram matrix.
    const Matrix gram = m.rows() < m.cols() ? m * adjoint(m) : adjoint(m) * m;
    const double largest = hermitian_eigen(gram).eigenvalues.back();
    return std::sqrt(std::max(largest, 0.0));
}

std::vector<Complex> eigenvalues(const Matrix& m) {
    require_square(m, "eigenvalues");
    const std::size_t n = m.rows();
    Matrix h = m;
    reduce_to_hessenberg(h);

    std::vector<Complex> result(n);
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const int max_iterations = 100 * static_cast<int>(n);
    int iterations = 0;
    int since_deflation = 0;
    std::vector<Givens> rotations(n);

    std::size_t hi = n - 1;
    while (hi > 0) {
        std::size_t lo = hi;
        while (lo > 0) {
            const double local = std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo));
            if (std::abs(h(lo, lo - 1)) <= eps * local) {
                h(lo, lo - 1) = 0.0;
                break;
            }
            --lo;
        }
        if (lo == hi) {
            result[hi] = h(hi, hi);
            --hi;
            since_deflation = 0;
            continue;
        }
        if (++iterations > max_iterations) {
            throw NoConvergence("eigenvalues: shifted QR did not converge");
        }

        // Wilkinson shift from the trailing 2x2 block, with an occasional exceptional shift.
        const Complex a = h(hi - 1, hi - 1);
        const Complex b = h(hi - 1, hi);
        const Complex c = h(hi, hi - 1);
        const Complex d = h(hi, hi);
        const Complex half_trace = 0.5 * (a + d);
        const Complex disc = std::sqrt(0.25 * (a - d) * (a - d) + b * c);
        const Complex mu1 = half_trace + disc;
        const Complex mu2 = half_trace - disc;
        Complex shift = std::abs(mu1 - d) < std::abs(mu2 - d) ? mu1 : mu2;
        if (++since_deflation % 11 == 0) {
            shift = d + std::abs(h(hi, hi - 1)) * Complex(0.75, 0.5);
        }

        for (std::size_t j = lo; j <= hi; ++j) h(j, j) -= shift;
        for (std::size_t j = lo; j < hi; ++j) {
            const Givens g = make_givens(h(j, j), h(j + 1, j));
            rotations[j] = g;
            for (std::size_t col = lo; col <= hi; ++col) {
                const Complex top = h(j, col);
                const Complex bottom = h(j + 1, col);
                h(j, col) = g.c * top + g.s * bottom;
                h(j + 1, col) = -std::conj(g.s) * top + g.c * bottom;
            }
        }
        for (std::size_t j = lo; j < hi; ++j) {
            const Givens& g = rotations[j];
            for (std::size_t row = lo; row <= hi; ++row) {
                const Complex left = h(row, j);
                const Complex right = h(row, j + 1);
                h(row, j) = g.c * left + std::conj(g.s) * right;
                h(row, j + 1) = -g.s * left + g.c * right;
            }
        }
        for (std::size_t j = lo; j <= hi; ++j) h(j, j) += shift;
    }
    result[0] = h(0, 0);
    return result;
}

double spectral_radius(const Matrix& m) {
    require_square(m, "spectral_radius");
    const double scale = frobenius_norm(m);
    if (frobenius_norm(m - adjoint(m)) <= 1e-14 * (1.0 + scale)) {
        const HermitianEigenResult eig = hermitian_eigen(m);
        return std::max(std::abs(eig.eigenvalues.front()), std::abs(eig.eigenvalues.back()));
    }
    double radius = 0.0;
    for (const Complex& lambda : eigenvalues(m)) radius = std::max(radius, std::abs(lambda));
    return radius;
}

Matrix matrix_exp(const Matrix& m) {
    require_square(m, "matrix_exp");
    const std::size_t n = m.rows();
    const double norm = frobenius_norm(m);
    int squarings = 0;
    if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    const Matrix scaled = std::ldexp(1.0, -squarings) * m;

    // Horner evaluation of sum_{j<=13} X^j / j!.
    constexpr int degree = 13;
    Matrix result = Matrix::identity(n);
    for (int j = degree; j >= 1; --j) {
        result = Matrix::identity(n) + (1.0 / j) * (scaled * result);
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

Matrix inverse(const Matrix& m) {
    require_square(m, "inverse");
    const std::size_t n = m.rows();
    const double threshold = 1e-12 * frobenius_norm(m);
    Matrix lu = m;
    Matrix inv = Matrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(lu(i, k)) > std::abs(lu(pivot, k))) pivot = i;
        }
        if (std::abs(lu(pivot, k)) <= threshold || std::abs(lu(pivot, k)) == 0.0) {
            throw Singular("inverse: pivot " + std::to_string(std::abs(lu(pivot, k))) +
                           " below threshold");
        }
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(lu(k, j), lu(pivot, j));
                std::swap(inv(k, j), inv(pivot, j));
            }
        }
        const Complex diag = lu(k, k);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const Complex factor = lu(i, k) / diag;
            if (factor == Complex(0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                lu(i, j) -= factor * lu(k, j);
                inv(i, j) -= factor * inv(k, j);
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Complex diag = lu(i, i);
        for (std::size_t j = 0; j < n; ++j) inv(i, j) /= diag;
    }
    return inv;
}

PsdCheck is_psd(const Matrix& h, double tol) {
    const HermitianEigenResult eig = hermitian_eigen(h, tol);
    const double margin = eig.eigenvalues.front();
    const double norm = std::max(std::abs(margin), std::abs(eig.eigenvalues.back()));
    return {margin >= -tol * (1.0 + norm), margin};
}

double loewner_margin(const Matrix& a) {
    return hermitian_eigen(hermitian_part(a)).eigenvalues.front();
}

}  // namespace cstar
