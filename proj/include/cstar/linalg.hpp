#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace cstar {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Dimensions are always positive.
class Matrix {
public:
    /// Zero matrix of the given shape.
    Matrix(std::size_t rows, std::size_t cols);
    /// Throws ShapeMismatch on a size mismatch and std::invalid_argument on non-finite entries.
    Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static Matrix identity(std::size_t n);
    static Matrix diagonal(std::span<const double> values);
    static Matrix scalar(Complex value);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) noexcept { return entries_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const noexcept {
        return entries_[i * cols_ + j];
    }

    std::span<const Complex> entries() const noexcept { return entries_; }

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(Complex factor) noexcept;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> entries_;
};

Matrix operator+(Matrix lhs, const Matrix& rhs);
Matrix operator-(Matrix lhs, const Matrix& rhs);
Matrix operator-(Matrix m);
Matrix operator*(const Matrix& lhs, const Matrix& rhs);
Matrix operator*(Complex factor, Matrix m);
Matrix operator*(Matrix m, Complex factor);

/// A signed Loewner-type margin: holds when value >= -tol * (1 + scale).
struct Margin {
    double value = 0.0;
    double scale = 0.0;

    bool holds(double tol) const noexcept { return value >= -tol * (1.0 + scale); }
};

/// A nonnegative deviation that is zero in exact arithmetic.
struct Residual {
    double value = 0.0;
    double scale = 0.0;

    bool within(double tol) const noexcept { return value <= tol * (1.0 + scale); }
};

struct HermitianEigenResult {
    std::vector<double> eigenvalues;  // ascending
    Matrix basis;                     // unitary, columns are eigenvectors
};

struct PsdCheck {
    bool psd = false;
    double margin = 0.0;  // minimum eigenvalue
};

inline constexpr double kDefaultHermitianTol = 1e-9;
inline constexpr double kPsdClampBand = 1e-9;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiOffDiagonalTol = 1e-14;

Matrix adjoint(const Matrix& m);
Matrix hermitian_part(const Matrix& m);
Complex trace(const Matrix& m);
double frobenius_norm(const Matrix& m);

/// Cyclic complex Jacobi. Throws NotHermitian or NoConvergence.
HermitianEigenResult hermitian_eigen(const Matrix& h, double tol = kDefaultHermitianTol);

/// Principal square root of a PSD matrix; eigenvalues in [-tol(1+||H||), 0) are clamped to zero.
Matrix psd_sqrt(const Matrix& h, double tol = kPsdClampBand);

/// Largest singular value.
double operator_norm(const Matrix& m);

/// Max modulus over eigenvalues. Hermitian input uses Jacobi, anything else shifted QR.
double spectral_radius(const Matrix& m);

/// Eigenvalues of a general square matrix (unordered).
std::vector<Complex> eigenvalues(const Matrix& m);

/// Scaling and squaring with a degree-13 Taylor polynomial. Accurate for ||M|| <= 50.
Matrix matrix_exp(const Matrix& m);

/// Gauss-Jordan inverse with partial pivoting. Throws Singular on a pivot below 1e-12 ||M||_F.
Matrix inverse(const Matrix& m);

/// Minimum eigenvalue of H against tol; H must be Hermitian within tol.
PsdCheck is_psd(const Matrix& h, double tol = kDefaultHermitianTol);

/// Smallest eigenvalue of the Hermitian part of a square matrix. This is the Loewner margin
/// of `a >= 0` for matrices that are Hermitian up to rounding.
double loewner_margin(const Matrix& a);

}  // namespace cstar
