#include "cstar/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace cstar {

std::uint64_t mix_seed(std::uint64_t campaign_seed, std::uint64_t index) noexcept {
    std::uint64_t z = campaign_seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Rng::uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

int Rng::uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

double Rng::normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

Complex Rng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return Complex(re, im) * std::sqrt(0.5);
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.complex_normal();
    }
    return m;
}

Matrix random_hermitian(Rng& rng, std::size_t n) { return hermitian_part(random_matrix(rng, n, n)); }

Matrix random_psd(Rng& rng, std::size_t n) {
    const Matrix b = random_matrix(rng, n, n);
    return adjoint(b) * b;
}

MeasurePtr random_measure(Rng& rng, std::size_t nodes) {
    std::vector<double> t(nodes);
    std::vector<double> w(nodes);
    for (double& x : t) x = rng.uniform(0.0, 1.0);
    std::sort(t.begin(), t.end());
    for (double& x : w) x = rng.uniform(0.05, 1.0);
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    for (double& x : w) x /= total;
    return make_measure(std::move(t), std::move(w));
}

}  // namespace cstar
