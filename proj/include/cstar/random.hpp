#pragma once

#include <cstdint>
#include <random>

#include "cstar/integration.hpp"
#include "cstar/linalg.hpp"

namespace cstar {

/// splitmix64 finalizer; derives independent per-instance seeds.
std::uint64_t mix_seed(std::uint64_t campaign_seed, std::uint64_t index) noexcept;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi);
    int uniform_int(int lo, int hi);  // inclusive
    double normal();
    /// Standard complex Gaussian: (N(0,1) + i N(0,1)) / sqrt(2).
    Complex complex_normal();

private:
    std::mt19937_64 engine_;
};

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols);
Matrix random_hermitian(Rng& rng, std::size_t n);
/// B* B for a random square B.
Matrix random_psd(Rng& rng, std::size_t n);
/// Sorted uniform nodes in [0, 1] with normalized random positive weights.
MeasurePtr random_measure(Rng& rng, std::size_t nodes);

}  // namespace cstar
