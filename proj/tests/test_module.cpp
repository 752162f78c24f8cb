#include <doctest.h>

#include <cmath>

#include "cstar/error.hpp"
#include "cstar/module.hpp"
#include "cstar/random.hpp"
#include "support.hpp"

using namespace cstar;

namespace {

struct Dims {
    std::size_t n;
    std::size_t k;
};

Dims random_dims(Rng& rng) {
    return {static_cast<std::size_t>(rng.uniform_int(1, 4)), static_cast<std::size_t>(rng.uniform_int(1, 4))};
}

}  // namespace

TEST_CASE("inner_product examples") {
    CHECK(inner_product(Matrix::identity(3), Matrix::identity(3)) == Matrix::identity(3));
    const Matrix e1(2, 1, {1.0, 0.0});
    const Matrix e2(2, 1, {0.0, 1.0});
    CHECK(inner_product(e1, e2) == Matrix(1, 1));
    CHECK_THROWS_AS(inner_product(Matrix(2, 2), Matrix(3, 2)), ShapeMismatch);
}

TEST_CASE("module axioms on random triples") {
    Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const auto [n, k] = random_dims(rng);
        const Matrix x = random_matrix(rng, n, k);
        const Matrix y = random_matrix(rng, n, k);
        const Matrix z = random_matrix(rng, n, k);
        const Matrix a = random_matrix(rng, k, k);

        // (i) additivity, (ii) right linearity, (iii) symmetry. Rounding differs between the two
        // sides only through reassociation of sums, so compare at machine precision.
        const double scale = frobenius_norm(x) * (frobenius_norm(y) + frobenius_norm(z));
        CHECK(frobenius_norm(inner_product(x, y + z) - (inner_product(x, y) + inner_product(x, z))) <=
              1e-14 * (1.0 + scale));
        CHECK(frobenius_norm(inner_product(x, right_action(y, a)) - inner_product(x, y) * a) <=
              1e-13 * (1.0 + frobenius_norm(x) * frobenius_norm(y) * frobenius_norm(a)));
        CHECK(adjoint(inner_product(x, y)) == inner_product(y, x));
        // (iv) positivity.
        CHECK(is_psd(inner_product(x, x)).psd);
    }
}

TEST_CASE("nondegeneracy") {
    Rng rng(12);
    CHECK(frobenius_norm(inner_product(Matrix(3, 2), Matrix(3, 2))) == 0.0);
    for (int trial = 0; trial < 50; ++trial) {
        const auto [n, k] = random_dims(rng);
        const Matrix x = random_matrix(rng, n, k);
        CHECK(frobenius_norm(inner_product(x, x)) > 0.0);
    }
}

TEST_CASE("right_action") {
    Rng rng(13);
    const Matrix x = random_matrix(rng, 3, 2);
    CHECK(right_action(x, Matrix::identity(2)) == x);
    CHECK(right_action(x, Matrix(2, 2)) == Matrix(3, 2));
    CHECK_THROWS_AS(right_action(x, Matrix::identity(3)), ShapeMismatch);
    for (int trial = 0; trial < 100; ++trial) {
        const auto [n, k] = random_dims(rng);
        const Matrix y = random_matrix(rng, n, k);
        const Matrix a = random_matrix(rng, k, k);
        const Matrix b = random_matrix(rng, k, k);
        const Matrix lhs = right_action(right_action(y, a), b);
        const Matrix rhs = right_action(y, a * b);
        CHECK(cstar::testing::max_abs_diff(lhs, rhs) <=
              1e-13 * (1.0 + frobenius_norm(y) * frobenius_norm(a) * frobenius_norm(b)));
    }
}

TEST_CASE("absolute_value and module_norm") {
    CHECK(frobenius_norm(absolute_value(Matrix(2, 2))) == 0.0);
    const Matrix v(2, 1, {3.0, 4.0});
    CHECK(cstar::testing::scalar(absolute_value(v)) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(module_norm(Matrix(2, 2)) == 0.0);
    CHECK(module_norm(Matrix::scalar(Complex(3.0, -4.0))) == doctest::Approx(5.0).epsilon(1e-15));

    Rng rng(14);
    for (int trial = 0; trial < 200; ++trial) {
        const auto [n, k] = random_dims(rng);
        const Matrix x = random_matrix(rng, n, k);
        const Matrix y = random_matrix(rng, n, k);
        const Matrix abs_x = absolute_value(x);
        const Matrix xx = inner_product(x, x);
        CHECK(operator_norm(abs_x * abs_x - xx) <= 1e-10 * (1.0 + operator_norm(xx)));
        const double norm = module_norm(x);
        CHECK(std::abs(norm * norm - operator_norm(xx)) <= 1e-12 * (1.0 + norm * norm));
        CHECK(std::abs(norm - operator_norm(x)) <= 1e-12 * (1.0 + norm));
        // Triangle inequality for the module seminorm.
        CHECK(module_norm(x) + module_norm(y) - module_norm(x + y) >= -1e-12);
    }
}

TEST_CASE("positive functional") {
    const PositiveFunctional trace_functional(Matrix::identity(2));
    CHECK(trace_functional(Matrix::identity(2)) == Complex(2.0));
    const std::array<double, 2> d{1.0, -1.0};
    CHECK_THROWS_AS(PositiveFunctional(Matrix::diagonal(d)), NotPsd);
    CHECK_THROWS_AS(trace_functional(Matrix::identity(3)), ShapeMismatch);

    Rng rng(15);
    for (int trial = 0; trial < 100; ++trial) {
        const auto k = static_cast<std::size_t>(rng.uniform_int(1, 4));
        const PositiveFunctional phi(random_psd(rng, k));
        const Matrix a = random_matrix(rng, k, k);
        const double norm = operator_norm(a);
        CHECK(phi(adjoint(a) * a).real() >= -1e-12 * norm * norm);
        CHECK(std::abs(phi(adjoint(a) * a).imag()) <= 1e-12 * (1.0 + norm * norm));
    }
}

TEST_CASE("schwarz margins on degenerate and equality cases") {
    Rng rng(16);
    const Matrix x = random_matrix(rng, 3, 2);
    const Matrix zero(3, 2);
    const PositiveFunctional phi(random_psd(rng, 2));

    const SchwarzGap at_zero = schwarz_basic_margin(zero, x);
    CHECK(frobenius_norm(at_zero.gap) == 0.0);
    CHECK(at_zero.margin.value == 0.0);

    const Matrix c = Matrix::scalar(Complex(1.5, -0.5));
    CHECK(std::abs(schwarz_basic_margin(c, c).margin.value) <= 1e-15);

    CHECK(schwarz_functional_margin(phi, zero, x).value == 0.0);
    CHECK(std::abs(schwarz_functional_margin(phi, x, x).value) <=
          1e-13 * (1.0 + schwarz_functional_margin(phi, x, x).scale));
    CHECK(schwarz_radius_margin(phi, zero, x).value == 0.0);
    CHECK(schwarz_radius_margin(phi, x, zero).value == 0.0);
    CHECK(schwarz_seminorm_margin(zero, x).value == 0.0);
    CHECK(std::abs(schwarz_seminorm_margin(x, x).value) <= 1e-12 * (1.0 + schwarz_seminorm_margin(x, x).scale));

    CHECK_THROWS_AS(schwarz_basic_margin(x, Matrix(2, 2)), ShapeMismatch);
    CHECK_THROWS_AS(schwarz_functional_margin(PositiveFunctional(Matrix::identity(3)), x, x), ShapeMismatch);
}

TEST_CASE("schwarz margins are nonnegative on random instances") {
    Rng rng(17);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto [n, k] = random_dims(rng);
        const Matrix x = random_matrix(rng, n, k);
        const Matrix y = random_matrix(rng, n, k);
        const PositiveFunctional phi(random_psd(rng, k));
        CHECK(schwarz_basic_margin(x, y).margin.holds(1e-10));
        CHECK(schwarz_functional_margin(phi, x, y).holds(1e-10));
        CHECK(schwarz_radius_margin(phi, x, y).holds(1e-10));
        CHECK(schwarz_seminorm_margin(x, y).holds(1e-10));
    }
}

TEST_CASE("the reversed product order is not bounded by the same right-hand side") {
    // <x,y><y,x> <= ||<x,x>|| <y,y> fails for rank-one x, y with orthogonal ranges.
    const Matrix x(2, 2, {1.0, 0.0, 0.0, 0.0});
    const Matrix y(2, 2, {0.0, 1.0, 0.0, 0.0});
    const Matrix xy = inner_product(x, y);
    const Matrix reversed = operator_norm(inner_product(x, x)) * inner_product(y, y) - xy * adjoint(xy);
    CHECK(loewner_margin(reversed) < -0.5);
    CHECK(schwarz_basic_margin(x, y).margin.value >= 0.0);
}
