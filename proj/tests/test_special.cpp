#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "logimath/special.hpp"
#include "oracles.hpp"

using namespace logimath;

TEST_CASE("gamma_real known values") {
    CHECK(gamma_real(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    const double sqrt_pi = std::sqrt(std::numbers::pi);
    CHECK(gamma_real(0.5) == doctest::Approx(sqrt_pi).epsilon(1e-12));
    // recurrence from Gamma(1/2)
    CHECK(gamma_real(4.5)
          == doctest::Approx(3.5 * 2.5 * 1.5 * 0.5 * sqrt_pi).epsilon(1e-12));
    CHECK(gamma_real(6.0) == doctest::Approx(120.0).epsilon(1e-13));
    CHECK(gamma_real(-0.5) == doctest::Approx(-2.0 * sqrt_pi).epsilon(1e-12));
}

TEST_CASE("gamma_real poles and accuracy sweep") {
    CHECK_THROWS_AS(gamma_real(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_real(-3.0), std::domain_error);
    for (double x = 0.1; x <= 50.0; x += 0.1)
        CHECK(gamma_real(x) == doctest::Approx(std::tgamma(x)).epsilon(1e-12));
}

TEST_CASE("tricomi series values") {
    const TricomiFunction e0{0.0, 1.0};
    CHECK(tricomi_eval(e0, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(tricomi_eval(e0, 1.0)
          == doctest::Approx(oracles::bessel_i0_series(2.0)).epsilon(1e-13));
    const TricomiFunction e1{1.0, 1.0};
    CHECK(tricomi_eval(e1, 0.0) == doctest::Approx(1.0).epsilon(1e-14));

    SeriesPolicy tight;
    tight.max_terms = 3;
    CHECK_THROWS_AS(tricomi_eval(e0, 30.0, tight), std::runtime_error);
    CHECK_THROWS_AS(TricomiFunction(-1.5, 1.0), std::invalid_argument);
    SeriesPolicy bad;
    bad.rel_tol = -1.0;
    CHECK_THROWS_AS(tricomi_eval(e0, 1.0, bad), std::invalid_argument);
}

TEST_CASE("tricomi negative argument uses the alternating series") {
    // brute-force partial sum, high term count
    auto brute = [](double z) {
        double term = 1.0, sum = 1.0;
        for (int k = 1; k < 300; ++k) {
            term *= z / (static_cast<double>(k) * static_cast<double>(k));
            sum += term;
        }
        return sum;
    };
    for (double z : {-0.5, -2.0, -7.5})
        CHECK(tricomi_series(0.0, z) == doctest::Approx(brute(z)).epsilon(1e-12));
}

TEST_CASE("tricomi_derivative") {
    CHECK(tricomi_derivative(TricomiFunction{0.0, 1.0}, 0.0)
          == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(tricomi_derivative(TricomiFunction{0.0, 2.0}, 0.0)
          == doctest::Approx(2.0).epsilon(1e-14));
    // finite-difference oracle
    const TricomiFunction f{0.0, 1.0};
    const double h = 1e-5;
    const double fd = (tricomi_eval(f, 1.0 + h) - tricomi_eval(f, 1.0 - h)) / (2.0 * h);
    CHECK(tricomi_derivative(f, 1.0) == doctest::Approx(fd).epsilon(1e-8));
}

TEST_CASE("laguerre operator on simple functions") {
    auto constant = [](double) { return 4.2; };
    CHECK(std::abs(laguerre_op_apply(constant, 1.3, 0.0)) < 1e-6);
    auto ident = [](double x) { return x; };
    CHECK(laguerre_op_apply(ident, 3.0, 0.0) == doctest::Approx(1.0).epsilon(1e-7));
    // eigenvalue relation against the series evaluation
    auto e0 = [](double x) { return tricomi_series(0.0, x); };
    CHECK(laguerre_op_apply(e0, 2.0, 0.0)
          == doctest::Approx(tricomi_series(0.0, 2.0)).epsilon(1e-6));
    // operator is regular at x = 0: value is (1+nu) f'(0)
    auto square = [](double x) { return x * x; };
    CHECK(laguerre_op_apply(square, 0.0, 0.0) == doctest::Approx(0.0).epsilon(1e-8));
    CHECK_THROWS_AS(laguerre_op_apply(ident, 1.0, 0.0, 1e-18), std::domain_error);
}

TEST_CASE("eigen_residual across orders and scales") {
    const Grid grid = Grid::uniform(0.5, 5.0, 32);
    for (double nu : {0.0, 1.0, 3.5}) {
        for (double lambda : {0.5, 1.0, 2.0}) {
            const ResidualReport rep = eigen_residual(nu, lambda, grid);
            CHECK(rep.pass);
            CHECK(rep.max_norm <= 1e-6);
        }
    }
    // lambda = 0 collapses both sides to zero
    const ResidualReport zero = eigen_residual(0.0, 0.0, grid);
    CHECK(zero.max_norm == 0.0);
    // finite-difference route agrees within the looser budget
    const ResidualReport fd =
        eigen_residual(0.0, 1.0, grid, {}, DerivativeMode::FiniteDifference);
    CHECK(fd.max_norm <= 1e-6);
    CHECK(fd.meta.mode == DerivativeMode::FiniteDifference);
    const Grid touching_zero = Grid::uniform(0.0, 5.0, 8);
    CHECK_THROWS_AS(
        eigen_residual(0.0, 1.0, touching_zero, {}, DerivativeMode::FiniteDifference),
        std::domain_error);
}

TEST_CASE("korf_residual for stretched arguments") {
    CHECK(korf_residual(1.0, 1.0, Grid::uniform(0.5, 5.0, 32)).max_norm <= 1e-6);
    CHECK(korf_residual(1.0, 2.0, Grid::uniform(0.5, 3.0, 32)).max_norm <= 1e-6);
    CHECK(korf_residual(1.0, 0.5, Grid::uniform(0.5, 5.0, 32)).max_norm <= 1e-6);
    CHECK(korf_residual(1.0, 2.0, Grid::uniform(0.5, 3.0, 32), {},
                        DerivativeMode::FiniteDifference)
              .max_norm <= 1e-5);
    CHECK(korf_residual(0.0, 2.0, Grid::uniform(0.5, 3.0, 8)).max_norm == 0.0);
    CHECK_THROWS_AS(korf_residual(1.0, -1.0, Grid::uniform(0.5, 3.0, 8)),
                    std::invalid_argument);
    CHECK_THROWS_AS(korf_residual(1.0, 1.0, Grid::uniform(-1.0, 3.0, 8)),
                    std::domain_error);
}

TEST_CASE("series positivity, monotonicity and normalization") {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> order(-0.9, 4.0);
    for (int trial = 0; trial < 30; ++trial) {
        const double nu = order(rng);
        double prev = -1.0;
        for (double x = 0.0; x <= 20.0; x += 0.4) {
            const double v = tricomi_series(nu, x);
            CHECK(v > 0.0);
            CHECK(v > prev);
            prev = v;
        }
        CHECK(tricomi_series(nu, 0.0)
              == doctest::Approx(1.0 / gamma_real(nu + 1.0)).epsilon(1e-13));
    }
}

TEST_CASE("Bessel identity against two independent oracles") {
    for (int i = 0; i <= 200; ++i) {
        const double x = 10.0 * i / 200.0;
        const double ours = tricomi_series(0.0, x);
        const double ref = oracles::bessel_i0_series(2.0 * std::sqrt(x));
        CHECK(std::abs(ours - ref) <= 1e-12 * ref);
        const double quad = oracles::bessel_i0_integral(2.0 * std::sqrt(x));
        CHECK(std::abs(ours - quad) <= 1e-12 * quad);
    }
}
