#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "logimath/residual.hpp"

using namespace logimath;

TEST_CASE("grid invariants") {
    const Grid g = Grid::uniform(0.0, 1.0, 11);
    CHECK(g.size() == 11);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == 1.0);
    REQUIRE(g.step());
    CHECK(*g.step() == doctest::Approx(0.1));

    CHECK_THROWS_AS(Grid::uniform(0.0, 1.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(Grid::uniform(1.0, 0.0, 5), std::invalid_argument);
    CHECK_THROWS_AS(Grid::from_points({0.0, 0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(Grid::from_points({0.0, 2.0, 1.0}), std::invalid_argument);

    const Grid e = Grid::from_points({0.0, 0.5, 2.0});
    CHECK_FALSE(e.step());
}

TEST_CASE("derivative stencils match known values") {
    auto cube = [](double x) { return x * x * x; };
    CHECK(numeric_derivative(cube, 2.0, 1).value == doctest::Approx(12.0).epsilon(1e-9));

    auto sine = [](double x) { return std::sin(x); };
    CHECK(std::abs(numeric_derivative(sine, 0.0, 2).value) < 1e-9);

    auto expo = [](double x) { return std::exp(x); };
    CHECK(numeric_derivative(expo, 1.0, 3).value
          == doctest::Approx(std::exp(1.0)).epsilon(1e-5));
}

TEST_CASE("stencil exactness on polynomials") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    std::uniform_real_distribution<double> point(-2.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        double c[5];
        for (double& v : c)
            v = coeff(rng);
        auto p = [&](double x) {
            return c[0] + x * (c[1] + x * (c[2] + x * (c[3] + x * c[4])));
        };
        auto p1 = [&](double x) {
            return c[1] + x * (2 * c[2] + x * (3 * c[3] + x * 4 * c[4]));
        };
        auto p2 = [&](double x) { return 2 * c[2] + x * (6 * c[3] + x * 12 * c[4]); };
        auto p3 = [&](double x) { return 6 * c[3] + 24 * c[4] * x; };
        const double x = point(rng);
        const double h = 0.5;
        CHECK(std::abs(central_stencil(p, x, 1, h) - p1(x)) < 1e-12);
        CHECK(std::abs(central_stencil(p, x, 2, h) - p2(x)) < 1e-12);
        CHECK(std::abs(central_stencil(p, x, 3, h) - p3(x)) < 1e-12);
    }
}

TEST_CASE("refinement law: first-derivative stencil converges at order ~4") {
    auto f = [](double x) { return std::exp(std::sin(3.0 * x)); };
    auto exact = [](double x) {
        return 3.0 * std::cos(3.0 * x) * std::exp(std::sin(3.0 * x));
    };
    const double x = 0.4;
    const double e1 = std::abs(central_stencil(f, x, 1, 0.1) - exact(x));
    const double e2 = std::abs(central_stencil(f, x, 1, 0.05) - exact(x));
    const double exponent = std::log2(e1 / e2);
    CHECK(exponent >= 3.5);
}

TEST_CASE("numeric_derivative error handling") {
    auto f = [](double x) { return x; };
    CHECK_THROWS_AS(numeric_derivative(f, 0.0, 1, 1e-18), std::domain_error);
    auto bad = [](double) { return std::numeric_limits<double>::quiet_NaN(); };
    CHECK_THROWS_AS(numeric_derivative(bad, 0.0, 1, 1e-3), std::domain_error);
    CHECK_THROWS_AS(central_stencil(f, 0.0, 4, 1e-3), std::invalid_argument);
}

TEST_CASE("assemble_report norms and verdicts") {
    const ResidualReport zero = assemble_report({0.0, 0.0, 0.0}, 1e-6);
    CHECK(zero.pass);
    CHECK(zero.max_norm == 0.0);
    CHECK(zero.l2_norm == 0.0);
    CHECK(zero.verdict() == "PASS");

    const ResidualReport fail = assemble_report({1e-3}, 1e-6);
    CHECK_FALSE(fail.pass);
    CHECK(fail.verdict() == "FAIL");

    // RMS definition: {3, 4} -> max 4, l2 = sqrt((9 + 16)/2)
    const ResidualReport two = assemble_report({3.0, -4.0}, 10.0);
    CHECK(two.pass);
    CHECK(two.max_norm == doctest::Approx(4.0));
    CHECK(two.l2_norm == doctest::Approx(std::sqrt(12.5)).epsilon(1e-14));
    CHECK(two.l2_norm <= two.max_norm);

    CHECK_THROWS_AS(assemble_report({}, 1e-6), std::invalid_argument);
}

TEST_CASE("default step policy") {
    CHECK(default_step(1, 0.0) == doctest::Approx(1e-4));
    CHECK(default_step(1, -20.0) == doctest::Approx(2e-3));
    CHECK(default_step(3, 0.5) == doctest::Approx(1e-3));
}
