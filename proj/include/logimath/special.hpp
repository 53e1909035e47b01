#pragma once

#include <functional>

#include "logimath/residual.hpp"

namespace logimath {

/// Truncation controls for infinite-series evaluation. Evaluation fails
/// loudly (throws) when max_terms is reached before the relative tolerance.
struct SeriesPolicy {
    double rel_tol = 1e-14;
    int max_terms = 200;

    void validate() const;
};

/// e_nu(scale * x), the order-nu entire series
///   e_nu(z) = sum_r z^r / (r! Gamma(nu + r + 1)),  nu > -1.
struct TricomiFunction {
    double nu = 0.0;
    double scale = 1.0;

    TricomiFunction(double nu_, double scale_ = 1.0);
};

/// Gamma on the real line via Lanczos approximation with reflection for
/// arguments below 1/2. Relative error <= 1e-12 on (0, 50].
/// Throws std::domain_error at non-positive integers.
double gamma_real(double x, const SeriesPolicy& policy = {});

/// e_nu(z) by direct series summation (z of either sign; accuracy degrades
/// for z < -30 where the alternating sum loses digits).
double tricomi_series(double nu, double z, const SeriesPolicy& policy = {});

double tricomi_eval(const TricomiFunction& f, double x, const SeriesPolicy& policy = {});

/// d/dx e_nu(scale*x) from the term-wise differentiated series, which is
/// scale * e_{nu+1}(scale*x).
double tricomi_derivative(const TricomiFunction& f, double x, const SeriesPolicy& policy = {});

/// Applies d/dx x d/dx + nu d/dx in expanded form
///   (1 + nu) f'(x) + x f''(x)
/// with Richardson-extrapolated central differences. h = 0 selects the
/// shared default step. Regular at x = 0 (no division by the coefficient).
double laguerre_op_apply(const std::function<double(double)>& f, double x,
                         double nu, double h = 0.0);

/// Residual of (d/dx x d/dx + nu d/dx) e_nu(lambda x) - lambda e_nu(lambda x)
/// on the grid. Analytic mode differentiates the series; finite-difference
/// mode requires the grid strictly inside (0, inf).
ResidualReport eigen_residual(double nu, double lambda, const Grid& grid,
                              const SeriesPolicy& policy = {},
                              DerivativeMode mode = DerivativeMode::Analytic,
                              double tol = 1e-6);

/// Residual of d/dt (t N'(t)) - lambda alpha^2 t^(alpha-1) N(t) for the
/// stretched solution N(t) = e_0(lambda t^alpha); grid in (0, inf).
ResidualReport korf_residual(double lambda, double alpha, const Grid& grid,
                             const SeriesPolicy& policy = {},
                             DerivativeMode mode = DerivativeMode::Analytic,
                             double tol = 1e-6);

} // namespace logimath
