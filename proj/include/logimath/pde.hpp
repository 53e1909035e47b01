#pragma once

#include <string>
#include <vector>

#include "logimath/residual.hpp"

namespace logimath {

/// One time slice of a 1-D field on a uniform grid.
struct Field1D {
    Grid grid;
    std::vector<double> values;
    double time = 0.0;

    Field1D(Grid g, std::vector<double> v, double t = 0.0);
};

/// Polynomial initial data g(x) = sum_k coeffs[k] x^k for the degenerate
/// diffusion equation F_t = (x F_x)_x; the evolution-operator series applied
/// to a polynomial terminates, so the solution below is exact.
struct PolyInitialData {
    std::vector<double> coeffs;

    double eval(double x) const;
    int degree() const;
};

/// Exact solution of F_t = (x F_x)_x with F(x,0) = g(x):
/// repeated operator application maps x^k to (k!/(k-m)!)^2 x^(k-m), summed
/// with weights t^m/(m!)^2 up to m = deg g.
double laguerre_heat_poly(const PolyInitialData& g, double t, double x);

/// Crank-Nicolson finite-volume solver for F_t = (x F_x)_x on [0, L]:
/// conservative face fluxes x_{j+1/2}(F_{j+1}-F_j)/dx, natural left boundary
/// (the flux coefficient vanishes at x = 0), zero-gradient right boundary.
/// Interior accuracy is second order in dx; validate away from x = L.
struct HeatRun {
    std::vector<Field1D> slices;
    std::vector<std::string> warnings;
};

HeatRun laguerre_heat_fd(const Field1D& initial, const std::vector<double>& sample_times,
                         double dt);
Field1D laguerre_heat_fd(const Field1D& initial, double t_final, double dt);

/// u = F_x / F with 4th-order central differences in the interior and
/// one-sided 2nd-order stencils at the boundaries. Requires |F| >= 1e-10.
Field1D hopf_cole_u(const Field1D& F);

/// Residual of u_t = (x u_x)_x + u_x + (1 + x d/dx) u^2 over the interior
/// points of a stack of >= 3 equally spaced slices of u; the nonlinear term
/// expands to u^2 + 2 x u u_x.
ResidualReport laguerre_burgers_residual(const std::vector<Field1D>& u_stack, double dt,
                                         double tol = 1e-6);

/// Residual of u_t = (x u_x)_x + x u_x^2 for u = ln F, with F a positive
/// solution stack of the degenerate diffusion equation.
ResidualReport log_potential_residual(const std::vector<Field1D>& F_stack, double dt,
                                      double tol = 1e-6);

// ---------------------------------------------------------------------------
// Fisher traveling wave
// ---------------------------------------------------------------------------

/// f_t - alpha f_xx = mu f (1 - f). The verified front is
///   f(x,t) = (1 + e^(-xi))^(-2),  xi = k (x - V t),
///   k = branch * sqrt(mu / (6 alpha)),  V = -5 alpha k,
/// connecting 0 (left) to 1 (right) for branch = +1. The published form
/// carries an extra 1/k^2 amplitude; it is evaluable behind the
/// PaperLiteral profile for side-by-side reporting.
struct FisherParams {
    double mu = 1.0;
    double alpha = 1.0;
    int branch = +1;

    void validate() const;
};

enum class FisherProfile { Verified, PaperLiteral };

double fisher_wavenumber(const FisherParams& p);
double fisher_speed(const FisherParams& p);
double fisher_wave(const FisherParams& p, double x, double t,
                   FisherProfile profile = FisherProfile::Verified);

/// Analytic-derivative residual of the chosen profile in the full PDE over
/// grid x times. The report for a degenerate mu = 0 run is flagged in note.
ResidualReport fisher_residual(const FisherParams& p, const Grid& grid,
                               const std::vector<double>& times,
                               FisherProfile profile = FisherProfile::Verified,
                               double tol = 1e-6);

/// Residual of an arbitrary (k, V, amplitude) front in the PDE; used for
/// branch-pairing sensitivity probes.
ResidualReport fisher_residual_custom(const FisherParams& p, double k, double V,
                                      double amplitude, const Grid& grid,
                                      const std::vector<double>& times,
                                      double tol = 1e-6);

/// Front speed measured from the f = 1/4 level set by bisection at each
/// time and a least-squares slope fit.
double fisher_front_speed(const FisherParams& p, const Grid& grid,
                          const std::vector<double>& times,
                          FisherProfile profile = FisherProfile::Verified);

} // namespace logimath
