#pragma once

#include <array>
#include <complex>
#include <vector>

#include "logimath/ode.hpp"
#include "logimath/residual.hpp"

namespace logimath {

using Complex = std::complex<double>;

/// Parameters of the third-order field-amplitude equation
///   a''' + 2 i nu a'' - nu^2 a' = i pi g0 a,   a(0) = 1, a'(0) = a''(0) = 0,
/// and of the saturating field map
///   l(tau) = l0 a(tau) / (1 + (l0/|lF|)(a(tau) - 1)).
struct FelParams {
    double nu = 0.0;
    double g0 = 1.0;
    Complex l0{1e-3, 0.0};
    Complex lF{1.0, 0.0};

    void validate() const;
};

/// Integrates the amplitude equation as a first-order complex system
/// (a, a', a'') over [0, tau_max].
Trajectory<Complex> fel_amplitude(const FelParams& p, double tau_max, double tol = 1e-10);

/// The three roots of lambda^3 + 2 i nu lambda^2 - nu^2 lambda - i pi g0 = 0
/// (closed form with one Newton polish per root).
std::array<Complex, 3> fel_characteristic_roots(const FelParams& p);

/// Largest real part among the characteristic roots: the exponential growth
/// rate of |a| before saturation.
double fel_gain_rate(const FelParams& p);

/// Pointwise saturating-field map of an amplitude trajectory. l_tilde
/// normalizes by |lF|, which makes the algebraic inversion
///   a = A l_tilde / (1 - l_tilde),  A = 1/l_tilde(0) - 1
/// exact; max_roundtrip_error records how well the inversion reproduces the
/// input amplitude. Throws std::domain_error when the map's denominator
/// crosses its pole.
struct FelField {
    std::vector<double> tau;
    std::vector<Complex> a;
    std::vector<Complex> l;
    std::vector<Complex> l_tilde;
    std::vector<Complex> a_reconstructed;
    double max_roundtrip_error = 0.0;
};

FelField fel_logistic_field(const Trajectory<Complex>& a_traj, const FelParams& p);

/// Single application of the saturating map to one amplitude value.
Complex fel_field_value(const Complex& a, const FelParams& p);

struct FelResidualOptions {
    double grid_step = 0.02;
    double tau_min = 0.0;
    double tau_max = 0.0;    // 0: trajectory end
    double delta_band = 1e-6;
    double tol = 1e-3;       // reporting threshold only; the verdict stays DIAG
};

/// Diagnostic residual of the third-order saturating-field equation
/// evaluated with finite differences on a uniform resampling of the
/// trajectory. Always reported as DIAG, never as a hard failure; refine
/// grid_step to track convergence.
ResidualReport fel_nonlinear_residual(const Trajectory<Complex>& a_traj,
                                      const FelParams& p,
                                      const FelResidualOptions& opts = {});

} // namespace logimath
