#include "logimath/fel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace logimath {

void FelParams::validate() const {
    if (!(g0 >= 0.0))
        throw std::invalid_argument("FelParams: g0 must be non-negative");
    if (!(std::abs(lF) > 0.0))
        throw std::invalid_argument("FelParams: |lF| must be positive");
}

Trajectory<Complex> fel_amplitude(const FelParams& p, double tau_max, double tol) {
    p.validate();
    if (!(tau_max > 0.0))
        throw std::invalid_argument("fel_amplitude: tau_max must be positive");
    const Complex i{0.0, 1.0};
    const Complex gain = i * std::numbers::pi * p.g0;
    const double nu = p.nu;
    OdeSystem<Complex> sys;
    sys.dimension = 3;
    sys.rhs = [gain, nu, i](double, std::span<const Complex> y, std::span<Complex> dy) {
        dy[0] = y[1];
        dy[1] = y[2];
        dy[2] = gain * y[0] - 2.0 * i * nu * y[2] + nu * nu * y[1];
    };
    const std::vector<Complex> y0{Complex{1.0, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0}};
    IntegrateOptions opts;
    opts.tol = tol;
    return integrate(sys, y0, 0.0, tau_max, opts);
}

std::array<Complex, 3> fel_characteristic_roots(const FelParams& p) {
    p.validate();
    const Complex i{0.0, 1.0};
    // lambda^3 + A lambda^2 + B lambda + C
    const Complex A = 2.0 * i * p.nu;
    const Complex B = -p.nu * p.nu;
    const Complex C = -i * std::numbers::pi * p.g0;
    // Depressed cubic w^3 + P w + Q with lambda = w - A/3.
    const Complex P = B - A * A / 3.0;
    const Complex Q = 2.0 * A * A * A / 27.0 - A * B / 3.0 + C;
    const Complex disc = std::sqrt(Q * Q / 4.0 + P * P * P / 27.0);
    Complex u3 = -Q / 2.0 + disc;
    if (std::abs(u3) < std::abs(-Q / 2.0 - disc))
        u3 = -Q / 2.0 - disc;
    const Complex u = std::pow(u3, 1.0 / 3.0);
    const Complex omega{-0.5, std::sqrt(3.0) / 2.0};
    std::array<Complex, 3> roots;
    for (int k = 0; k < 3; ++k) {
        Complex uk = u;
        for (int j = 0; j < k; ++j)
            uk *= omega;
        Complex w = (std::abs(uk) > 0.0) ? uk - P / (3.0 * uk) : Complex{0.0, 0.0};
        Complex lambda = w - A / 3.0;
        for (int it = 0; it < 3; ++it) { // Newton polish
            const Complex f = ((lambda + A) * lambda + B) * lambda + C;
            const Complex df = (3.0 * lambda + 2.0 * A) * lambda + B;
            if (std::abs(df) == 0.0)
                break;
            lambda -= f / df;
        }
        roots[k] = lambda;
    }
    return roots;
}

double fel_gain_rate(const FelParams& p) {
    const auto roots = fel_characteristic_roots(p);
    double best = roots[0].real();
    for (const Complex& r : roots)
        best = std::max(best, r.real());
    return best;
}

namespace {

Complex field_map(const Complex& a, const FelParams& p) {
    const Complex beta = p.l0 / std::abs(p.lF);
    const Complex den = 1.0 + beta * (a - 1.0);
    if (std::abs(den) < 1e-12)
        throw std::domain_error("fel_logistic_field: map crosses its pole");
    return p.l0 * a / den;
}

} // namespace

Complex fel_field_value(const Complex& a, const FelParams& p) {
    return field_map(a, p);
}

FelField fel_logistic_field(const Trajectory<Complex>& a_traj, const FelParams& p) {
    p.validate();
    FelField out;
    const double lf = std::abs(p.lF);
    const Complex lt0 = p.l0 / lf;
    if (std::abs(lt0 - 1.0) < 1e-12)
        throw std::domain_error("fel_logistic_field: l0 coincides with the saturation level");
    const Complex A = 1.0 / lt0 - 1.0;
    out.tau.reserve(a_traj.nodes.size());
    for (const auto& node : a_traj.nodes) {
        const Complex a = node.y[0];
        const Complex l = field_map(a, p);
        const Complex lt = l / lf;
        const Complex den = 1.0 - lt;
        if (std::abs(den) < 1e-12)
            throw std::domain_error("fel_logistic_field: normalized field reached saturation");
        const Complex a_back = A * lt / den;
        out.tau.push_back(node.t);
        out.a.push_back(a);
        out.l.push_back(l);
        out.l_tilde.push_back(lt);
        out.a_reconstructed.push_back(a_back);
        out.max_roundtrip_error =
            std::max(out.max_roundtrip_error, std::abs(a_back - a));
    }
    return out;
}

ResidualReport fel_nonlinear_residual(const Trajectory<Complex>& a_traj,
                                      const FelParams& p,
                                      const FelResidualOptions& opts) {
    p.validate();
    if (!(opts.grid_step > 0.0))
        throw std::invalid_argument("fel_nonlinear_residual: grid_step must be positive");
    const double t0 = opts.tau_min;
    const double t1 = opts.tau_max > 0.0 ? opts.tau_max : a_traj.back().t;
    const auto n = static_cast<std::size_t>(std::floor((t1 - t0) / opts.grid_step)) + 1;
    if (n < 7)
        throw std::invalid_argument("fel_nonlinear_residual: grid too short for the stencils");

    const double h = opts.grid_step;
    const double lf = std::abs(p.lF);
    std::vector<double> tau(n);
    std::vector<Complex> lt(n);
    for (std::size_t j = 0; j < n; ++j) {
        tau[j] = t0 + h * static_cast<double>(j);
        const Complex a = a_traj.sample(tau[j])[0];
        lt[j] = field_map(a, p) / lf;
        if (std::abs(lt[j] - 1.0) < opts.delta_band)
            throw std::domain_error("fel_nonlinear_residual: field inside the singular band at saturation");
    }

    double max_jump = 0.0, max_mag = 0.0;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        max_jump = std::max(max_jump, std::abs(lt[j + 1] - lt[j]));
        max_mag = std::max(max_mag, std::abs(lt[j]));
    }
    const bool stationary = max_jump < 1e-13 * std::max(1.0, max_mag);

    const Complex i{0.0, 1.0};
    const Complex gain = i * std::numbers::pi * p.g0;
    std::vector<double> res, abscissas, re, im;
    double max_re = 0.0, max_im = 0.0;
    for (std::size_t j = 2; j + 2 < n; ++j) {
        const Complex d1 = (-lt[j + 2] + 8.0 * lt[j + 1] - 8.0 * lt[j - 1] + lt[j - 2])
                         / (12.0 * h);
        const Complex d2 = (-lt[j + 2] + 16.0 * lt[j + 1] - 30.0 * lt[j]
                            + 16.0 * lt[j - 1] - lt[j - 2]) / (12.0 * h * h);
        const Complex d3 = (lt[j + 2] - 2.0 * lt[j + 1] + 2.0 * lt[j - 1] - lt[j - 2])
                         / (2.0 * h * h * h);
        const Complex f = -d1 / (lt[j] - 1.0);
        const Complex r = d3 + d2 * (6.0 * f + 2.0 * i * p.nu)
                        + (1.0 - lt[j]) * (6.0 * f * f * f + 4.0 * i * p.nu * f * f
                                           - p.nu * p.nu * f - gain * lt[j]);
        res.push_back(std::abs(r));
        abscissas.push_back(tau[j]);
        max_re = std::max(max_re, std::abs(r.real()));
        max_im = std::max(max_im, std::abs(r.imag()));
    }

    ReportMeta meta;
    meta.model_id = "fel(nu=" + std::to_string(p.nu) + ",g0=" + std::to_string(p.g0) + ")";
    meta.equation_id = "fel-5.13";
    meta.mode = DerivativeMode::FiniteDifference;
    ResidualReport rep = assemble_report(std::move(res), opts.tol, std::move(meta),
                                         std::move(abscissas));
    rep.diagnostic = true;
    rep.max_real = max_re;
    rep.max_imag = max_im;
    if (stationary)
        rep.note = "stationary trajectory: derivative terms vanish, residual reflects the algebraic terms only";
    return rep;
}

} // namespace logimath
