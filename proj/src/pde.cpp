#include "logimath/pde.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace logimath {

Field1D::Field1D(Grid g, std::vector<double> v, double t)
    : grid(std::move(g)), values(std::move(v)), time(t) {
    if (values.size() != grid.size())
        throw std::invalid_argument("Field1D: value count must match the grid");
    for (double x : values)
        if (!std::isfinite(x))
            throw std::invalid_argument("Field1D: non-finite value");
}

double PolyInitialData::eval(double x) const {
    double acc = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;)
        acc = acc * x + coeffs[k];
    return acc;
}

int PolyInitialData::degree() const {
    for (std::size_t k = coeffs.size(); k-- > 0;)
        if (coeffs[k] != 0.0)
            return static_cast<int>(k);
    return 0;
}

double laguerre_heat_poly(const PolyInitialData& g, double t, double x) {
    const int deg = g.degree();
    double sum = 0.0;
    // weight(m) = t^m / (m!)^2; operator power maps x^k -> (k!/(k-m)!)^2 x^(k-m)
    double weight = 1.0;
    for (int m = 0; m <= deg; ++m) {
        if (m > 0)
            weight *= t / (static_cast<double>(m) * static_cast<double>(m));
        double inner = 0.0;
        for (int k = m; k <= deg && k < static_cast<int>(g.coeffs.size()); ++k) {
            double fall = 1.0; // (k!/(k-m)!)^2
            for (int j = 0; j < m; ++j) {
                const double factor = static_cast<double>(k - j);
                fall *= factor * factor;
            }
            inner += g.coeffs[static_cast<std::size_t>(k)] * fall * std::pow(x, k - m);
        }
        sum += weight * inner;
    }
    return sum;
}

namespace {

void require_uniform_from_zero(const Grid& grid, const char* who) {
    if (!grid.step())
        throw std::invalid_argument(std::string(who) + ": uniform grid required");
    if (grid.front() != 0.0)
        throw std::invalid_argument(std::string(who) + ": grid must start at x = 0");
}

// One Crank-Nicolson step of the conservative scheme; Thomas solve.
void cn_step(const std::vector<double>& x, double dx, double dt,
             std::vector<double>& F, std::vector<double>& lower,
             std::vector<double>& diag, std::vector<double>& upper,
             std::vector<double>& rhs, std::vector<double>& scratch) {
    const std::size_t n = F.size();
    const double r = dt / (2.0 * dx * dx);
    // Assemble (I - dt/2 A) F_new = (I + dt/2 A) F_old.
    {
        const double c = 2.0 * (x[0] + 0.5 * dx); // face at dx/2, half-width cell
        lower[0] = 0.0;
        diag[0] = 1.0 + r * c;
        upper[0] = -r * c;
        rhs[0] = F[0] + r * c * (F[1] - F[0]);
    }
    for (std::size_t j = 1; j + 1 < n; ++j) {
        const double xl = x[j] - 0.5 * dx;
        const double xr = x[j] + 0.5 * dx;
        lower[j] = -r * xl;
        diag[j] = 1.0 + r * (xl + xr);
        upper[j] = -r * xr;
        rhs[j] = F[j] + r * (xr * (F[j + 1] - F[j]) - xl * (F[j] - F[j - 1]));
    }
    {
        const std::size_t j = n - 1;
        const double xl = x[j] - 0.5 * dx;
        const double c = 2.0 * xl; // zero flux through the right face
        lower[j] = -r * c;
        diag[j] = 1.0 + r * c;
        upper[j] = 0.0;
        rhs[j] = F[j] - r * c * (F[j] - F[j - 1]);
    }
    // Thomas algorithm.
    scratch[0] = upper[0] / diag[0];
    rhs[0] /= diag[0];
    for (std::size_t j = 1; j < n; ++j) {
        const double m = diag[j] - lower[j] * scratch[j - 1];
        scratch[j] = upper[j] / m;
        rhs[j] = (rhs[j] - lower[j] * rhs[j - 1]) / m;
    }
    F[n - 1] = rhs[n - 1];
    for (std::size_t j = n - 1; j-- > 0;)
        F[j] = rhs[j] - scratch[j] * F[j + 1];
}

} // namespace

HeatRun laguerre_heat_fd(const Field1D& initial, const std::vector<double>& sample_times,
                         double dt) {
    require_uniform_from_zero(initial.grid, "laguerre_heat_fd");
    if (!(dt > 0.0))
        throw std::invalid_argument("laguerre_heat_fd: dt must be positive");
    for (std::size_t i = 0; i < sample_times.size(); ++i) {
        if (sample_times[i] < initial.time)
            throw std::invalid_argument("laguerre_heat_fd: sample time precedes initial time");
        if (i > 0 && sample_times[i] <= sample_times[i - 1])
            throw std::invalid_argument("laguerre_heat_fd: sample times must increase");
    }

    HeatRun run;
    if (initial.grid.size() < 50)
        run.warnings.push_back("grid is coarse (< 50 points); interior accuracy degrades");

    const std::vector<double>& x = initial.grid.points();
    const double dx = *initial.grid.step();
    std::vector<double> F = initial.values;
    const std::size_t n = F.size();
    std::vector<double> lower(n), diag(n), upper(n), rhs(n), scratch(n);

    double norm0 = 0.0;
    for (double v : F)
        norm0 = std::max(norm0, std::abs(v));
    const double norm_cap = 10.0 * std::max(1.0, norm0);

    double t = initial.time;
    for (double target : sample_times) {
        while (t < target - 1e-13) {
            const double step = std::min(dt, target - t);
            cn_step(x, dx, step, F, lower, diag, upper, rhs, scratch);
            t += step;
            double norm = 0.0;
            for (double v : F)
                norm = std::max(norm, std::abs(v));
            if (!std::isfinite(norm) || norm > norm_cap)
                throw std::runtime_error("laguerre_heat_fd: solution norm grew beyond 10x the initial data");
        }
        run.slices.emplace_back(initial.grid, F, target);
    }
    return run;
}

Field1D laguerre_heat_fd(const Field1D& initial, double t_final, double dt) {
    return laguerre_heat_fd(initial, std::vector<double>{t_final}, dt).slices.front();
}

Field1D hopf_cole_u(const Field1D& F) {
    if (!F.grid.step())
        throw std::invalid_argument("hopf_cole_u: uniform grid required");
    const double dx = *F.grid.step();
    const std::vector<double>& v = F.values;
    const std::size_t n = v.size();
    if (n < 5)
        throw std::invalid_argument("hopf_cole_u: need at least 5 points");
    for (double f : v)
        if (std::abs(f) < 1e-10)
            throw std::domain_error("hopf_cole_u: field crosses zero");
    std::vector<double> u(n);
    u[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * dx) / v[0];
    u[1] = (v[2] - v[0]) / (2.0 * dx) / v[1];
    for (std::size_t j = 2; j + 2 < n; ++j)
        u[j] = (-v[j + 2] + 8.0 * v[j + 1] - 8.0 * v[j - 1] + v[j - 2]) / (12.0 * dx) / v[j];
    u[n - 2] = (v[n - 1] - v[n - 3]) / (2.0 * dx) / v[n - 2];
    u[n - 1] = (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / (2.0 * dx) / v[n - 1];
    return Field1D(F.grid, std::move(u), F.time);
}

namespace {

void check_stack(const std::vector<Field1D>& stack, double dt, const char* who) {
    if (stack.size() < 3)
        throw std::invalid_argument(std::string(who) + ": need at least 3 time slices");
    if (!(dt > 0.0))
        throw std::invalid_argument(std::string(who) + ": dt must be positive");
    const Grid& g = stack.front().grid;
    if (!g.step())
        throw std::invalid_argument(std::string(who) + ": uniform grid required");
    for (std::size_t s = 0; s < stack.size(); ++s) {
        if (stack[s].grid.size() != g.size() || stack[s].grid.front() != g.front()
            || stack[s].grid.back() != g.back())
            throw std::invalid_argument(std::string(who) + ": slices live on different grids");
        if (s > 0 && std::abs(stack[s].time - stack[s - 1].time - dt) > 1e-10 * std::max(1.0, dt))
            throw std::invalid_argument(std::string(who) + ": slice spacing differs from dt");
    }
    if (g.size() < 7)
        throw std::invalid_argument(std::string(who) + ": grid too short for the stencils");
}

struct SpaceDerivs {
    double d1, d2;
};

SpaceDerivs space_derivs(const std::vector<double>& v, std::size_t j, double dx) {
    SpaceDerivs d;
    d.d1 = (-v[j + 2] + 8.0 * v[j + 1] - 8.0 * v[j - 1] + v[j - 2]) / (12.0 * dx);
    d.d2 = (-v[j + 2] + 16.0 * v[j + 1] - 30.0 * v[j] + 16.0 * v[j - 1] - v[j - 2])
         / (12.0 * dx * dx);
    return d;
}

} // namespace

ResidualReport laguerre_burgers_residual(const std::vector<Field1D>& u_stack, double dt,
                                         double tol) {
    check_stack(u_stack, dt, "laguerre_burgers_residual");
    const Grid& g = u_stack.front().grid;
    const double dx = *g.step();
    std::vector<double> res, where;
    for (std::size_t s = 1; s + 1 < u_stack.size(); ++s) {
        const auto& um = u_stack[s - 1].values;
        const auto& u0 = u_stack[s].values;
        const auto& up = u_stack[s + 1].values;
        for (std::size_t j = 2; j + 2 < g.size(); ++j) {
            const double x = g[j];
            const double ut = (up[j] - um[j]) / (2.0 * dt);
            const SpaceDerivs d = space_derivs(u0, j, dx);
            const double u = u0[j];
            // (x u_x)_x + u_x + u^2 + 2 x u u_x
            const double rhs = 2.0 * d.d1 + x * d.d2 + u * u + 2.0 * x * u * d.d1;
            res.push_back(ut - rhs);
            where.push_back(x);
        }
    }
    ReportMeta meta;
    meta.equation_id = "laguerre-burgers";
    meta.mode = DerivativeMode::FiniteDifference;
    return assemble_report(std::move(res), tol, std::move(meta), std::move(where));
}

ResidualReport log_potential_residual(const std::vector<Field1D>& F_stack, double dt,
                                      double tol) {
    check_stack(F_stack, dt, "log_potential_residual");
    const Grid& g = F_stack.front().grid;
    const double dx = *g.step();
    std::vector<std::vector<double>> logs(F_stack.size());
    for (std::size_t s = 0; s < F_stack.size(); ++s) {
        logs[s].resize(g.size());
        for (std::size_t j = 0; j < g.size(); ++j) {
            const double f = F_stack[s].values[j];
            if (!(f > 0.0))
                throw std::domain_error("log_potential_residual: field must stay positive");
            logs[s][j] = std::log(f);
        }
    }
    std::vector<double> res, where;
    for (std::size_t s = 1; s + 1 < logs.size(); ++s) {
        for (std::size_t j = 2; j + 2 < g.size(); ++j) {
            const double x = g[j];
            const double ut = (logs[s + 1][j] - logs[s - 1][j]) / (2.0 * dt);
            const SpaceDerivs d = space_derivs(logs[s], j, dx);
            const double rhs = d.d1 + x * d.d2 + x * d.d1 * d.d1;
            res.push_back(ut - rhs);
            where.push_back(x);
        }
    }
    ReportMeta meta;
    meta.equation_id = "log-potential";
    meta.mode = DerivativeMode::FiniteDifference;
    return assemble_report(std::move(res), tol, std::move(meta), std::move(where));
}

// ---------------------------------------------------------------------------
// Fisher traveling wave
// ---------------------------------------------------------------------------

void FisherParams::validate() const {
    if (mu < 0.0 || !(alpha > 0.0))
        throw std::invalid_argument("FisherParams: need mu >= 0 and alpha > 0");
    if (branch != 1 && branch != -1)
        throw std::invalid_argument("FisherParams: branch must be +1 or -1");
}

double fisher_wavenumber(const FisherParams& p) {
    p.validate();
    return static_cast<double>(p.branch) * std::sqrt(p.mu / (6.0 * p.alpha));
}

double fisher_speed(const FisherParams& p) {
    return -5.0 * p.alpha * fisher_wavenumber(p);
}

namespace {

double sigmoid(double xi) {
    if (xi >= 0.0)
        return 1.0 / (1.0 + std::exp(-xi));
    const double e = std::exp(xi);
    return e / (1.0 + e);
}

struct WaveDerivs {
    double f, ft, fxx;
};

WaveDerivs wave_derivs(double k, double V, double amplitude, double x, double t) {
    const double xi = k * (x - V * t);
    const double s = sigmoid(xi);
    const double U = s * s;
    const double U1 = 2.0 * s * s * (1.0 - s);
    const double U2 = s * s * (1.0 - s) * (4.0 - 6.0 * s);
    WaveDerivs d;
    d.f = amplitude * U;
    d.ft = -amplitude * k * V * U1;
    d.fxx = amplitude * k * k * U2;
    return d;
}

ResidualReport fisher_residual_impl(const FisherParams& p, double k, double V,
                                    double amplitude, const Grid& grid,
                                    const std::vector<double>& times,
                                    const std::string& profile_id, double tol) {
    if (times.empty())
        throw std::invalid_argument("fisher_residual: need at least one time");
    std::vector<double> res, where;
    for (double t : times) {
        for (double x : grid.points()) {
            const WaveDerivs d = wave_derivs(k, V, amplitude, x, t);
            res.push_back(d.ft - p.alpha * d.fxx - p.mu * d.f * (1.0 - d.f));
            where.push_back(x);
        }
    }
    ReportMeta meta;
    meta.model_id = "fisher(mu=" + std::to_string(p.mu) + ",alpha=" + std::to_string(p.alpha) + ")";
    meta.equation_id = "fisher:" + profile_id;
    meta.mode = DerivativeMode::Analytic;
    ResidualReport rep = assemble_report(std::move(res), tol, std::move(meta), std::move(where));
    if (p.mu == 0.0)
        rep.note = "degenerate: zero reaction rate collapses the front to a constant";
    return rep;
}

} // namespace

double fisher_wave(const FisherParams& p, double x, double t, FisherProfile profile) {
    const double k = fisher_wavenumber(p);
    const double amplitude =
        profile == FisherProfile::Verified ? 1.0 : (k != 0.0 ? 1.0 / (k * k) : 1.0);
    return wave_derivs(k, fisher_speed(p), amplitude, x, t).f;
}

ResidualReport fisher_residual(const FisherParams& p, const Grid& grid,
                               const std::vector<double>& times, FisherProfile profile,
                               double tol) {
    const double k = fisher_wavenumber(p);
    if (profile == FisherProfile::Verified)
        return fisher_residual_impl(p, k, fisher_speed(p), 1.0, grid, times, "verified", tol);
    const double amplitude = k != 0.0 ? 1.0 / (k * k) : 1.0;
    ResidualReport rep = fisher_residual_impl(p, k, fisher_speed(p), amplitude, grid, times,
                                              "paper-literal", tol);
    rep.diagnostic = true; // reported side by side, never a gate
    return rep;
}

ResidualReport fisher_residual_custom(const FisherParams& p, double k, double V,
                                      double amplitude, const Grid& grid,
                                      const std::vector<double>& times, double tol) {
    return fisher_residual_impl(p, k, V, amplitude, grid, times, "custom", tol);
}

double fisher_front_speed(const FisherParams& p, const Grid& grid,
                          const std::vector<double>& times, FisherProfile profile) {
    if (times.size() < 2)
        throw std::invalid_argument("fisher_front_speed: need at least two times");
    const double level =
        profile == FisherProfile::Verified ? 0.25 : fisher_wave(p, 0.0, 0.0, profile);
    std::vector<double> fronts;
    for (double t : times) {
        double lo = grid.front(), hi = grid.back();
        double flo = fisher_wave(p, lo, t, profile) - level;
        double fhi = fisher_wave(p, hi, t, profile) - level;
        if (flo * fhi > 0.0)
            throw std::domain_error("fisher_front_speed: level set left the grid");
        for (int it = 0; it < 100; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double fm = fisher_wave(p, mid, t, profile) - level;
            if (flo * fm <= 0.0) {
                hi = mid;
                fhi = fm;
            } else {
                lo = mid;
                flo = fm;
            }
        }
        fronts.push_back(0.5 * (lo + hi));
    }
    // Least-squares slope of front position vs time.
    const auto n = static_cast<double>(times.size());
    double st = 0.0, sx = 0.0, stt = 0.0, stx = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i) {
        st += times[i];
        sx += fronts[i];
        stt += times[i] * times[i];
        stx += times[i] * fronts[i];
    }
    return (n * stx - st * sx) / (n * stt - st * st);
}

} // namespace logimath
