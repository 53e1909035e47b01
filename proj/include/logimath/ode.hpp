#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace logimath {

template <class Scalar>
struct OdeSystem {
    std::size_t dimension = 1;
    std::function<void(double, std::span<const Scalar>, std::span<Scalar>)> rhs;
};

struct IntegrateOptions {
    double tol = 1e-10;
    double initial_step = 0.0;           // 0 selects a heuristic start
    double max_step = 0.0;               // 0 caps at the span length
    std::size_t max_steps = 1000000;
    std::optional<double> fixed_step;    // disables step-size control
};

/// Accepted integration nodes with the derivative stored at each node, so
/// values between nodes come from cubic Hermite interpolation (local error
/// of order h^4, below the step-controller tolerance for an order-5 pair).
template <class Scalar>
class Trajectory {
public:
    struct Node {
        double t;
        std::vector<Scalar> y;
        std::vector<Scalar> dydt;
    };

    std::vector<Node> nodes;
    std::size_t accepted = 0;
    std::size_t rejected = 0;
    double tolerance = 0.0;

    const Node& front() const { return nodes.front(); }
    const Node& back() const { return nodes.back(); }

    std::vector<Scalar> sample(double t) const {
        if (nodes.empty())
            throw std::logic_error("Trajectory::sample: empty trajectory");
        if (t <= nodes.front().t)
            return nodes.front().y;
        if (t >= nodes.back().t)
            return nodes.back().y;
        std::size_t lo = 0, hi = nodes.size() - 1;
        while (hi - lo > 1) {
            const std::size_t mid = (lo + hi) / 2;
            (nodes[mid].t <= t ? lo : hi) = mid;
        }
        const Node& n0 = nodes[lo];
        const Node& n1 = nodes[lo + 1];
        const double h = n1.t - n0.t;
        const double th = (t - n0.t) / h;
        const double h00 = (1 + 2 * th) * (1 - th) * (1 - th);
        const double h10 = th * (1 - th) * (1 - th);
        const double h01 = th * th * (3 - 2 * th);
        const double h11 = th * th * (th - 1);
        std::vector<Scalar> out(n0.y.size());
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = h00 * n0.y[i] + (h10 * h) * n0.dydt[i] + h01 * n1.y[i]
                   + (h11 * h) * n1.dydt[i];
        return out;
    }
};

namespace ode_detail {

// Dormand-Prince 5(4) coefficients.
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                 e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                 e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;

} // namespace ode_detail

/// Embedded adaptive Dormand-Prince 5(4) pair over [t0, t1], t1 > t0.
/// Per-step scaled error is kept at or below tol (used as both absolute and
/// relative weight). Throws std::runtime_error on step underflow or when the
/// state leaves the finite range.
template <class Scalar>
Trajectory<Scalar> integrate(const OdeSystem<Scalar>& system,
                             std::span<const Scalar> y0, double t0, double t1,
                             const IntegrateOptions& opts = {}) {
    using namespace ode_detail;
    if (!(t1 > t0))
        throw std::invalid_argument("integrate: need t1 > t0");
    if (!(opts.tol > 0.0))
        throw std::invalid_argument("integrate: tol must be positive");
    const std::size_t n = system.dimension;
    if (y0.size() != n)
        throw std::invalid_argument("integrate: state size mismatch");

    auto check_finite = [&](std::span<const Scalar> v) {
        for (const Scalar& s : v)
            if (!std::isfinite(std::abs(s)))
                throw std::runtime_error("integrate: non-finite state (diverging solution?)");
    };

    std::vector<Scalar> y(y0.begin(), y0.end());
    std::vector<Scalar> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ytmp(n), ynew(n);

    Trajectory<Scalar> traj;
    traj.tolerance = opts.tol;
    system.rhs(t0, y, k1);
    check_finite(k1);
    traj.nodes.push_back({t0, y, k1});

    const double span = t1 - t0;
    const double hmax = opts.max_step > 0.0 ? opts.max_step : span;
    double h;
    if (opts.fixed_step) {
        h = *opts.fixed_step;
        if (!(h > 0.0))
            throw std::invalid_argument("integrate: fixed step must be positive");
    } else if (opts.initial_step > 0.0) {
        h = opts.initial_step;
    } else {
        double fnorm = 0.0, ynorm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            fnorm = std::max(fnorm, std::abs(k1[i]));
            ynorm = std::max(ynorm, std::abs(y[i]));
        }
        h = 0.01 * (ynorm + opts.tol) / (fnorm + 1e-30);
        h = std::min(h, span / 10.0);
        h = std::max(h, 1e-8 * span);
    }
    h = std::min(h, hmax);

    double t = t0;
    const double hfloor = 1e4 * std::numeric_limits<double>::epsilon();
    for (std::size_t step = 0; step < opts.max_steps; ++step) {
        if (t >= t1)
            break;
        bool last = false;
        if (t + h >= t1) {
            h = t1 - t;
            last = true;
        }

        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a21 * k1[i]);
        system.rhs(t + c2 * h, ytmp, k2);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        system.rhs(t + c3 * h, ytmp, k3);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        system.rhs(t + c4 * h, ytmp, k4);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        system.rhs(t + c5 * h, ytmp, k5);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i]
                                  + a65 * k5[i]);
        system.rhs(t + h, ytmp, k6);
        for (std::size_t i = 0; i < n; ++i)
            ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i]
                                  + b6 * k6[i]);
        system.rhs(t + h, ynew, k7); // FSAL stage
        check_finite(ynew);

        double err = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double ei = std::abs(h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i]
                                            + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]));
            const double sk = opts.tol + opts.tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            err += (ei / sk) * (ei / sk);
        }
        err = std::sqrt(err / static_cast<double>(n));

        if (opts.fixed_step || err <= 1.0) {
            t = last ? t1 : t + h;
            y.swap(ynew);
            k1.swap(k7);
            traj.nodes.push_back({t, y, k1});
            ++traj.accepted;
            if (!opts.fixed_step) {
                const double fac = std::clamp(0.9 * std::pow(err + 1e-300, -0.2), 0.2, 5.0);
                h = std::min(h * fac, hmax);
            }
        } else {
            ++traj.rejected;
            h *= std::clamp(0.9 * std::pow(err, -0.2), 0.2, 1.0);
        }
        if (!opts.fixed_step && h < hfloor * std::max(1.0, std::abs(t)))
            throw std::runtime_error("integrate: step size underflow (problem too stiff)");
    }
    if (t < t1)
        throw std::runtime_error("integrate: step budget exhausted");
    return traj;
}

template <class Scalar>
Trajectory<Scalar> integrate(const OdeSystem<Scalar>& system,
                             const std::vector<Scalar>& y0, double t0, double t1,
                             const IntegrateOptions& opts = {}) {
    return integrate(system, std::span<const Scalar>(y0), t0, t1, opts);
}

} // namespace logimath
