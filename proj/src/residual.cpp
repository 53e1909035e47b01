#include "logimath/residual.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace logimath {

namespace {

void check_monotone_finite(const std::vector<double>& pts) {
    if (pts.size() < 3)
        throw std::invalid_argument("Grid: need at least 3 points");
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!std::isfinite(pts[i]))
            throw std::invalid_argument("Grid: non-finite abscissa");
        if (i > 0 && pts[i] <= pts[i - 1])
            throw std::invalid_argument("Grid: abscissas must be strictly increasing");
    }
}

} // namespace

Grid::Grid(std::vector<double> pts, std::optional<double> step)
    : points_(std::move(pts)), step_(step) {}

Grid Grid::uniform(double start, double end, std::size_t count) {
    if (count < 3)
        throw std::invalid_argument("Grid::uniform: need at least 3 points");
    if (!(end > start))
        throw std::invalid_argument("Grid::uniform: end must exceed start");
    std::vector<double> pts(count);
    const double h = (end - start) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i)
        pts[i] = start + h * static_cast<double>(i);
    pts.back() = end;
    check_monotone_finite(pts);
    return Grid(std::move(pts), h);
}

Grid Grid::from_points(std::vector<double> points) {
    check_monotone_finite(points);
    return Grid(std::move(points), std::nullopt);
}

std::string to_string(DerivativeMode mode) {
    return mode == DerivativeMode::Analytic ? "analytic" : "finite-difference";
}

ResidualReport assemble_report(std::vector<double> residuals, double tol,
                               ReportMeta meta, std::vector<double> abscissas) {
    if (residuals.empty())
        throw std::invalid_argument("assemble_report: empty residual list");
    ResidualReport rep;
    rep.meta = std::move(meta);
    rep.tolerance = tol;
    rep.residuals.reserve(residuals.size());
    double sumsq = 0.0;
    for (double r : residuals) {
        const double m = std::abs(r);
        rep.residuals.push_back(m);
        rep.max_norm = std::max(rep.max_norm, m);
        sumsq += m * m;
    }
    rep.l2_norm = std::sqrt(sumsq / static_cast<double>(rep.residuals.size()));
    rep.pass = rep.max_norm <= tol;
    rep.abscissas = std::move(abscissas);
    return rep;
}

double default_step(int order, double x) {
    const double scale = std::max(1.0, std::abs(x));
    return (order == 3 ? 1e-3 : 1e-4) * scale;
}

namespace {

double eval_checked(const std::function<double(double)>& f, double x) {
    const double v = f(x);
    if (!std::isfinite(v))
        throw std::domain_error("numeric_derivative: non-finite function value");
    return v;
}

} // namespace

double central_stencil(const std::function<double(double)>& f, double x,
                       int order, double h) {
    const double fm2 = eval_checked(f, x - 2 * h);
    const double fm1 = eval_checked(f, x - h);
    const double fp1 = eval_checked(f, x + h);
    const double fp2 = eval_checked(f, x + 2 * h);
    switch (order) {
    case 1:
        return (-fp2 + 8 * fp1 - 8 * fm1 + fm2) / (12 * h);
    case 2: {
        const double f0 = eval_checked(f, x);
        return (-fp2 + 16 * fp1 - 30 * f0 + 16 * fm1 - fm2) / (12 * h * h);
    }
    case 3:
        return (fp2 - 2 * fp1 + 2 * fm1 - fm2) / (2 * h * h * h);
    default:
        throw std::invalid_argument("central_stencil: order must be 1, 2 or 3");
    }
}

DerivResult numeric_derivative(const std::function<double(double)>& f, double x,
                               int order, double h) {
    const double floor = 32.0 * std::numeric_limits<double>::epsilon()
                       * std::max(1.0, std::abs(x));
    if (!(h > floor))
        throw std::domain_error("numeric_derivative: step underflow");
    const double coarse = central_stencil(f, x, order, h);
    const double fine = central_stencil(f, x, order, h / 2);
    const double p = (order == 3) ? 2.0 : 4.0;
    const double w = std::pow(2.0, p);
    DerivResult out;
    out.value = (w * fine - coarse) / (w - 1.0);
    out.error_estimate = std::abs(fine - coarse);
    return out;
}

DerivResult numeric_derivative(const std::function<double(double)>& f, double x,
                               int order) {
    return numeric_derivative(f, x, order, default_step(order, x));
}

} // namespace logimath
