#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace logimath {

/// Ordered 1-D sample abscissas, uniform or explicit.
/// Invariants: strictly increasing, finite, at least 3 points.
class Grid {
public:
    static Grid uniform(double start, double end, std::size_t count);
    static Grid from_points(std::vector<double> points);

    const std::vector<double>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    double operator[](std::size_t i) const { return points_[i]; }
    double front() const { return points_.front(); }
    double back() const { return points_.back(); }

    /// Uniform spacing, or nullopt for explicit point lists.
    std::optional<double> step() const { return step_; }

private:
    Grid(std::vector<double> pts, std::optional<double> step);

    std::vector<double> points_;
    std::optional<double> step_;
};

enum class DerivativeMode { Analytic, FiniteDifference };

std::string to_string(DerivativeMode mode);

struct ReportMeta {
    std::string model_id;
    std::string equation_id;
    DerivativeMode mode = DerivativeMode::Analytic;
};

/// Per-point |LHS - RHS| of a governing equation plus norms and verdict.
/// l2_norm is the root-mean-square over points, so tolerances do not
/// depend on the grid size.
struct ResidualReport {
    std::vector<double> abscissas;   // may be empty when points carry no location
    std::vector<double> residuals;   // magnitudes, >= 0
    double max_norm = 0.0;
    double l2_norm = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool diagnostic = false;         // diagnostic reports never gate a run
    double max_real = 0.0;           // set when the residual is complex-valued
    double max_imag = 0.0;
    ReportMeta meta;
    std::string note;

    std::string verdict() const { return diagnostic ? "DIAG" : (pass ? "PASS" : "FAIL"); }
};

/// Builds a report from signed or unsigned per-point residuals.
/// Throws std::invalid_argument on empty input.
ResidualReport assemble_report(std::vector<double> residuals, double tol,
                               ReportMeta meta = {},
                               std::vector<double> abscissas = {});

struct DerivResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

/// Shared step policy: 1e-4 * max(1,|x|) for orders 1-2, 1e-3 * max(1,|x|)
/// for order 3.
double default_step(int order, double x);

/// Raw central stencil: formal order 4 for derivative orders 1-2,
/// order 2 for derivative order 3.
double central_stencil(const std::function<double(double)>& f, double x,
                       int order, double h);

/// Central stencil plus one Richardson extrapolation level.
/// Throws std::domain_error on step underflow or non-finite samples.
DerivResult numeric_derivative(const std::function<double(double)>& f, double x,
                               int order, double h);
DerivResult numeric_derivative(const std::function<double(double)>& f, double x,
                               int order);

} // namespace logimath
