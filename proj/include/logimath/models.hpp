#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "logimath/residual.hpp"
#include "logimath/special.hpp"

namespace logimath {

// ---------------------------------------------------------------------------
// Model families. Each struct carries the parameters of one closed form:
//
//   Classical        F(x) = f0 e^(rx) / (1 + (f0/K)(e^(rx) - 1))
//   Normalized       F(x) = 1 / (1 + mu e^(-rx))
//   TwoExponential   Z(x) = 1 / (1 + mu (c1 e^(-r1 x) + c2 e^(-r2 x)))
//   Richards         F(x) = (1 + mu e^(-n r x))^(-1/n)
//   Forestry         s(x) = alpha + (lambda / (chi + eta e^(-k x)))^(1/n)
//   CoshLC           Z(x) = 1 / (1 + mu cosh(r x))
//   LaguerreLogistic Z(x) = 1 / (1 + mu / e(x)), e = e_nu(lambda x), or
//                    Gamma(nu+1) e_nu(lambda x) when gamma_normalized is set
//                    (the convention that anchors Z(0) = 1/(1+mu) for all nu)
//   VariableRate     F(x) from the double-quadrature closed form of
//                    F' = r(x) F - k(x) F^2,  F(0) = f0
// ---------------------------------------------------------------------------

struct ClassicalParams {
    double f0, r, K;
};
struct NormalizedParams {
    double mu, r;
};
struct TwoExponentialParams {
    double mu, c1, r1, c2, r2;
};
struct RichardsParams {
    double mu, r, n;
};
struct ForestryParams {
    double alpha, lambda, chi, eta, k, n;
};
struct CoshParams {
    double mu, r;
};
struct LaguerreLogisticParams {
    double mu, lambda, nu = 0.0;
    bool gamma_normalized = false;
};
struct VariableRateParams {
    std::function<double(double)> r;
    std::function<double(double)> k;
    double f0 = 1.0;
    double quad_tol = 1e-12;
};

using ModelVariant =
    std::variant<ClassicalParams, NormalizedParams, TwoExponentialParams,
                 RichardsParams, ForestryParams, CoshParams,
                 LaguerreLogisticParams, VariableRateParams>;

/// Immutable parametric model; the constructor validates the family's
/// parameter invariants (positivity of rates/ceilings where required).
class LogisticModel {
public:
    explicit LogisticModel(ModelVariant v);

    const ModelVariant& variant() const { return variant_; }
    std::string id() const;

    template <class T> bool holds() const { return std::holds_alternative<T>(variant_); }
    template <class T> const T& get() const { return std::get<T>(variant_); }

private:
    ModelVariant variant_;
};

/// Closed-form value. Throws std::domain_error when a denominator vanishes
/// or a fractional power of a non-positive base is requested.
double evaluate(const LogisticModel& model, double x, const SeriesPolicy& policy = {});

/// Analytic first derivative of the closed form.
double derivative(const LogisticModel& model, double x, const SeriesPolicy& policy = {});

/// Analytic second derivative (finite differences for VariableRate).
double second_derivative(const LogisticModel& model, double x, const SeriesPolicy& policy = {});

struct Limit {
    enum class Kind { Finite, Divergent, Undefined } kind = Kind::Undefined;
    double value = 0.0;

    static Limit finite(double v) { return {Kind::Finite, v}; }
    static Limit divergent() { return {Kind::Divergent, 0.0}; }
    static Limit undefined() { return {Kind::Undefined, 0.0}; }
};

struct Asymptotes {
    Limit neg_inf;
    Limit pos_inf;
};

/// Limits at x -> -inf / +inf determined from the rate signs.
Asymptotes asymptotes(const LogisticModel& model);

/// Exponential-correction coefficient of the extended first-order equation
/// for the two-exponential family: delta = -mu (r2 - r1) / r1.
double two_exp_delta(double mu, double r1, double r2);

/// Closed form for variable growth rate r(x) and loss coefficient k(x):
///   F(x) = f0 R(x) / (1 + f0 * integral_0^x R(t) k(t) dt),  R = exp(int_0^x r).
/// Reduces to the Classical model for constant r and k = r/K.
double variable_rate_solution(const std::function<double(double)>& r,
                              const std::function<double(double)>& k, double f0,
                              double x, double quad_tol = 1e-12);

// ---------------------------------------------------------------------------
// Governing equations
// ---------------------------------------------------------------------------

struct GoverningEquation {
    std::string id;          // "canonical", "richards", "theorem-3.1", ...
    int order = 1;           // highest derivative appearing
    bool laguerre_type = false;
};

/// The governing equation attached to a model's family.
GoverningEquation governing_equation(const LogisticModel& model);

struct ResidualOptions {
    DerivativeMode mode = DerivativeMode::Analytic;
    std::optional<double> tol;              // default 1e-8 analytic, 1e-5 FD
    double delta_band = 1e-6;               // keep Z in [delta, 1-delta] where needed
    std::optional<std::string> equation;    // override the family default
    std::optional<double> two_exp_delta_override; // sensitivity probes
};

/// Per-point |LHS - RHS| of the model's governing equation over the grid.
/// Throws std::domain_error when the grid violates the singular band of the
/// logarithmic-derivative terms.
ResidualReport governing_residual(const LogisticModel& model, const Grid& grid,
                                  const SeriesPolicy& policy = {},
                                  const ResidualOptions& opts = {});

// ---------------------------------------------------------------------------
// Riccati linearization
// ---------------------------------------------------------------------------

/// Linear descriptor E'(x) = a(x) E(x) + b(x) obtained by substitution,
/// with the forward map F -> E and the inverse map E -> F.
struct LinearOde {
    std::string substitution;
    std::function<double(double)> a;
    std::function<double(double)> b;
    double initial = 0.0;                   // E at x = 0
    std::function<double(double)> forward;  // F -> E
    std::function<double(double)> inverse;  // E -> F
    double decay_rate = 0.0;                // Richards: n*r (verified by closure)
    double decay_rate_alt = 0.0;            // Richards: r/n (kept for reporting)
};

/// Supported for Classical, Normalized, Richards and VariableRate models;
/// throws std::invalid_argument otherwise.
LinearOde linearize(const LogisticModel& model);

namespace detail {

struct Derivs {
    double v = 0.0, d1 = 0.0, d2 = 0.0;
};

Derivs model_derivs(const LogisticModel& model, double x, const SeriesPolicy& policy,
                    DerivativeMode mode, bool need_second);

} // namespace detail

} // namespace logimath
