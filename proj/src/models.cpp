#include "logimath/models.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "logimath/quadrature.hpp"

namespace logimath {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

struct Validator {
    void operator()(const ClassicalParams& p) const {
        if (!(p.f0 > 0.0) || !(p.K > 0.0))
            throw std::invalid_argument("Classical: f0 and K must be positive");
    }
    void operator()(const NormalizedParams& p) const {
        if (!(p.mu > 0.0))
            throw std::invalid_argument("Normalized: mu must be positive");
    }
    void operator()(const TwoExponentialParams& p) const {
        if (p.c1 < 0.0 || p.c2 < 0.0)
            throw std::invalid_argument("TwoExponential: c1, c2 must be non-negative");
    }
    void operator()(const RichardsParams& p) const {
        if (!(p.n > 0.0))
            throw std::invalid_argument("Richards: n must be positive");
    }
    void operator()(const ForestryParams& p) const {
        if (!(p.n > 0.0))
            throw std::invalid_argument("Forestry: n must be positive");
    }
    void operator()(const CoshParams&) const {}
    void operator()(const LaguerreLogisticParams& p) const {
        if (!(p.mu > 0.0) || !(p.lambda > 0.0))
            throw std::invalid_argument("LaguerreLogistic: mu and lambda must be positive");
        if (!(p.nu > -1.0))
            throw std::invalid_argument("LaguerreLogistic: nu must exceed -1");
    }
    void operator()(const VariableRateParams& p) const {
        if (!p.r || !p.k)
            throw std::invalid_argument("VariableRate: rate functions must be set");
        if (!(p.f0 > 0.0))
            throw std::invalid_argument("VariableRate: f0 must be positive");
    }
};

struct Namer {
    std::string operator()(const ClassicalParams& p) const {
        return "classical(f0=" + num(p.f0) + ",r=" + num(p.r) + ",K=" + num(p.K) + ")";
    }
    std::string operator()(const NormalizedParams& p) const {
        return "normalized(mu=" + num(p.mu) + ",r=" + num(p.r) + ")";
    }
    std::string operator()(const TwoExponentialParams& p) const {
        return "two-exponential(mu=" + num(p.mu) + ",c1=" + num(p.c1) + ",r1=" + num(p.r1)
             + ",c2=" + num(p.c2) + ",r2=" + num(p.r2) + ")";
    }
    std::string operator()(const RichardsParams& p) const {
        return "richards(mu=" + num(p.mu) + ",r=" + num(p.r) + ",n=" + num(p.n) + ")";
    }
    std::string operator()(const ForestryParams& p) const {
        return "forestry(alpha=" + num(p.alpha) + ",lambda=" + num(p.lambda) + ",chi="
             + num(p.chi) + ",eta=" + num(p.eta) + ",k=" + num(p.k) + ",n=" + num(p.n) + ")";
    }
    std::string operator()(const CoshParams& p) const {
        return "cosh-lc(mu=" + num(p.mu) + ",r=" + num(p.r) + ")";
    }
    std::string operator()(const LaguerreLogisticParams& p) const {
        return std::string("laguerre(mu=") + num(p.mu) + ",lambda=" + num(p.lambda)
             + ",nu=" + num(p.nu) + (p.gamma_normalized ? ",normalized" : "") + ")";
    }
    std::string operator()(const VariableRateParams& p) const {
        return "variable-rate(f0=" + num(p.f0) + ")";
    }
};

} // namespace

LogisticModel::LogisticModel(ModelVariant v) : variant_(std::move(v)) {
    std::visit(Validator{}, variant_);
}

std::string LogisticModel::id() const {
    return std::visit(Namer{}, variant_);
}

namespace detail {

namespace {

Derivs classical_derivs(const ClassicalParams& p, double x, bool need_second) {
    const double beta = p.f0 / p.K;
    const double w = std::exp(-p.r * x);
    if (!std::isfinite(w))
        return {0.0, 0.0, 0.0}; // decaying tail of the sigmoid
    const double den = beta + (1.0 - beta) * w;
    if (!(den > 1e-300))
        throw std::domain_error("Classical: denominator vanished (f0 > K pole)");
    Derivs d;
    d.v = p.f0 / den;
    d.d1 = p.f0 * p.r * (1.0 - beta) * w / (den * den);
    if (need_second)
        d.d2 = p.f0 * p.r * p.r * (1.0 - beta) * w * ((1.0 - beta) * w - beta)
             / (den * den * den);
    return d;
}

Derivs normalized_derivs(const NormalizedParams& p, double x, bool need_second) {
    const double w = std::exp(-p.r * x);
    if (!std::isfinite(w))
        return {0.0, 0.0, 0.0};
    const double den = 1.0 + p.mu * w;
    Derivs d;
    d.v = 1.0 / den;
    d.d1 = p.mu * p.r * w / (den * den);
    if (need_second)
        d.d2 = p.mu * p.r * p.r * w * (p.mu * w - 1.0) / (den * den * den);
    return d;
}

Derivs two_exp_derivs(const TwoExponentialParams& p, double x, bool need_second) {
    const double w1 = std::exp(-p.r1 * x);
    const double w2 = std::exp(-p.r2 * x);
    const double P = p.c1 * w1 + p.c2 * w2;
    if (!std::isfinite(P))
        return {0.0, 0.0, 0.0};
    const double den = 1.0 + p.mu * P;
    if (!(den > 1e-300))
        throw std::domain_error("TwoExponential: denominator vanished");
    const double Pd = -(p.c1 * p.r1 * w1 + p.c2 * p.r2 * w2);
    Derivs d;
    d.v = 1.0 / den;
    d.d1 = -p.mu * Pd / (den * den);
    if (need_second) {
        const double Pdd = p.c1 * p.r1 * p.r1 * w1 + p.c2 * p.r2 * p.r2 * w2;
        d.d2 = -p.mu * Pdd / (den * den) + 2.0 * p.mu * p.mu * Pd * Pd / (den * den * den);
    }
    return d;
}

Derivs richards_derivs(const RichardsParams& p, double x, bool need_second) {
    const double w = std::exp(-p.n * p.r * x);
    if (!std::isfinite(w))
        return {0.0, 0.0, 0.0};
    const double base = 1.0 + p.mu * w;
    if (!(base > 0.0))
        throw std::domain_error("Richards: fractional power of non-positive base");
    Derivs d;
    d.v = std::pow(base, -1.0 / p.n);
    d.d1 = p.r * p.mu * w * std::pow(base, -1.0 / p.n - 1.0);
    if (need_second)
        d.d2 = p.r * p.r * p.mu * w * std::pow(base, -1.0 / p.n - 2.0) * (p.mu * w - p.n);
    return d;
}

Derivs forestry_derivs(const ForestryParams& p, double x, bool need_second) {
    const double g = p.eta * std::exp(-p.k * x);
    if (!std::isfinite(g))
        return {p.alpha, 0.0, 0.0};
    const double W = p.chi + g;
    if (!(W > 0.0))
        throw std::domain_error("Forestry: chi + eta e^(-kx) must stay positive");
    const double ratio = p.lambda / W;
    if (!(ratio > 0.0))
        throw std::domain_error("Forestry: fractional power of non-positive base");
    const double s = std::pow(ratio, 1.0 / p.n);
    Derivs d;
    d.v = p.alpha + s;
    d.d1 = (p.k / p.n) * s * g / W;
    if (need_second)
        d.d2 = (p.k * p.k / p.n) * s * g * (g / p.n - p.chi) / (W * W);
    return d;
}

Derivs cosh_derivs(const CoshParams& p, double x, bool need_second) {
    const double ch = std::cosh(p.r * x);
    if (!std::isfinite(ch))
        return {0.0, 0.0, 0.0};
    const double den = 1.0 + p.mu * ch;
    if (!(std::abs(den) > 1e-300))
        throw std::domain_error("CoshLC: denominator vanished");
    const double sh = std::sinh(p.r * x);
    Derivs d;
    d.v = 1.0 / den;
    d.d1 = -p.mu * p.r * sh / (den * den);
    if (need_second)
        d.d2 = -p.mu * p.r * p.r * ch / (den * den)
             + 2.0 * p.mu * p.mu * p.r * p.r * sh * sh / (den * den * den);
    return d;
}

Derivs laguerre_derivs(const LaguerreLogisticParams& p, double x,
                       const SeriesPolicy& policy, bool need_second) {
    const double c = p.gamma_normalized ? gamma_real(p.nu + 1.0, policy) : 1.0;
    const double e = c * tricomi_series(p.nu, p.lambda * x, policy);
    const double den = e + p.mu;
    if (!(std::abs(den) > 1e-300))
        throw std::domain_error("LaguerreLogistic: denominator vanished");
    const double e1 = c * p.lambda * tricomi_series(p.nu + 1.0, p.lambda * x, policy);
    Derivs d;
    d.v = e / den;
    d.d1 = p.mu * e1 / (den * den);
    if (need_second) {
        const double e2 = c * p.lambda * p.lambda * tricomi_series(p.nu + 2.0, p.lambda * x, policy);
        d.d2 = p.mu * (e2 * den - 2.0 * e1 * e1) / (den * den * den);
    }
    return d;
}

Derivs variable_rate_derivs(const VariableRateParams& p, double x, bool need_second) {
    Derivs d;
    d.v = variable_rate_solution(p.r, p.k, p.f0, x, p.quad_tol);
    d.d1 = p.r(x) * d.v - p.k(x) * d.v * d.v;
    if (need_second) {
        auto slope = [&](double t) {
            const double v = variable_rate_solution(p.r, p.k, p.f0, t, p.quad_tol);
            return p.r(t) * v - p.k(t) * v * v;
        };
        d.d2 = numeric_derivative(slope, x, 1).value;
    }
    return d;
}

} // namespace

Derivs model_derivs(const LogisticModel& model, double x, const SeriesPolicy& policy,
                    DerivativeMode mode, bool need_second) {
    if (mode == DerivativeMode::FiniteDifference) {
        Derivs d;
        auto f = [&](double t) { return evaluate(model, t, policy); };
        d.v = f(x);
        d.d1 = numeric_derivative(f, x, 1).value;
        if (need_second)
            d.d2 = numeric_derivative(f, x, 2).value;
        return d;
    }
    return std::visit(
        [&](const auto& p) -> Derivs {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ClassicalParams>)
                return classical_derivs(p, x, need_second);
            else if constexpr (std::is_same_v<T, NormalizedParams>)
                return normalized_derivs(p, x, need_second);
            else if constexpr (std::is_same_v<T, TwoExponentialParams>)
                return two_exp_derivs(p, x, need_second);
            else if constexpr (std::is_same_v<T, RichardsParams>)
                return richards_derivs(p, x, need_second);
            else if constexpr (std::is_same_v<T, ForestryParams>)
                return forestry_derivs(p, x, need_second);
            else if constexpr (std::is_same_v<T, CoshParams>)
                return cosh_derivs(p, x, need_second);
            else if constexpr (std::is_same_v<T, LaguerreLogisticParams>)
                return laguerre_derivs(p, x, policy, need_second);
            else
                return variable_rate_derivs(p, x, need_second);
        },
        model.variant());
}

} // namespace detail

double evaluate(const LogisticModel& model, double x, const SeriesPolicy& policy) {
    return detail::model_derivs(model, x, policy, DerivativeMode::Analytic, false).v;
}

double derivative(const LogisticModel& model, double x, const SeriesPolicy& policy) {
    return detail::model_derivs(model, x, policy, DerivativeMode::Analytic, false).d1;
}

double second_derivative(const LogisticModel& model, double x, const SeriesPolicy& policy) {
    return detail::model_derivs(model, x, policy, DerivativeMode::Analytic, true).d2;
}

namespace {

struct AsymptoteVisitor {
    Asymptotes operator()(const ClassicalParams& p) const {
        if (p.r > 0.0)
            return {Limit::finite(0.0), Limit::finite(p.K)};
        if (p.r < 0.0)
            return {Limit::finite(p.K), Limit::finite(0.0)};
        return {Limit::finite(p.f0), Limit::finite(p.f0)};
    }
    Asymptotes operator()(const NormalizedParams& p) const {
        if (p.r > 0.0)
            return {Limit::finite(0.0), Limit::finite(1.0)};
        if (p.r < 0.0)
            return {Limit::finite(1.0), Limit::finite(0.0)};
        const double c = 1.0 / (1.0 + p.mu);
        return {Limit::finite(c), Limit::finite(c)};
    }
    Asymptotes operator()(const TwoExponentialParams& p) const {
        auto side = [&](int direction) -> Limit {
            // direction +1: x -> +inf, -1: x -> -inf
            double constant_part = 0.0;
            bool blows_up = false;
            auto account = [&](double c, double r) {
                if (c == 0.0)
                    return;
                if (r == 0.0)
                    constant_part += c;
                else if ((direction > 0 && r < 0.0) || (direction < 0 && r > 0.0))
                    blows_up = true;
            };
            account(p.c1, p.r1);
            account(p.c2, p.r2);
            if (blows_up)
                return Limit::finite(0.0);
            const double den = 1.0 + p.mu * constant_part;
            if (den == 0.0)
                return Limit::divergent();
            return Limit::finite(1.0 / den);
        };
        return {side(-1), side(+1)};
    }
    Asymptotes operator()(const RichardsParams& p) const {
        if (p.mu < 0.0)
            return {Limit::undefined(), Limit::undefined()};
        if (p.r > 0.0)
            return {Limit::finite(0.0), Limit::finite(1.0)};
        if (p.r < 0.0)
            return {Limit::finite(1.0), Limit::finite(0.0)};
        const double c = std::pow(1.0 + p.mu, -1.0 / p.n);
        return {Limit::finite(c), Limit::finite(c)};
    }
    Asymptotes operator()(const ForestryParams& p) const {
        auto decayed = [&]() -> Limit { // e^(-kx) term gone
            if (!(p.chi > 0.0) || !(p.lambda / p.chi > 0.0))
                return Limit::undefined();
            return Limit::finite(p.alpha + std::pow(p.lambda / p.chi, 1.0 / p.n));
        };
        auto saturated = [&]() -> Limit { // e^(-kx) term dominant
            if (p.eta > 0.0)
                return Limit::finite(p.alpha);
            return Limit::undefined();
        };
        if (p.k > 0.0)
            return {saturated(), decayed()};
        if (p.k < 0.0)
            return {decayed(), saturated()};
        return {decayed(), decayed()};
    }
    Asymptotes operator()(const CoshParams& p) const {
        if (p.r == 0.0 || p.mu == 0.0) {
            const double c = 1.0 / (1.0 + p.mu);
            return {Limit::finite(c), Limit::finite(c)};
        }
        return {Limit::finite(0.0), Limit::finite(0.0)};
    }
    Asymptotes operator()(const LaguerreLogisticParams& p) const {
        // e_nu grows without bound for positive arguments and oscillates
        // through zero for negative ones.
        if (p.lambda > 0.0)
            return {Limit::undefined(), Limit::finite(1.0)};
        return {Limit::finite(1.0), Limit::undefined()};
    }
    Asymptotes operator()(const VariableRateParams&) const {
        return {Limit::undefined(), Limit::undefined()};
    }
};

} // namespace

Asymptotes asymptotes(const LogisticModel& model) {
    return std::visit(AsymptoteVisitor{}, model.variant());
}

double two_exp_delta(double mu, double r1, double r2) {
    if (r1 == 0.0)
        throw std::domain_error("two_exp_delta: r1 must be non-zero");
    return -mu * (r2 - r1) / r1;
}

double variable_rate_solution(const std::function<double(double)>& r,
                              const std::function<double(double)>& k, double f0,
                              double x, double quad_tol) {
    if (!(f0 > 0.0))
        throw std::invalid_argument("variable_rate_solution: f0 must be positive");
    if (x == 0.0)
        return f0;
    CumulativeIntegral rate_integral(r, quad_tol * 1e-2);
    auto inner = [&](double t) { return std::exp(rate_integral(t)) * k(t); };
    const double loss = integrate_adaptive(inner, 0.0, x, quad_tol);
    const double growth = std::exp(rate_integral(x));
    const double den = 1.0 + f0 * loss;
    if (!(std::abs(den) > 1e-300))
        throw std::domain_error("variable_rate_solution: denominator vanished");
    return f0 * growth / den;
}

GoverningEquation governing_equation(const LogisticModel& model) {
    return std::visit(
        [](const auto& p) -> GoverningEquation {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ClassicalParams> || std::is_same_v<T, NormalizedParams>)
                return {"canonical", 1, false};
            else if constexpr (std::is_same_v<T, TwoExponentialParams>) {
                if (p.c1 == 1.0 && p.c2 == 1.0)
                    return {"two-exp", 1, false};
                return {"two-exp-second-order", 2, false};
            } else if constexpr (std::is_same_v<T, RichardsParams>)
                return {"richards", 1, false};
            else if constexpr (std::is_same_v<T, ForestryParams>)
                return {"forestry", 1, false};
            else if constexpr (std::is_same_v<T, CoshParams>)
                return {"cosh-lc", 2, false};
            else if constexpr (std::is_same_v<T, LaguerreLogisticParams>)
                return {p.nu == 0.0 ? "theorem-3.1" : "theorem-3.2", 2, true};
            else
                return {"canonical-variable", 1, false};
        },
        model.variant());
}

namespace {

double equation_residual(const std::string& eq, const LogisticModel& model, double x,
                         const detail::Derivs& d, double delta_band,
                         const std::optional<double>& delta_override) {
    auto check_band = [&](double v) {
        if (v < delta_band || v > 1.0 - delta_band)
            throw std::domain_error("governing_residual: grid point leaves the admissible band of Z");
    };
    if (eq == "canonical") {
        double r, K;
        if (model.holds<ClassicalParams>()) {
            r = model.get<ClassicalParams>().r;
            K = model.get<ClassicalParams>().K;
        } else {
            r = model.get<NormalizedParams>().r;
            K = 1.0;
        }
        return d.d1 - r * (1.0 - d.v / K) * d.v;
    }
    if (eq == "canonical-variable") {
        const auto& p = model.get<VariableRateParams>();
        return d.d1 - (p.r(x) * d.v - p.k(x) * d.v * d.v);
    }
    if (eq == "two-exp") {
        const auto& p = model.get<TwoExponentialParams>();
        if (!(p.c1 == 1.0 && p.c2 == 1.0))
            throw std::invalid_argument("two-exp equation requires c1 = c2 = 1");
        const double delta = delta_override ? *delta_override
                                            : two_exp_delta(p.mu, p.r1, p.r2);
        return d.d1 - p.r1 * (1.0 - (1.0 + delta * std::exp(-p.r2 * x)) * d.v) * d.v;
    }
    if (eq == "two-exp-second-order") {
        const auto& p = model.get<TwoExponentialParams>();
        check_band(d.v);
        const double f = d.d1 / d.v;
        return d.d2 + (p.r1 + p.r2) * d.d1 - 2.0 * f * d.d1
             - p.r1 * p.r2 * (1.0 - d.v) * d.v;
    }
    if (eq == "richards") {
        const auto& p = model.get<RichardsParams>();
        return d.d1 - p.r * (1.0 - std::pow(d.v, p.n)) * d.v;
    }
    if (eq == "forestry") {
        const auto& p = model.get<ForestryParams>();
        const double s = d.v - p.alpha;
        return d.d1 - (p.k / (p.n * p.lambda))
                          * (p.lambda - p.chi * std::pow(s, p.n)) * s;
    }
    if (eq == "cosh-lc") {
        const auto& p = model.get<CoshParams>();
        check_band(d.v);
        const double f = d.d1 / d.v;
        return d.d2 - 2.0 * f * d.d1 + p.r * p.r * (1.0 - d.v) * d.v;
    }
    if (eq == "theorem-3.1" || eq == "theorem-3.2") {
        const auto& p = model.get<LaguerreLogisticParams>();
        if (eq == "theorem-3.1" && p.nu != 0.0)
            throw std::invalid_argument("theorem-3.1 equation requires nu = 0");
        check_band(d.v);
        const double f = 2.0 * x * d.d1 / (1.0 - d.v);
        return (1.0 + p.nu) * d.d1 + x * d.d2 + f * d.d1
             - p.lambda * d.v * (1.0 - d.v);
    }
    throw std::invalid_argument("governing_residual: unknown equation '" + eq + "'");
}

bool equation_applies(const std::string& eq, const LogisticModel& m) {
    if (eq == "canonical")
        return m.holds<ClassicalParams>() || m.holds<NormalizedParams>();
    if (eq == "canonical-variable")
        return m.holds<VariableRateParams>();
    if (eq == "two-exp" || eq == "two-exp-second-order")
        return m.holds<TwoExponentialParams>();
    if (eq == "richards")
        return m.holds<RichardsParams>();
    if (eq == "forestry")
        return m.holds<ForestryParams>();
    if (eq == "cosh-lc")
        return m.holds<CoshParams>();
    if (eq == "theorem-3.1" || eq == "theorem-3.2")
        return m.holds<LaguerreLogisticParams>();
    return false;
}

} // namespace

ResidualReport governing_residual(const LogisticModel& model, const Grid& grid,
                                  const SeriesPolicy& policy, const ResidualOptions& opts) {
    const GoverningEquation def = governing_equation(model);
    const std::string eq = opts.equation.value_or(def.id);
    if (!equation_applies(eq, model))
        throw std::invalid_argument("governing_residual: equation '" + eq
                                    + "' not applicable to " + model.id());
    const bool need_second = eq == "cosh-lc" || eq == "two-exp-second-order"
                           || eq == "theorem-3.1" || eq == "theorem-3.2";
    std::vector<double> res;
    res.reserve(grid.size());
    for (double x : grid.points()) {
        const detail::Derivs d = detail::model_derivs(model, x, policy, opts.mode, need_second);
        res.push_back(equation_residual(eq, model, x, d, opts.delta_band,
                                        opts.two_exp_delta_override));
    }
    const double tol = opts.tol.value_or(opts.mode == DerivativeMode::Analytic ? 1e-8 : 1e-5);
    ReportMeta meta;
    meta.model_id = model.id();
    meta.equation_id = eq;
    meta.mode = opts.mode;
    return assemble_report(std::move(res), tol, std::move(meta), grid.points());
}

LinearOde linearize(const LogisticModel& model) {
    LinearOde out;
    if (model.holds<ClassicalParams>()) {
        const auto p = model.get<ClassicalParams>();
        const double k = p.r / p.K;
        out.substitution = "E = 1/F";
        out.a = [r = p.r](double) { return -r; };
        out.b = [k](double) { return k; };
        out.initial = 1.0 / p.f0;
        out.forward = [](double F) { return 1.0 / F; };
        out.inverse = [](double E) { return 1.0 / E; };
        return out;
    }
    if (model.holds<NormalizedParams>()) {
        const auto p = model.get<NormalizedParams>();
        out.substitution = "E = 1/F";
        out.a = [r = p.r](double) { return -r; };
        out.b = [r = p.r](double) { return r; };
        out.initial = 1.0 + p.mu;
        out.forward = [](double F) { return 1.0 / F; };
        out.inverse = [](double E) { return 1.0 / E; };
        return out;
    }
    if (model.holds<RichardsParams>()) {
        const auto p = model.get<RichardsParams>();
        const double rate = p.n * p.r;
        out.substitution = "Y = F^(-n)";
        out.a = [rate](double) { return -rate; };
        out.b = [rate](double) { return rate; };
        out.initial = 1.0 + p.mu;
        out.forward = [n = p.n](double F) { return std::pow(F, -n); };
        out.inverse = [n = p.n](double Y) { return std::pow(Y, -1.0 / n); };
        out.decay_rate = rate;
        out.decay_rate_alt = p.r / p.n;
        return out;
    }
    if (model.holds<VariableRateParams>()) {
        const auto p = model.get<VariableRateParams>();
        out.substitution = "E = 1/F";
        out.a = [r = p.r](double x) { return -r(x); };
        out.b = p.k;
        out.initial = 1.0 / p.f0;
        out.forward = [](double F) { return 1.0 / F; };
        out.inverse = [](double E) { return 1.0 / E; };
        return out;
    }
    throw std::invalid_argument("linearize: unsupported variant " + model.id());
}

} // namespace logimath
