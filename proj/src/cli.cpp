#include "logimath/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <stdexcept>

#include <CLI11.hpp>

#include "logimath/csv.hpp"
#include "logimath/fel.hpp"
#include "logimath/models.hpp"
#include "logimath/ode.hpp"
#include "logimath/pde.hpp"

namespace logimath::cli {

namespace {

double parse_double(const std::string& s, const std::string& context) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument(context + ": cannot parse number '" + s + "'");
    }
    if (pos != s.size())
        throw std::invalid_argument(context + ": trailing characters in number '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

Grid parse_grid(const std::string& spec) {
    const auto parts = split(spec, ':');
    if (parts.size() != 3)
        throw std::invalid_argument("--grid expects start:end:count, got '" + spec + "'");
    const double a = parse_double(parts[0], "--grid");
    const double b = parse_double(parts[1], "--grid");
    const double n = parse_double(parts[2], "--grid");
    if (n < 3 || n != std::floor(n))
        throw std::invalid_argument("--grid count must be an integer >= 3");
    return Grid::uniform(a, b, static_cast<std::size_t>(n));
}

std::pair<double, double> parse_span(const std::string& spec) {
    const auto parts = split(spec, ':');
    if (parts.size() != 2)
        throw std::invalid_argument("--span expects t0:t1, got '" + spec + "'");
    return {parse_double(parts[0], "--span"), parse_double(parts[1], "--span")};
}

std::vector<double> parse_times(const std::string& spec) {
    std::vector<double> out;
    for (const std::string& tok : split(spec, ','))
        out.push_back(parse_double(tok, "--times"));
    return out;
}

PolyInitialData parse_init(const std::string& spec) {
    if (spec.rfind("poly:", 0) != 0)
        throw std::invalid_argument("--init expects poly:c0,c1,..., got '" + spec + "'");
    PolyInitialData g;
    for (const std::string& tok : split(spec.substr(5), ','))
        g.coeffs.push_back(parse_double(tok, "--init"));
    if (g.coeffs.empty())
        throw std::invalid_argument("--init: no coefficients given");
    return g;
}

/// key=value list with hard errors for unknown keys: every consumer marks
/// what it used and finish() rejects leftovers.
class ParamMap {
public:
    explicit ParamMap(const std::string& spec) {
        if (spec.empty())
            return;
        for (const std::string& tok : split(spec, ',')) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos || eq == 0)
                throw std::invalid_argument("--params: expected key=value, got '" + tok + "'");
            const std::string key = tok.substr(0, eq);
            if (kv_.count(key))
                throw std::invalid_argument("--params: duplicate key '" + key + "'");
            kv_[key] = parse_double(tok.substr(eq + 1), "--params " + key);
        }
    }

    std::optional<double> optional(std::initializer_list<const char*> names) {
        for (const char* name : names) {
            auto it = kv_.find(name);
            if (it != kv_.end()) {
                used_.insert(name);
                return it->second;
            }
        }
        return std::nullopt;
    }

    double optional_or(std::initializer_list<const char*> names, double fallback) {
        const auto v = optional(names);
        return v ? *v : fallback;
    }

    double require(std::initializer_list<const char*> names) {
        const auto v = optional(names);
        if (!v)
            throw std::invalid_argument(std::string("--params: missing required key '")
                                        + *names.begin() + "'");
        return *v;
    }

    void finish(const std::string& context) const {
        for (const auto& [key, value] : kv_)
            if (!used_.count(key))
                throw std::invalid_argument("--params: unknown key '" + key + "' for " + context);
    }

private:
    std::map<std::string, double> kv_;
    std::set<std::string> used_;
};

struct BuiltModel {
    LogisticModel model;
    double scale = 1.0; // eval output multiplier (carrying-capacity form)
};

BuiltModel build_model(const std::string& name, ParamMap& pm) {
    if (name == "normalized")
        return {LogisticModel(NormalizedParams{pm.require({"mu"}), pm.require({"r"})})};
    if (name == "classical") {
        const double f0 = pm.require({"f0", "a"});
        const double r = pm.require({"r", "lambda"});
        const double K = pm.require({"K"});
        return {LogisticModel(ClassicalParams{f0, r, K})};
    }
    if (name == "two-exponential") {
        TwoExponentialParams p{};
        p.mu = pm.require({"mu"});
        p.r1 = pm.require({"r1"});
        p.r2 = pm.require({"r2"});
        p.c1 = pm.optional_or({"c1"}, 1.0);
        p.c2 = pm.optional_or({"c2"}, 1.0);
        return {LogisticModel(p)};
    }
    if (name == "richards")
        return {LogisticModel(RichardsParams{pm.require({"mu"}), pm.require({"r"}),
                                             pm.require({"n"})})};
    if (name == "forestry")
        return {LogisticModel(ForestryParams{pm.require({"alpha"}), pm.require({"lambda"}),
                                             pm.require({"chi"}), pm.require({"eta"}),
                                             pm.require({"k"}), pm.require({"n"})})};
    if (name == "cosh-lc")
        return {LogisticModel(CoshParams{pm.require({"mu"}), pm.require({"r"})})};
    if (name == "laguerre" || name == "laguerre-nu") {
        LaguerreLogisticParams p{};
        p.lambda = pm.require({"lambda"});
        p.nu = (name == "laguerre-nu") ? pm.require({"nu"}) : pm.optional_or({"nu"}, 0.0);
        p.gamma_normalized = name == "laguerre-nu";
        double scale = 1.0;
        if (const auto mu = pm.optional({"mu"})) {
            p.mu = *mu;
        } else {
            // Carrying-capacity form: F = K Z with mu = K/a - 1, F(0) = a.
            const double a = pm.require({"a", "f0"});
            const double K = pm.require({"K"});
            p.mu = K / a - 1.0;
            scale = K;
        }
        return {LogisticModel(p), scale};
    }
    throw std::invalid_argument("unknown model '" + name + "'");
}

double env_default_tol() {
    if (const char* env = std::getenv("LOGIMATH_DEFAULT_TOL")) {
        try {
            return parse_double(env, "LOGIMATH_DEFAULT_TOL");
        } catch (const std::exception&) {
            throw std::invalid_argument("LOGIMATH_DEFAULT_TOL is not a number");
        }
    }
    return 1e-6;
}

/// Routes CSV data to --out or to the fallback stream.
class Output {
public:
    Output(const std::string& path, std::ostream& fallback) : os_(&fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw std::invalid_argument("cannot open output file '" + path + "'");
            os_ = &file_;
        }
    }
    std::ostream& stream() { return *os_; }

private:
    std::ofstream file_;
    std::ostream* os_;
};

// ---------------------------------------------------------------------------

struct CommonFlags {
    std::string params;
    std::string grid;
    std::string out;
    bool to_stdout = false;
};

struct EvalFlags : CommonFlags {
    std::string model;
    std::string compare;
};

int run_eval(const EvalFlags& f, std::ostream& out, std::ostream& err) {
    if (f.model.empty() == f.compare.empty())
        throw std::invalid_argument("eval: give exactly one of --model or --compare");
    const Grid grid = parse_grid(f.grid);
    ParamMap pm(f.params);
    std::vector<std::string> names =
        f.compare.empty() ? std::vector<std::string>{f.model} : split(f.compare, ',');
    std::vector<BuiltModel> models;
    for (const std::string& name : names)
        models.push_back(build_model(name, pm));
    pm.finish(f.compare.empty() ? "model " + f.model : "comparison set");

    std::vector<std::string> header{"x"};
    if (f.compare.empty())
        header.push_back("value");
    else
        header.insert(header.end(), names.begin(), names.end());

    std::size_t skipped = 0;
    std::string first_error;
    std::vector<CsvRow> rows;
    rows.reserve(grid.size());
    for (double x : grid.points()) {
        CsvRow row{x};
        for (const BuiltModel& bm : models) {
            try {
                row.push_back(bm.scale * evaluate(bm.model, x));
            } catch (const std::domain_error& e) {
                row.push_back(std::nullopt);
                ++skipped;
                if (first_error.empty())
                    first_error = e.what();
            }
        }
        rows.push_back(std::move(row));
    }

    Output target(f.out, out);
    write_csv(target.stream(), header, rows);
    if (skipped > 0)
        err << "warning: " << skipped << " cell(s) skipped (" << first_error << ")\n";
    return 0;
}

struct ResidualFlags : CommonFlags {
    std::string equation;
    std::string model;
    std::string mode = "analytic";
    double tol = 0.0; // 0: mode/env default
    double delta = 1e-6;
    double nu = 0.0;
    double lambda = 1.0;
    double alpha = 1.0;
    double mu = 1.0;
    double g0 = 1.0;
    double tau_max = 10.0;
    double l0 = 1e-3;
    double lF = 1.0;
    double t = 0.5;
    double dt = 1e-4;
    double fd_step = 0.02;
    int branch = 1;
    bool paper_literal = false;
    std::string init = "poly:1,1";
    std::string source = "exact";
    std::string times = "0,0.5,1";
};

int report_and_exit(const ResidualReport& rep, const std::string& out_path,
                    std::ostream& out) {
    Output target(out_path, out);
    write_report_csv(target.stream(), rep);
    out << verdict_line(rep) << '\n';
    if (!rep.note.empty())
        out << "note: " << rep.note << '\n';
    if (rep.diagnostic)
        return 0;
    return rep.pass ? 0 : 1;
}

std::vector<Field1D> heat_slices(const ResidualFlags& f, const Grid& grid,
                                 const PolyInitialData& g,
                                 const std::vector<double>& times, std::ostream& err) {
    if (f.source == "exact") {
        std::vector<Field1D> slices;
        for (double t : times) {
            std::vector<double> v(grid.size());
            for (std::size_t j = 0; j < grid.size(); ++j)
                v[j] = laguerre_heat_poly(g, t, grid[j]);
            slices.emplace_back(grid, std::move(v), t);
        }
        return slices;
    }
    if (f.source == "fd") {
        std::vector<double> v0(grid.size());
        for (std::size_t j = 0; j < grid.size(); ++j)
            v0[j] = g.eval(grid[j]);
        HeatRun run = laguerre_heat_fd(Field1D(grid, std::move(v0), 0.0), times, f.dt);
        for (const std::string& w : run.warnings)
            err << "warning: " << w << '\n';
        return run.slices;
    }
    throw std::invalid_argument("--source must be 'exact' or 'fd'");
}

int run_residual(const ResidualFlags& f, std::ostream& out, std::ostream& err) {
    const double tol = f.tol > 0.0 ? f.tol : env_default_tol();
    const DerivativeMode mode = [&] {
        if (f.mode == "analytic")
            return DerivativeMode::Analytic;
        if (f.mode == "fd")
            return DerivativeMode::FiniteDifference;
        throw std::invalid_argument("--mode must be 'analytic' or 'fd'");
    }();

    std::string eq = f.equation;
    static const std::set<std::string> model_equations{
        "canonical", "canonical-variable", "two-exp", "two-exp-second-order",
        "richards",  "forestry",           "cosh-lc", "theorem-3.1", "theorem-3.2"};

    if (eq.empty() || model_equations.count(eq)) {
        if (f.model.empty())
            throw std::invalid_argument("residual: --model required for this equation");
        ParamMap pm(f.params);
        const BuiltModel bm = build_model(f.model, pm);
        pm.finish("model " + f.model);
        ResidualOptions opts;
        opts.mode = mode;
        if (f.tol > 0.0)
            opts.tol = f.tol;
        else if (std::getenv("LOGIMATH_DEFAULT_TOL"))
            opts.tol = tol;
        opts.delta_band = f.delta;
        if (!eq.empty())
            opts.equation = eq;
        return report_and_exit(governing_residual(bm.model, parse_grid(f.grid), {}, opts),
                               f.out, out);
    }
    if (eq == "eigen")
        return report_and_exit(
            eigen_residual(f.nu, f.lambda, parse_grid(f.grid), {}, mode, tol), f.out, out);
    if (eq == "korf")
        return report_and_exit(
            korf_residual(f.lambda, f.alpha, parse_grid(f.grid), {}, mode, tol), f.out, out);
    if (eq == "laguerre-burgers" || eq == "log-potential") {
        const Grid grid = parse_grid(f.grid);
        const PolyInitialData g = parse_init(f.init);
        const std::vector<double> times{f.t - f.dt, f.t, f.t + f.dt};
        std::vector<Field1D> F = heat_slices(f, grid, g, times, err);
        if (eq == "log-potential")
            return report_and_exit(log_potential_residual(F, f.dt, tol), f.out, out);
        std::vector<Field1D> u;
        u.reserve(F.size());
        for (const Field1D& slice : F)
            u.push_back(hopf_cole_u(slice));
        return report_and_exit(laguerre_burgers_residual(u, f.dt, tol), f.out, out);
    }
    if (eq == "fisher") {
        FisherParams p{f.mu, f.alpha, f.branch};
        const Grid grid = parse_grid(f.grid);
        const std::vector<double> times = parse_times(f.times);
        const FisherProfile main_profile =
            f.paper_literal ? FisherProfile::PaperLiteral : FisherProfile::Verified;
        const FisherProfile other_profile =
            f.paper_literal ? FisherProfile::Verified : FisherProfile::PaperLiteral;
        const ResidualReport main = fisher_residual(p, grid, times, main_profile, tol);
        const ResidualReport other = fisher_residual(p, grid, times, other_profile, tol);
        const int code = report_and_exit(main, f.out, out);
        out << (other_profile == FisherProfile::PaperLiteral ? "paper-literal: "
                                                             : "verified: ")
            << verdict_line(other) << '\n';
        return code;
    }
    if (eq == "fel-5.13") {
        FelParams p;
        p.nu = f.nu;
        p.g0 = f.g0;
        p.l0 = f.l0;
        p.lF = f.lF;
        const auto traj = fel_amplitude(p, f.tau_max, 1e-12);
        FelResidualOptions opts;
        opts.grid_step = f.fd_step;
        opts.tol = tol;
        const ResidualReport coarse = fel_nonlinear_residual(traj, p, opts);
        opts.grid_step = f.fd_step / 2.0;
        const ResidualReport fine = fel_nonlinear_residual(traj, p, opts);
        const double ratio = fine.max_norm > 0.0 ? coarse.max_norm / fine.max_norm : 0.0;
        const int code = report_and_exit(coarse, f.out, out);
        out << "refined(h/2): " << verdict_line(fine) << '\n';
        out << "refinement-ratio max(h)/max(h/2)=" << format_number(ratio)
            << (ratio >= 1.5 || fine.max_norm == 0.0
                    ? " (residual converges under refinement)"
                    : " (residual does NOT converge; equation and trajectory disagree)")
            << '\n';
        return code;
    }
    throw std::invalid_argument("unknown equation '" + eq + "'");
}

struct OdeFlags : CommonFlags {
    std::string model;
    std::string span = "0:10";
    double tol = 1e-10;
    bool linearized = false;
};

std::function<double(double, double)> first_order_rhs(const LogisticModel& m) {
    if (m.holds<ClassicalParams>()) {
        const auto p = m.get<ClassicalParams>();
        return [p](double, double y) { return p.r * (1.0 - y / p.K) * y; };
    }
    if (m.holds<NormalizedParams>()) {
        const auto p = m.get<NormalizedParams>();
        return [p](double, double y) { return p.r * (1.0 - y) * y; };
    }
    if (m.holds<RichardsParams>()) {
        const auto p = m.get<RichardsParams>();
        return [p](double, double y) { return p.r * (1.0 - std::pow(y, p.n)) * y; };
    }
    if (m.holds<TwoExponentialParams>()) {
        const auto p = m.get<TwoExponentialParams>();
        if (!(p.c1 == 1.0 && p.c2 == 1.0))
            throw std::invalid_argument("ode: two-exponential needs c1 = c2 = 1");
        const double delta = two_exp_delta(p.mu, p.r1, p.r2);
        return [p, delta](double x, double y) {
            return p.r1 * (1.0 - (1.0 + delta * std::exp(-p.r2 * x)) * y) * y;
        };
    }
    if (m.holds<ForestryParams>()) {
        const auto p = m.get<ForestryParams>();
        return [p](double, double y) {
            const double s = y - p.alpha;
            return (p.k / (p.n * p.lambda)) * (p.lambda - p.chi * std::pow(s, p.n)) * s;
        };
    }
    throw std::invalid_argument("ode: model " + m.id() + " has no first-order equation");
}

int run_ode(const OdeFlags& f, std::ostream& out, std::ostream&) {
    if (f.model.empty())
        throw std::invalid_argument("ode: --model is required");
    ParamMap pm(f.params);
    const BuiltModel bm = build_model(f.model, pm);
    pm.finish("model " + f.model);
    const auto [t0, t1] = parse_span(f.span);
    const double y0 = evaluate(bm.model, t0);

    OdeSystem<double> sys;
    sys.dimension = 1;
    IntegrateOptions opts;
    opts.tol = f.tol;
    Trajectory<double> traj;
    if (f.linearized) {
        const LinearOde lin = linearize(bm.model);
        sys.rhs = [&lin](double t, std::span<const double> y, std::span<double> dy) {
            dy[0] = lin.a(t) * y[0] + lin.b(t);
        };
        const std::vector<double> e0{lin.forward(y0)};
        traj = integrate(sys, e0, t0, t1, opts);
        for (auto& node : traj.nodes) {
            node.y[0] = lin.inverse(node.y[0]);
            node.dydt[0] = 0.0; // derivative no longer meaningful after mapping
        }
    } else {
        const auto rhs = first_order_rhs(bm.model);
        sys.rhs = [&rhs](double t, std::span<const double> y, std::span<double> dy) {
            dy[0] = rhs(t, y[0]);
        };
        traj = integrate(sys, std::vector<double>{y0}, t0, t1, opts);
    }
    Output target(f.out, out);
    write_trajectory_csv(target.stream(), traj);
    return 0;
}

struct PdeFlags : CommonFlags {
    std::string equation = "laguerre-heat";
    std::string init = "poly:0,1";
    std::string method = "exact";
    std::string times;
    double t = 0.5;
    double dt = 1e-3;
    double mu = 1.0;
    double alpha = 1.0;
    int branch = 1;
    bool paper_literal = false;
};

int run_pde(const PdeFlags& f, std::ostream& out, std::ostream& err) {
    const Grid grid = parse_grid(f.grid);
    const std::vector<double> times = f.times.empty() ? std::vector<double>{f.t}
                                                      : parse_times(f.times);
    std::vector<Field1D> slices;
    if (f.equation == "laguerre-heat") {
        const PolyInitialData g = parse_init(f.init);
        if (f.method == "exact") {
            for (double t : times) {
                std::vector<double> v(grid.size());
                for (std::size_t j = 0; j < grid.size(); ++j)
                    v[j] = laguerre_heat_poly(g, t, grid[j]);
                slices.emplace_back(grid, std::move(v), t);
            }
        } else if (f.method == "fd") {
            std::vector<double> v0(grid.size());
            for (std::size_t j = 0; j < grid.size(); ++j)
                v0[j] = g.eval(grid[j]);
            HeatRun run = laguerre_heat_fd(Field1D(grid, std::move(v0), 0.0), times, f.dt);
            for (const std::string& w : run.warnings)
                err << "warning: " << w << '\n';
            slices = std::move(run.slices);
        } else {
            throw std::invalid_argument("--method must be 'exact' or 'fd'");
        }
    } else if (f.equation == "fisher") {
        FisherParams p{f.mu, f.alpha, f.branch};
        const FisherProfile profile =
            f.paper_literal ? FisherProfile::PaperLiteral : FisherProfile::Verified;
        for (double t : times) {
            std::vector<double> v(grid.size());
            for (std::size_t j = 0; j < grid.size(); ++j)
                v[j] = fisher_wave(p, grid[j], t, profile);
            slices.emplace_back(grid, std::move(v), t);
        }
    } else {
        throw std::invalid_argument("pde: unknown equation '" + f.equation + "'");
    }
    Output target(f.out, out);
    write_field_stack_csv(target.stream(), slices);
    return 0;
}

struct FelFlags : CommonFlags {
    double nu = 0.0;
    double g0 = 1.0;
    double l0 = 1e-3;
    double lF = 1.0;
    double tau_max = 20.0;
    double tol = 1e-10;
    std::size_t samples = 501;
};

int run_fel(const FelFlags& f, std::ostream& out, std::ostream& err) {
    FelParams p;
    p.nu = f.nu;
    p.g0 = f.g0;
    p.l0 = f.l0;
    p.lF = f.lF;
    if (f.samples < 2)
        throw std::invalid_argument("fel: --samples must be >= 2");
    const auto traj = fel_amplitude(p, f.tau_max, f.tol);
    std::vector<CsvRow> rows;
    rows.reserve(f.samples);
    for (std::size_t i = 0; i < f.samples; ++i) {
        const double tau = f.tau_max * static_cast<double>(i)
                         / static_cast<double>(f.samples - 1);
        const Complex a = traj.sample(tau)[0];
        const Complex l = fel_field_value(a, p);
        rows.push_back(CsvRow{tau, a.real(), a.imag(), std::abs(l)});
    }
    Output target(f.out, out);
    write_csv(target.stream(), {"tau", "re(a)", "im(a)", "abs(l)"}, rows);
    const double rate = fel_gain_rate(p);
    err << "gain rate max Re(lambda) = " << format_number(rate)
        << ", gain length = " << format_number(std::pow(std::numbers::pi * p.g0, -1.0 / 3.0))
        << '\n';
    return 0;
}

void add_common(CLI::App* cmd, CommonFlags& f, bool with_grid = true) {
    cmd->add_option("--params", f.params, "model parameters as key=value[,key=value...]");
    if (with_grid)
        cmd->add_option("--grid", f.grid, "evaluation grid start:end:count");
    cmd->add_option("--out", f.out, "write CSV data to this file");
    cmd->add_flag("--stdout", f.to_stdout, "write CSV data to stdout (default when --out is absent)");
    cmd->set_config("--config", "", "plain key = value config file; flags override it");
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"generalized logistic models: evaluation, verification and simulation"};
    app.require_subcommand(1);

    EvalFlags ef;
    CLI::App* eval_cmd = app.add_subcommand("eval", "tabulate model values as CSV");
    add_common(eval_cmd, ef);
    eval_cmd->add_option("--model", ef.model, "model name");
    eval_cmd->add_option("--compare", ef.compare, "comma-separated model names, one column each");

    ResidualFlags rf;
    CLI::App* res_cmd = app.add_subcommand("residual", "verify a closed form against its equation");
    add_common(res_cmd, rf);
    res_cmd->add_option("--equation", rf.equation, "equation id (defaults to the model's own)");
    res_cmd->add_option("--model", rf.model, "model name for model-based equations");
    res_cmd->add_option("--mode", rf.mode, "derivative mode: analytic or fd");
    res_cmd->add_option("--tol", rf.tol, "pass/fail tolerance");
    res_cmd->add_option("--delta", rf.delta, "singular band half-width around Z in {0,1}");
    res_cmd->add_option("--nu", rf.nu, "order parameter");
    res_cmd->add_option("--lambda", rf.lambda, "scale/eigenvalue parameter");
    res_cmd->add_option("--alpha", rf.alpha, "stretching exponent / diffusivity");
    res_cmd->add_option("--mu", rf.mu, "reaction rate");
    res_cmd->add_option("--g0", rf.g0, "small-signal gain coefficient");
    res_cmd->add_option("--tau-max", rf.tau_max, "integration horizon");
    res_cmd->add_option("--l0", rf.l0, "initial field (real)");
    res_cmd->add_option("--lF", rf.lF, "saturation field (real)");
    res_cmd->add_option("--t", rf.t, "time of the central slice");
    res_cmd->add_option("--dt", rf.dt, "slice spacing / time step");
    res_cmd->add_option("--fd-step", rf.fd_step, "resampling step for the diagnostic residual");
    res_cmd->add_option("--branch", rf.branch, "traveling-wave branch (+1 or -1)");
    res_cmd->add_flag("--paper-literal", rf.paper_literal, "use the published 1/k^2 amplitude");
    res_cmd->add_option("--init", rf.init, "initial data poly:c0,c1,...");
    res_cmd->add_option("--source", rf.source, "slice source: exact or fd");
    res_cmd->add_option("--times", rf.times, "comma-separated sample times");

    OdeFlags of;
    CLI::App* ode_cmd = app.add_subcommand("ode", "integrate a model's growth equation");
    add_common(ode_cmd, of, false);
    ode_cmd->add_option("--model", of.model, "model name");
    ode_cmd->add_option("--span", of.span, "integration span t0:t1");
    ode_cmd->add_option("--tol", of.tol, "integrator tolerance");
    ode_cmd->add_flag("--linearized", of.linearized,
                      "integrate the linearized equation and map back");

    PdeFlags pf;
    CLI::App* pde_cmd = app.add_subcommand("pde", "evaluate or solve the field equations");
    add_common(pde_cmd, pf);
    pde_cmd->add_option("--equation", pf.equation, "laguerre-heat or fisher");
    pde_cmd->add_option("--init", pf.init, "initial data poly:c0,c1,...");
    pde_cmd->add_option("--method", pf.method, "exact (operational) or fd (Crank-Nicolson)");
    pde_cmd->add_option("--t", pf.t, "output time");
    pde_cmd->add_option("--times", pf.times, "comma-separated output times");
    pde_cmd->add_option("--dt", pf.dt, "time step for the fd method");
    pde_cmd->add_option("--mu", pf.mu, "reaction rate");
    pde_cmd->add_option("--alpha", pf.alpha, "diffusivity");
    pde_cmd->add_option("--branch", pf.branch, "traveling-wave branch (+1 or -1)");
    pde_cmd->add_flag("--paper-literal", pf.paper_literal, "use the published 1/k^2 amplitude");

    FelFlags ff;
    CLI::App* fel_cmd = app.add_subcommand("fel", "field-amplitude run with the saturating map");
    add_common(fel_cmd, ff, false);
    fel_cmd->add_option("--nu", ff.nu, "detuning");
    fel_cmd->add_option("--g0", ff.g0, "small-signal gain coefficient");
    fel_cmd->add_option("--l0", ff.l0, "initial field (real)");
    fel_cmd->add_option("--lF", ff.lF, "saturation field (real)");
    fel_cmd->add_option("--tau-max", ff.tau_max, "integration horizon");
    fel_cmd->add_option("--tol", ff.tol, "integrator tolerance");
    fel_cmd->add_option("--samples", ff.samples, "number of uniform output samples");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (eval_cmd->parsed())
            return run_eval(ef, out, err);
        if (res_cmd->parsed())
            return run_residual(rf, out, err);
        if (ode_cmd->parsed())
            return run_ode(of, out, err);
        if (pde_cmd->parsed())
            return run_pde(pf, out, err);
        if (fel_cmd->parsed())
            return run_fel(ff, out, err);
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "usage error: no subcommand given\n";
    return 2;
}

} // namespace logimath::cli
