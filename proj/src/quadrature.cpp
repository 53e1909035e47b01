#include "logimath/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace logimath {

namespace {

// 15-point Kronrod extension of 7-point Gauss (QUADPACK dqk15 constants).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0,
};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469,
};

struct PanelResult {
    double kronrod;
    double err;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    double kron = kWgk[7] * f(c);
    double gauss = kWg[3] * f(c);
    for (int i = 0; i < 7; ++i) {
        const double dx = hw * kXgk[i];
        const double fsum = f(c - dx) + f(c + dx);
        kron += kWgk[i] * fsum;
        if (i % 2 == 1)
            gauss += kWg[i / 2] * fsum;
    }
    kron *= hw;
    gauss *= hw;
    return {kron, std::abs(kron - gauss)};
}

} // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol) {
    if (a == b)
        return 0.0;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    struct Panel {
        double a, b, value, err;
    };
    PanelResult whole = gk15(f, a, b);
    std::vector<Panel> panels{{a, b, whole.kronrod, whole.err}};
    const int max_panels = 2000;
    for (int iter = 0; iter < max_panels; ++iter) {
        double total = 0.0, err = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < panels.size(); ++i) {
            total += panels[i].value;
            err += panels[i].err;
            if (panels[i].err > panels[worst].err)
                worst = i;
        }
        if (err <= tol * std::max(1.0, std::abs(total)))
            return sign * total;
        const Panel p = panels[worst];
        const double mid = 0.5 * (p.a + p.b);
        PanelResult left = gk15(f, p.a, mid);
        PanelResult right = gk15(f, mid, p.b);
        panels[worst] = {p.a, mid, left.kronrod, left.err};
        panels.push_back({mid, p.b, right.kronrod, right.err});
    }
    throw std::runtime_error("integrate_adaptive: no convergence within panel budget");
}

CumulativeIntegral::CumulativeIntegral(std::function<double(double)> f, double tol)
    : f_(std::move(f)), tol_(tol) {
    cache_[0.0] = 0.0;
}

double CumulativeIntegral::operator()(double t) {
    if (t == 0.0)
        return 0.0;
    auto it = cache_.find(t);
    if (it != cache_.end())
        return it->second;
    // Nearest cached node between 0 and t (inclusive of 0).
    double base_t = 0.0, base_v = 0.0;
    if (t > 0.0) {
        auto ub = cache_.upper_bound(t);
        while (ub != cache_.begin()) {
            --ub;
            if (ub->first >= 0.0) {
                base_t = ub->first;
                base_v = ub->second;
                break;
            }
        }
    } else {
        auto lb = cache_.lower_bound(t);
        for (; lb != cache_.end(); ++lb) {
            if (lb->first <= 0.0) {
                base_t = lb->first;
                base_v = lb->second;
                break;
            }
        }
    }
    const double v = base_v + integrate_adaptive(f_, base_t, t, tol_);
    cache_[t] = v;
    return v;
}

} // namespace logimath
