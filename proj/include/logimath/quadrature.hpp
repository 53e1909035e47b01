#pragma once

#include <functional>
#include <map>

namespace logimath {

/// Adaptive Gauss-Kronrod (7-15) quadrature of f over [a, b].
/// Throws std::runtime_error when the interval budget is exhausted before
/// the requested tolerance is met.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol = 1e-12);

/// Antiderivative t -> integral of f over [0, t] with caching of previously
/// computed endpoints, so repeated nearby queries extend the nearest cached
/// node instead of re-integrating from zero.
class CumulativeIntegral {
public:
    CumulativeIntegral(std::function<double(double)> f, double tol = 1e-12);

    double operator()(double t);

private:
    std::function<double(double)> f_;
    double tol_;
    std::map<double, double> cache_;
};

} // namespace logimath
