// Independent oracles for the test and acceptance suites. These deliberately
// avoid the code paths of the library under test: the Bessel evaluations work
// from the Bessel argument directly, and the amplitude series is a hand-rolled
// power-series expansion.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace oracles {

/// I_0(y) from its defining series sum_m (y/2)^(2m) / (m!)^2.
inline double bessel_i0_series(double y) {
    const double q = 0.25 * y * y;
    double term = 1.0, sum = 1.0;
    for (int m = 1; m < 400; ++m) {
        term *= q / (static_cast<double>(m) * static_cast<double>(m));
        sum += term;
        if (term < 1e-17 * sum)
            break;
    }
    return sum;
}

/// I_0(z) from the integral representation (1/pi) int_0^pi e^(z cos t) dt,
/// evaluated with the trapezoidal rule (spectrally accurate on periodic
/// smooth integrands).
inline double bessel_i0_integral(double z) {
    const int n = 200;
    const double h = std::numbers::pi / n;
    double sum = 0.5 * (std::exp(z) + std::exp(-z));
    for (int j = 1; j < n; ++j)
        sum += std::exp(z * std::cos(j * h));
    return sum * h / std::numbers::pi;
}

/// Flat-start power series of a''' = i pi g0 a:
/// a(tau) = sum_m (i pi g0)^m tau^(3m) / (3m)!.
inline std::complex<double> fel_series_flat(double tau, double g0, int terms = 8) {
    const std::complex<double> c{0.0, std::numbers::pi * g0};
    std::complex<double> term{1.0, 0.0}, sum{1.0, 0.0};
    for (int m = 1; m <= terms; ++m) {
        const double k = 3.0 * m;
        term *= c * tau * tau * tau / (k * (k - 1.0) * (k - 2.0));
        sum += term;
    }
    return sum;
}

/// Minimal CSV reader for checking emitted data.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    double num(std::size_t row, std::size_t col) const {
        return std::stod(rows.at(row).at(col));
    }
    std::size_t column(const std::string& name) const {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name)
                return i;
        throw std::out_of_range("no column " + name);
    }
};

inline CsvTable parse_csv(const std::string& text) {
    CsvTable t;
    std::istringstream ss(text);
    std::string line;
    bool first = true;
    while (std::getline(ss, line)) {
        if (line.empty())
            continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ','))
            cells.push_back(cell);
        if (line.back() == ',')
            cells.push_back("");
        if (first) {
            t.header = cells;
            first = false;
        } else {
            t.rows.push_back(cells);
        }
    }
    return t;
}

} // namespace oracles
