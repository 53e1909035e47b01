#include "logimath/csv.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

namespace logimath {

std::string format_number(double v) {
    std::array<char, 40> buf;
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                   std::chars_format::general, 17);
    if (res.ec != std::errc{})
        throw std::runtime_error("format_number: conversion failed");
    return std::string(buf.data(), res.ptr);
}

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<CsvRow>& rows) {
    for (std::size_t i = 0; i < header.size(); ++i)
        os << (i ? "," : "") << header[i];
    os << '\n';
    for (const CsvRow& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                os << ',';
            if (row[i])
                os << format_number(*row[i]);
        }
        os << '\n';
    }
}

void write_trajectory_csv(std::ostream& os, const Trajectory<double>& traj) {
    const std::size_t dim = traj.nodes.empty() ? 0 : traj.nodes.front().y.size();
    std::vector<std::string> header{"t"};
    for (std::size_t i = 0; i < dim; ++i)
        header.push_back("y" + std::to_string(i));
    std::vector<CsvRow> rows;
    rows.reserve(traj.nodes.size());
    for (const auto& node : traj.nodes) {
        CsvRow row{node.t};
        for (double v : node.y)
            row.push_back(v);
        rows.push_back(std::move(row));
    }
    write_csv(os, header, rows);
}

void write_trajectory_csv(std::ostream& os, const Trajectory<std::complex<double>>& traj) {
    const std::size_t dim = traj.nodes.empty() ? 0 : traj.nodes.front().y.size();
    std::vector<std::string> header{"t"};
    for (std::size_t i = 0; i < dim; ++i) {
        header.push_back("re(y" + std::to_string(i) + ")");
        header.push_back("im(y" + std::to_string(i) + ")");
    }
    std::vector<CsvRow> rows;
    rows.reserve(traj.nodes.size());
    for (const auto& node : traj.nodes) {
        CsvRow row{node.t};
        for (const auto& v : node.y) {
            row.push_back(v.real());
            row.push_back(v.imag());
        }
        rows.push_back(std::move(row));
    }
    write_csv(os, header, rows);
}

void write_field_stack_csv(std::ostream& os, const std::vector<Field1D>& slices) {
    std::vector<CsvRow> rows;
    for (const Field1D& slice : slices)
        for (std::size_t j = 0; j < slice.grid.size(); ++j)
            rows.push_back(CsvRow{slice.time, slice.grid[j], slice.values[j]});
    write_csv(os, {"t", "x", "value"}, rows);
}

void write_report_csv(std::ostream& os, const ResidualReport& report) {
    std::vector<CsvRow> rows;
    rows.reserve(report.residuals.size());
    const bool located = report.abscissas.size() == report.residuals.size();
    for (std::size_t i = 0; i < report.residuals.size(); ++i) {
        const double x = located ? report.abscissas[i] : static_cast<double>(i);
        rows.push_back(CsvRow{x, report.residuals[i]});
    }
    write_csv(os, {"x", "residual"}, rows);
}

std::string verdict_line(const ResidualReport& report) {
    std::string line = report.verdict() + " max=" + format_number(report.max_norm)
                     + " l2=" + format_number(report.l2_norm)
                     + " tol=" + format_number(report.tolerance);
    if (report.max_real != 0.0 || report.max_imag != 0.0)
        line += " max_re=" + format_number(report.max_real)
              + " max_im=" + format_number(report.max_imag);
    return line;
}

} // namespace logimath
