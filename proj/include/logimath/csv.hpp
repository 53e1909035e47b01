#pragma once

#include <complex>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "logimath/ode.hpp"
#include "logimath/pde.hpp"
#include "logimath/residual.hpp"

namespace logimath {

/// Shortest 17-significant-digit decimal form, locale independent, so equal
/// inputs always serialize to identical bytes.
std::string format_number(double v);

using CsvCell = std::optional<double>;
using CsvRow = std::vector<CsvCell>;

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<CsvRow>& rows);

/// Columns t,y0,... for real systems, t,re(y0),im(y0),... for complex ones.
void write_trajectory_csv(std::ostream& os, const Trajectory<double>& traj);
void write_trajectory_csv(std::ostream& os, const Trajectory<std::complex<double>>& traj);

/// Columns t,x,value; one block per slice.
void write_field_stack_csv(std::ostream& os, const std::vector<Field1D>& slices);

/// Columns x,residual (plus the complex maxima in the verdict line, not here).
void write_report_csv(std::ostream& os, const ResidualReport& report);

/// One-line machine-readable verdict: "PASS max=<v> l2=<v> tol=<v>".
std::string verdict_line(const ResidualReport& report);

} // namespace logimath
