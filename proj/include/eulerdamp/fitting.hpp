#pragma once

#include <span>

namespace eud {

struct OlsLine {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
    int n = 0;
};

// ordinary least squares y = slope*x + intercept
OlsLine ols_line(std::span<const double> x, std::span<const double> y);

} // namespace eud
