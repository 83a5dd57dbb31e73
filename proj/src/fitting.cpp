#include "eulerdamp/fitting.hpp"

#include <cmath>
#include <stdexcept>

namespace eud {

OlsLine ols_line(std::span<const double> x, std::span<const double> y) {
    const int n = static_cast<int>(x.size());
    if (n != static_cast<int>(y.size()) || n < 2)
        throw std::invalid_argument("ols_line: need >= 2 paired samples");
    double sx = 0, sy = 0;
    for (int i = 0; i < n; ++i) { sx += x[i]; sy += y[i]; }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("ols_line: degenerate abscissae");
    OlsLine fit;
    fit.n = n;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0;
    for (int i = 0; i < n; ++i) {
        const double r = y[i] - (fit.intercept + fit.slope * x[i]);
        ss_res += r * r;
    }
    fit.slope_stderr = (n > 2) ? std::sqrt(ss_res / (n - 2) / sxx) : 0.0;
    return fit;
}

} // namespace eud
