#include "eulerdamp/scenarios.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace eud {

namespace {

// squared distance to the box center
double center_r2(const Grid& g, std::size_t flat) {
    auto ix = g.unflatten(flat);
    double r2 = 0.0;
    for (int a = 0; a < g.dim; ++a) {
        const double dx = g.x_axis(ix[a]) - 0.5 * g.length;
        r2 += dx * dx;
    }
    return r2;
}

void warn_tail(double beta, const Grid& g, std::vector<std::string>* warnings,
               const char* what) {
    // nearest boundary distance from the center is L/2 along an axis
    const double edge = std::exp(-beta * 0.25 * g.length * g.length);
    if (edge > 1e-12 && warnings) {
        std::ostringstream msg;
        msg << what << ": Gaussian tail at the box boundary is " << edge
            << " of its peak (wants < 1e-12); box too small for width "
            << 1.0 / std::sqrt(beta);
        warnings->push_back(msg.str());
    }
}

} // namespace

State make_remark1_ic(double eps, const Grid& grid, double rho_star,
                      std::vector<std::string>* warnings) {
    if (!(eps > 0.0 && eps < 1.0) && eps != 1.0)
        throw std::invalid_argument("make_remark1_ic: epsilon must lie in (0, 1]");
    if (!(rho_star > 0.0))
        throw std::invalid_argument("make_remark1_ic: rho_star must be positive");

    const double amp = std::pow(eps, 5.0 / 11.0);
    const double beta = std::pow(eps, 8.0 / 11.0);
    warn_tail(beta, grid, warnings, "remark1 ic");

    State s = State::zero(grid, rho_star);
    auto a = s.a.component(0);
    for (std::size_t i = 0; i < grid.points(); ++i) {
        const double gauss = amp * std::exp(-beta * center_r2(grid, i));
        a[i] = std::log1p(gauss / rho_star);
        for (int c = 0; c < grid.dim; ++c) s.u.at(c, i) = gauss;
    }
    return s;
}

State make_gaussian_ic(double amp_a, double amp_u, double width, const Grid& grid,
                       double rho_star, std::vector<std::string>* warnings) {
    if (!(width > 0.0))
        throw std::invalid_argument("make_gaussian_ic: width must be positive");
    const double beta = 1.0 / (width * width);
    warn_tail(beta, grid, warnings, "gaussian ic");

    State s = State::zero(grid, rho_star);
    auto a = s.a.component(0);
    for (std::size_t i = 0; i < grid.points(); ++i) {
        const double gauss = std::exp(-beta * center_r2(grid, i));
        a[i] = amp_a * gauss;
        for (int c = 0; c < grid.dim; ++c) s.u.at(c, i) = amp_u * gauss;
    }
    return s;
}

State make_single_mode_ic(const std::array<int, 3>& mode, double amp_a, double amp_u,
                          const Grid& grid, double rho_star) {
    for (int a = grid.dim; a < 3; ++a)
        if (mode[a] != 0)
            throw std::invalid_argument("make_single_mode_ic: mode index exceeds dimension");
    State s = State::zero(grid, rho_star);
    auto a = s.a.component(0);
    const double two_pi_over_l = 2.0 * std::numbers::pi / grid.length;
    for (std::size_t i = 0; i < grid.points(); ++i) {
        auto ix = grid.unflatten(i);
        double phase = 0.0;
        for (int ax = 0; ax < grid.dim; ++ax)
            phase += two_pi_over_l * mode[ax] * grid.x_axis(ix[ax]);
        const double c = std::cos(phase);
        a[i] = amp_a * c;
        for (int cc = 0; cc < grid.dim; ++cc) s.u.at(cc, i) = amp_u * c;
    }
    return s;
}

} // namespace eud
