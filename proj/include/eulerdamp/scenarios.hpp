#pragma once

#include "eulerdamp/state.hpp"

#include <array>
#include <string>
#include <vector>

namespace eud {

// rho0 = rho_star + eps^{5/11} exp(-eps^{8/11}|x-c|^2), u0 the same
// Gaussian in every component, centered in the box.  The L^2 size of
// (rho0 - rho_star, u0) grows like eps^{-1/11} as eps decreases while
// third derivatives shrink.
State make_remark1_ic(double eps, const Grid& grid, double rho_star,
                      std::vector<std::string>* warnings = nullptr);

// a0 = amp_a exp(-|x-c|^2/width^2), u0 = amp_u times the same profile
State make_gaussian_ic(double amp_a, double amp_u, double width, const Grid& grid,
                       double rho_star, std::vector<std::string>* warnings = nullptr);

// a0 = amp_a cos(2 pi j.x/L), u0 components likewise with amp_u
State make_single_mode_ic(const std::array<int, 3>& mode, double amp_a, double amp_u,
                          const Grid& grid, double rho_star);

} // namespace eud
