#pragma once

#include "eulerdamp/field.hpp"

namespace eud {

// Evolved pair (a, u) with a = ln(rho) - ln(rho_star); rho = rho_star*e^a
// stays positive for any finite a.
struct State {
    RealField a;          // scalar
    RealField u;          // grid.dim components
    double t = 0.0;
    double rho_star = 1.0;

    static State zero(const Grid& grid, double rho_star = 1.0) {
        return State{RealField(grid, 1), RealField(grid, grid.dim), 0.0, rho_star};
    }

    const Grid& grid() const { return a.grid(); }
    RealField rho() const;
    double linf() const;   // max |.| over a and all u components
    bool finite() const { return a.finite() && u.finite(); }
};

// Same pair in Fourier coefficients.
struct SpectralState {
    SpectralField a;
    SpectralField u;
    double t = 0.0;
    double rho_star = 1.0;

    const Grid& grid() const { return a.grid(); }
};

SpectralState to_spectral(const State& s);
State to_physical(const SpectralState& S);

} // namespace eud
