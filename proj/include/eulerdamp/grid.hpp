#pragma once

#include <array>
#include <cstddef>
#include <numbers>

namespace eud {

// Periodic computational box [0,L)^d with N points per axis and its dual
// wavenumber lattice.  Wavenumbers are kept in two closely related forms:
// kappa = j/L in cycles per unit length (the transform lattice) and the
// angular magnitude xi = 2*pi*kappa that enters every symbol formula.
struct Grid {
    int dim  = 0;      // 1, 2 or 3
    int n    = 0;      // points per axis, power of two, >= 4
    double length = 0; // box side L > 0

    static Grid make(int dim, int n, double length);

    double spacing() const { return length / n; }
    std::size_t points() const {
        std::size_t p = 1;
        for (int i = 0; i < dim; ++i) p *= static_cast<std::size_t>(n);
        return p;
    }
    double cell_volume() const {
        double v = 1.0;
        for (int i = 0; i < dim; ++i) v *= spacing();
        return v;
    }
    double box_volume() const {
        double v = 1.0;
        for (int i = 0; i < dim; ++i) v *= length;
        return v;
    }

    // signed lattice index of storage slot i: 0..N/2-1, then -N/2..-1
    int signed_index(int i) const { return i < n / 2 ? i : i - n; }

    // angular wavenumber of slot i along one axis
    double xi_axis(int i) const {
        return (2.0 * std::numbers::pi / length) * signed_index(i);
    }
    double kappa_axis(int i) const {
        return static_cast<double>(signed_index(i)) / length;
    }

    // physical coordinate of slot i along one axis
    double x_axis(int i) const { return spacing() * i; }

    // largest angular frequency representable per axis (Nyquist)
    double nyquist_xi() const {
        return std::numbers::pi * n / length;
    }
    // largest resolved |xi| over the lattice (cube corner)
    double max_resolved_xi() const;

    // decompose a flat row-major index into per-axis slots
    std::array<int, 3> unflatten(std::size_t flat) const {
        std::array<int, 3> ix{0, 0, 0};
        for (int a = dim - 1; a >= 0; --a) {
            ix[a] = static_cast<int>(flat % n);
            flat /= n;
        }
        return ix;
    }

    bool operator==(const Grid&) const = default;
};

} // namespace eud
