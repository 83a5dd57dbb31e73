#pragma once

#include "eulerdamp/grid.hpp"

#include <complex>
#include <span>
#include <vector>

namespace eud {

// Scalar or vector-valued samples on the grid, component-major storage.
class RealField {
public:
    RealField() = default;
    RealField(const Grid& grid, int components, double fill = 0.0)
        : grid_(grid), comps_(components),
          v_(static_cast<std::size_t>(components) * grid.points(), fill) {}

    const Grid& grid() const { return grid_; }
    int components() const { return comps_; }
    std::size_t points() const { return grid_.points(); }

    double& at(int c, std::size_t flat) { return v_[c * points() + flat]; }
    double at(int c, std::size_t flat) const { return v_[c * points() + flat]; }

    std::span<double> component(int c) { return {v_.data() + c * points(), points()}; }
    std::span<const double> component(int c) const { return {v_.data() + c * points(), points()}; }

    std::span<double> data() { return v_; }
    std::span<const double> data() const { return v_; }

    // index of the first non-finite sample, or npos when all finite
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t first_non_finite() const;
    bool finite() const { return first_non_finite() == npos; }

    double max_abs() const;

    bool operator==(const RealField&) const = default;

private:
    Grid grid_;
    int comps_ = 0;
    std::vector<double> v_;
};

// Discrete Fourier coefficients on the full wavenumber lattice,
// component-major, same row-major slot order as RealField.
class SpectralField {
public:
    SpectralField() = default;
    SpectralField(const Grid& grid, int components)
        : grid_(grid), comps_(components),
          v_(static_cast<std::size_t>(components) * grid.points()) {}

    const Grid& grid() const { return grid_; }
    int components() const { return comps_; }
    std::size_t points() const { return grid_.points(); }

    std::complex<double>& at(int c, std::size_t flat) { return v_[c * points() + flat]; }
    const std::complex<double>& at(int c, std::size_t flat) const { return v_[c * points() + flat]; }

    std::span<std::complex<double>> component(int c) { return {v_.data() + c * points(), points()}; }
    std::span<const std::complex<double>> component(int c) const { return {v_.data() + c * points(), points()}; }

    std::span<std::complex<double>> data() { return v_; }
    std::span<const std::complex<double>> data() const { return v_; }

    double max_abs() const;

    // max |F(k) - conj(F(-k))| over the lattice, all components
    double hermitian_defect() const;

    bool operator==(const SpectralField&) const = default;

private:
    Grid grid_;
    int comps_ = 0;
    std::vector<std::complex<double>> v_;
};

} // namespace eud
