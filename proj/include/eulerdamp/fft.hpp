#pragma once

#include "eulerdamp/grid.hpp"

#include <complex>
#include <span>

namespace eud {

// Serial real<->complex DFTs for one grid shape, plans cached per shape.
// Output of forward() is the plain DFT sum over the full wavenumber
// lattice (no normalization); backward() is the plain inverse sum, so
// backward(forward(f)) == N^d * f.  Transforms on distinct buffers may
// run concurrently; plan creation is internally locked.
class Fft {
public:
    static const Fft& get(const Grid& grid);

    void forward(std::span<const double> in, std::span<std::complex<double>> out) const;
    void backward(std::span<const std::complex<double>> in, std::span<double> out) const;

    Fft(const Fft&) = delete;
    Fft& operator=(const Fft&) = delete;

private:
    Fft(int dim, int n);
    ~Fft();

    int dim_;
    int n_;
    std::size_t points_;
    std::size_t half_points_;
    void* plan_r2c_ = nullptr;
    void* plan_c2r_ = nullptr;

    struct CacheEntry;
};

} // namespace eud
