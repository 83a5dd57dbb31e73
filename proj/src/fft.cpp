#include "eulerdamp/fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>

namespace eud {

namespace {

std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct ScratchReal {
    double* p;
    explicit ScratchReal(std::size_t n) : p(fftw_alloc_real(n)) {}
    ~ScratchReal() { fftw_free(p); }
};
struct ScratchComplex {
    fftw_complex* p;
    explicit ScratchComplex(std::size_t n) : p(fftw_alloc_complex(n)) {}
    ~ScratchComplex() { fftw_free(p); }
};

} // namespace

Fft::Fft(int dim, int n) : dim_(dim), n_(n) {
    points_ = 1;
    for (int a = 0; a < dim; ++a) points_ *= static_cast<std::size_t>(n);
    half_points_ = points_ / n * (n / 2 + 1);

    int dims[3] = {n, n, n};
    ScratchReal r(points_);
    ScratchComplex c(half_points_);
    std::lock_guard lock(planner_mutex());
    // FFTW_ESTIMATE keeps plan selection reproducible across runs.
    plan_r2c_ = fftw_plan_dft_r2c(dim, dims, r.p, c.p, FFTW_ESTIMATE);
    plan_c2r_ = fftw_plan_dft_c2r(dim, dims, c.p, r.p, FFTW_ESTIMATE);
}

Fft::~Fft() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(plan_r2c_));
    fftw_destroy_plan(static_cast<fftw_plan>(plan_c2r_));
}

const Fft& Fft::get(const Grid& grid) {
    static std::mutex cache_mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<Fft>> cache;
    std::lock_guard lock(cache_mutex);
    auto& slot = cache[{grid.dim, grid.n}];
    if (!slot) slot.reset(new Fft(grid.dim, grid.n));
    return *slot;
}

void Fft::forward(std::span<const double> in, std::span<std::complex<double>> out) const {
    const int n = n_;
    const int nh = n / 2 + 1;
    const std::size_t rows = points_ / n;

    ScratchReal r(points_);
    ScratchComplex c(half_points_);
    for (std::size_t i = 0; i < points_; ++i) r.p[i] = in[i];
    fftw_execute_dft_r2c(static_cast<fftw_plan>(plan_r2c_), r.p, c.p);

    // expand half spectrum (last axis 0..n/2) to the full lattice
    const auto* half = reinterpret_cast<const std::complex<double>*>(c.p);
    for (std::size_t row = 0; row < rows; ++row) {
        // mirror of the row prefix: each axis index i -> (n-i) % n
        std::size_t rest = row, mrow = 0;
        std::size_t axes[2];
        for (int a = dim_ - 2; a >= 0; --a) {
            axes[a] = rest % n;
            rest /= n;
        }
        for (int a = 0; a < dim_ - 1; ++a)
            mrow = mrow * n + (n - axes[a]) % n;

        auto* dst = out.data() + row * n;
        const auto* src = half + row * nh;
        for (int i = 0; i < nh; ++i) dst[i] = src[i];
        const auto* msrc = half + mrow * nh;
        for (int i = nh; i < n; ++i) dst[i] = std::conj(msrc[n - i]);
    }

    // force exact realness on the self-conjugate modes
    std::size_t combos = std::size_t{1} << dim_;
    for (std::size_t bits = 0; bits < combos; ++bits) {
        std::size_t flat = 0;
        for (int a = 0; a < dim_; ++a)
            flat = flat * n + (((bits >> a) & 1) ? static_cast<std::size_t>(n / 2) : 0);
        out[flat] = std::complex<double>(out[flat].real(), 0.0);
    }
}

void Fft::backward(std::span<const std::complex<double>> in, std::span<double> out) const {
    const int n = n_;
    const int nh = n / 2 + 1;
    const std::size_t rows = points_ / n;

    ScratchComplex c(half_points_);
    ScratchReal r(points_);
    auto* half = reinterpret_cast<std::complex<double>*>(c.p);
    for (std::size_t row = 0; row < rows; ++row)
        for (int i = 0; i < nh; ++i) half[row * nh + i] = in[row * n + i];

    fftw_execute_dft_c2r(static_cast<fftw_plan>(plan_c2r_), c.p, r.p);
    for (std::size_t i = 0; i < points_; ++i) out[i] = r.p[i];
}

} // namespace eud
