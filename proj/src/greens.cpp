#include "eulerdamp/greens.hpp"

#include "eulerdamp/fitting.hpp"
#include "eulerdamp/parallel.hpp"

#include <cmath>
#include <stdexcept>

namespace eud {

namespace {

constexpr double kDegenerateTol = 1e-10; // on |1 - 4|xi|^2|
constexpr double kSeriesGuard = 1e-6;    // on |lambda3 - lambda4|

double sinhc(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 + x2 / 6.0 * (1.0 + x2 / 20.0);
    }
    return std::sinh(x) / x;
}

} // namespace

EigenPair eigenvalues(double xi_mag) {
    if (!(xi_mag >= 0.0) || !std::isfinite(xi_mag))
        throw std::invalid_argument("eigenvalues: |xi| must be finite and >= 0");

    const double disc = 1.0 - 4.0 * xi_mag * xi_mag;
    EigenPair p;
    if (std::abs(disc) < kDegenerateTol) {
        p.lambda3 = p.lambda4 = -0.5;
        p.regime = SpectralRegime::Degenerate;
    } else if (disc > 0.0) {
        const double s = std::sqrt(disc);
        p.lambda3 = -2.0 * xi_mag * xi_mag / (1.0 + s);
        p.lambda4 = -0.5 * (1.0 + s);
        p.regime = SpectralRegime::RealDistinct;
    } else {
        const double omega = 0.5 * std::sqrt(-disc);
        p.lambda3 = {-0.5, omega};
        p.lambda4 = {-0.5, -omega};
        p.regime = SpectralRegime::Complex;
    }
    return p;
}

SymbolEntry symbol_entries(double t, const EigenPair& pair) {
    if (!(t >= 0.0) || !std::isfinite(t))
        throw std::invalid_argument("symbol_entries: t must be finite and >= 0");

    SymbolEntry e;
    switch (pair.regime) {
    case SpectralRegime::Degenerate: {
        const double em = std::exp(-0.5 * t);
        e.phi = t * em;
        e.psi = (1.0 + 0.5 * t) * em;
        break;
    }
    case SpectralRegime::RealDistinct: {
        const double l3 = pair.lambda3.real();
        const double l4 = pair.lambda4.real();
        const double delta = l3 - l4;
        if (delta < kSeriesGuard) {
            // symmetric form about the mean -1/2, safe against cancellation
            const double em = std::exp(-0.5 * t);
            const double x = 0.5 * delta * t;
            e.phi = em * t * sinhc(x);
            e.psi = em * (0.5 * t * sinhc(x) + std::cosh(x));
        } else {
            const double e3 = std::exp(l3 * t);
            const double e4 = std::exp(l4 * t);
            e.phi = (e3 - e4) / delta;
            e.psi = (l3 * e4 - l4 * e3) / delta;
        }
        break;
    }
    case SpectralRegime::Complex: {
        const double omega = pair.lambda3.imag();
        const double em = std::exp(-0.5 * t);
        const double wt = omega * t;
        e.phi = em * std::sin(wt) / omega;
        e.psi = em * (0.5 * std::sin(wt) / omega + std::cos(wt));
        break;
    }
    }
    e.chi = e.psi - e.phi;
    return e;
}

SymbolEntry symbol_entries(double t, double xi_mag) {
    return symbol_entries(t, eigenvalues(xi_mag));
}

double divided_difference(double t, const EigenPair& pair) {
    if (!(t >= 0.0) || !std::isfinite(t))
        throw std::invalid_argument("divided_difference: t must be finite and >= 0");
    return symbol_entries(t, pair).phi;
}

GreenSymbol::GreenSymbol(double t, const Grid& grid)
    : grid_(grid), t_(t), exp_mt_(std::exp(-t)), entries_(grid.points()) {
    if (!(t >= 0.0) || !std::isfinite(t))
        throw std::invalid_argument("GreenSymbol: t must be finite and >= 0");

    const std::size_t pts = grid.points();
#pragma omp parallel for num_threads(thread_cap()) schedule(static)
    for (std::size_t flat = 0; flat < pts; ++flat) {
        auto ix = grid_.unflatten(flat);
        double s = 0.0;
        for (int a = 0; a < grid_.dim; ++a) {
            const double x = grid_.xi_axis(ix[a]);
            s += x * x;
        }
        entries_[flat] = symbol_entries(t, std::sqrt(s));
    }
}

double GreenSymbol::xi_component(std::size_t flat, int axis) const {
    return grid_.xi_axis(grid_.unflatten(flat)[axis]);
}

std::complex<double> GreenSymbol::g11(std::size_t flat) const {
    return entries_[flat].psi;
}

std::complex<double> GreenSymbol::g12(std::size_t flat, int j) const {
    return {0.0, -xi_component(flat, j) * entries_[flat].phi};
}

std::complex<double> GreenSymbol::g21(std::size_t flat, int j) const {
    return g12(flat, j);
}

std::complex<double> GreenSymbol::g22(std::size_t flat, int i, int j) const {
    double xi2 = 0.0;
    auto ix = grid_.unflatten(flat);
    for (int a = 0; a < grid_.dim; ++a) {
        const double x = grid_.xi_axis(ix[a]);
        xi2 += x * x;
    }
    const double diag = (i == j) ? exp_mt_ : 0.0;
    if (xi2 == 0.0) return diag; // tensor coefficient vanishes at xi = 0
    const double xi_i = grid_.xi_axis(ix[i]);
    const double xi_j = grid_.xi_axis(ix[j]);
    return diag + (entries_[flat].chi - exp_mt_) * xi_i * xi_j / xi2;
}

void GreenSymbol::apply(SpectralState& U) const {
    if (!(U.grid() == grid_))
        throw std::invalid_argument("GreenSymbol::apply: grid mismatch");

    const int d = grid_.dim;
    const std::size_t pts = grid_.points();
    auto a = U.a.component(0);

#pragma omp parallel for num_threads(thread_cap()) schedule(static)
    for (std::size_t flat = 0; flat < pts; ++flat) {
        auto ix = grid_.unflatten(flat);
        double xi[3] = {0, 0, 0};
        double xi2 = 0.0;
        for (int ax = 0; ax < d; ++ax) {
            xi[ax] = grid_.xi_axis(ix[ax]);
            xi2 += xi[ax] * xi[ax];
        }
        const SymbolEntry& e = entries_[flat];

        std::complex<double> ahat = a[flat];
        std::complex<double> uhat[3];
        std::complex<double> xdotu{0.0, 0.0};
        for (int c = 0; c < d; ++c) {
            uhat[c] = U.u.at(c, flat);
            xdotu += xi[c] * uhat[c];
        }

        const std::complex<double> i_unit{0.0, 1.0};
        a[flat] = e.psi * ahat - i_unit * e.phi * xdotu;

        const double long_coef = (xi2 == 0.0) ? 0.0 : (e.chi - exp_mt_) / xi2;
        for (int c = 0; c < d; ++c)
            U.u.at(c, flat) = -i_unit * xi[c] * e.phi * ahat
                            + exp_mt_ * uhat[c]
                            + long_coef * xi[c] * xdotu;
    }
    U.t += t_;
}

GreenSymbol assemble_symbol(double t, const Grid& grid) {
    return GreenSymbol(t, grid);
}

SpectralState apply_semigroup(double t, const SpectralState& U0) {
    SpectralState U = U0;
    GreenSymbol(t, U0.grid()).apply(U);
    return U;
}

const char* block_name(SymbolBlock b) {
    switch (b) {
    case SymbolBlock::G11: return "g11";
    case SymbolBlock::G12: return "g12";
    case SymbolBlock::G21: return "g21";
    case SymbolBlock::G22: return "g22";
    }
    return "?";
}

double expected_block_slope(SymbolBlock b, int k) {
    switch (b) {
    case SymbolBlock::G11: return -0.5 * k;
    case SymbolBlock::G12:
    case SymbolBlock::G21: return -0.5 * (k + 1);
    case SymbolBlock::G22: return -0.5 * (k + 2);
    }
    return 0.0;
}

MultiplierFit verify_multiplier_bound(SymbolBlock block, int k,
                                      const CutoffProfile& cutoff,
                                      const std::vector<double>& times) {
    if (times.size() < 8)
        throw std::invalid_argument("verify_multiplier_bound: need at least 8 time samples");
    for (double t : times)
        if (!(t >= 1.0))
            throw std::invalid_argument("verify_multiplier_bound: times must lie in [1, inf)");
    if (k < 0 || k > 3)
        throw std::invalid_argument("verify_multiplier_bound: derivative order must be 0..3");

    // dense radial sample of the sharp low band [0, r0]
    constexpr int kSamples = 8193;
    std::vector<EigenPair> pairs(kSamples);
    std::vector<double> mags(kSamples);
    for (int i = 0; i < kSamples; ++i) {
        mags[i] = cutoff.r0 * i / (kSamples - 1);
        pairs[i] = eigenvalues(mags[i]);
    }

    MultiplierFit fit;
    fit.block = block;
    fit.order = k;
    fit.expected = expected_block_slope(block, k);
    fit.exponential_identity_part = (block == SymbolBlock::G22);
    fit.times = times;
    fit.sups.resize(times.size());

#pragma omp parallel for num_threads(thread_cap()) schedule(static)
    for (std::size_t it = 0; it < times.size(); ++it) {
        const double t = times[it];
        const double emt = std::exp(-t);
        double sup = 0.0;
        for (int i = 0; i < kSamples; ++i) {
            const SymbolEntry e = symbol_entries(t, pairs[i]);
            double mag = 0.0;
            switch (block) {
            case SymbolBlock::G11: mag = std::abs(e.psi); break;
            case SymbolBlock::G12:
            case SymbolBlock::G21: mag = mags[i] * std::abs(e.phi); break;
            case SymbolBlock::G22: mag = std::abs(e.chi - emt); break; // tensor part
            }
            double w = 1.0;
            for (int p = 0; p < k; ++p) w *= mags[i];
            sup = std::max(sup, w * mag);
        }
        fit.sups[it] = sup;
    }

    std::vector<double> x(times.size()), y(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
        x[i] = std::log1p(times[i]);
        y[i] = std::log(fit.sups[i]);
    }
    const OlsLine line = ols_line(x, y);
    fit.slope = line.slope;
    fit.slope_stderr = line.slope_stderr;
    return fit;
}

} // namespace eud
