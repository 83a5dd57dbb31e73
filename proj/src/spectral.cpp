#include "eulerdamp/spectral.hpp"

#include "eulerdamp/fft.hpp"
#include "eulerdamp/parallel.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace eud {

using std::numbers::pi;

CutoffProfile CutoffProfile::sharp(double r0) {
    if (!(r0 > 0.0 && r0 < 0.5))
        throw std::invalid_argument("CutoffProfile: r0 must lie in (0, 1/2)");
    return {r0, r0, Kind::Sharp};
}

CutoffProfile CutoffProfile::smooth(double r0, double R0) {
    if (!(r0 > 0.0 && r0 < 0.5))
        throw std::invalid_argument("CutoffProfile: r0 must lie in (0, 1/2)");
    if (!(R0 > r0))
        throw std::invalid_argument("CutoffProfile: R0 must exceed r0");
    return {r0, R0, Kind::Smooth};
}

double CutoffProfile::chi1(double xi_mag) const {
    if (kind == Kind::Sharp) return xi_mag <= r0 ? 1.0 : 0.0;
    if (xi_mag <= r0) return 1.0;
    if (xi_mag >= R0) return 0.0;
    return 0.5 * (1.0 + std::cos(pi * (xi_mag - r0) / (R0 - r0)));
}

void CutoffProfile::require_resolved(const Grid& grid) const {
    if (!(outer() < grid.nyquist_xi()))
        throw std::invalid_argument(
            "CutoffProfile: transition edge " + std::to_string(outer()) +
            " is not resolved; needs R0 < pi*N/L = " + std::to_string(grid.nyquist_xi()));
}

SpectralField transform_forward(const RealField& f) {
    if (auto bad = f.first_non_finite(); bad != RealField::npos)
        throw std::invalid_argument(
            "transform_forward: non-finite sample at flat index " +
            std::to_string(bad % f.points()) + " of component " +
            std::to_string(bad / f.points()));

    const Grid& g = f.grid();
    const Fft& fft = Fft::get(g);
    SpectralField F(g, f.components());
    const double scale = g.cell_volume();

#pragma omp parallel for num_threads(thread_cap()) schedule(static)
    for (int c = 0; c < f.components(); ++c) {
        fft.forward(f.component(c), F.component(c));
        for (auto& z : F.component(c)) z *= scale;
    }
    return F;
}

RealField transform_inverse_unchecked(const SpectralField& F) {
    const Grid& g = F.grid();
    const Fft& fft = Fft::get(g);
    RealField f(g, F.components());
    const double scale = 1.0 / g.box_volume();

#pragma omp parallel for num_threads(thread_cap()) schedule(static)
    for (int c = 0; c < F.components(); ++c) {
        fft.backward(F.component(c), f.component(c));
        for (auto& x : f.component(c)) x *= scale;
    }
    return f;
}

RealField transform_inverse(const SpectralField& F) {
    const double defect = F.hermitian_defect();
    const double tol = 1e-9 * (1.0 + F.max_abs());
    if (defect > tol)
        throw std::invalid_argument(
            "transform_inverse: coefficients are not Hermitian-symmetric (defect " +
            std::to_string(defect) + ")");
    return transform_inverse_unchecked(F);
}

SpectralField derivative(const SpectralField& F, const std::array<int, 3>& alpha) {
    const Grid& g = F.grid();
    for (int a = g.dim; a < 3; ++a)
        if (alpha[a] != 0)
            throw std::invalid_argument("derivative: multi-index exceeds grid dimension");
    int order = 0;
    for (int a = 0; a < g.dim; ++a) {
        if (alpha[a] < 0) throw std::invalid_argument("derivative: negative multi-index");
        order += alpha[a];
    }
    if (order > 4) throw std::invalid_argument("derivative: total order must be <= 4");

    const int n = g.n;
    // per-axis multiplier tables (i 2 pi kappa)^alpha
    std::array<std::vector<std::complex<double>>, 3> mult;
    for (int a = 0; a < g.dim; ++a) {
        mult[a].resize(n);
        for (int i = 0; i < n; ++i) {
            std::complex<double> w{1.0, 0.0};
            const std::complex<double> ik{0.0, g.xi_axis(i)};
            for (int p = 0; p < alpha[a]; ++p) w *= ik;
            if (alpha[a] % 2 == 1 && g.signed_index(i) == -n / 2) w = 0.0;
            mult[a][i] = w;
        }
    }

    SpectralField D(g, F.components());
    const std::size_t pts = g.points();
    for (int c = 0; c < F.components(); ++c) {
        auto src = F.component(c);
        auto dst = D.component(c);
#pragma omp parallel for num_threads(thread_cap()) schedule(static)
        for (std::size_t flat = 0; flat < pts; ++flat) {
            auto ix = g.unflatten(flat);
            std::complex<double> w = mult[0][ix[0]];
            for (int a = 1; a < g.dim; ++a) w *= mult[a][ix[a]];
            dst[flat] = w * src[flat];
        }
    }
    return D;
}

namespace {

double xi_mag_at(const Grid& g, std::size_t flat) {
    auto ix = g.unflatten(flat);
    double s = 0.0;
    for (int a = 0; a < g.dim; ++a) {
        const double x = g.xi_axis(ix[a]);
        s += x * x;
    }
    return std::sqrt(s);
}

} // namespace

SpectralField project(const SpectralField& F, const CutoffProfile& cutoff, FrequencyPart part) {
    const Grid& g = F.grid();
    cutoff.require_resolved(g);

    SpectralField P(g, F.components());
    const std::size_t pts = g.points();
    for (int c = 0; c < F.components(); ++c) {
        auto src = F.component(c);
        auto dst = P.component(c);
#pragma omp parallel for num_threads(thread_cap()) schedule(static)
        for (std::size_t flat = 0; flat < pts; ++flat) {
            const double chi = cutoff.chi1(xi_mag_at(g, flat));
            const std::complex<double> low = chi * src[flat];
            dst[flat] = (part == FrequencyPart::Low) ? low : src[flat] - low;
        }
    }
    return P;
}

double sobolev_seminorm(const SpectralField& F, int k) {
    if (k < 0 || k > 3) throw std::invalid_argument("sobolev_seminorm: order must be 0..3");
    const Grid& g = F.grid();
    const std::size_t pts = g.points();
    std::vector<double> terms(pts, 0.0);
    for (int c = 0; c < F.components(); ++c) {
        auto src = F.component(c);
        for (std::size_t flat = 0; flat < pts; ++flat) {
            double w = 1.0;
            if (k > 0) {
                const double m = xi_mag_at(g, flat);
                for (int p = 0; p < k; ++p) w *= m * m;
            }
            terms[flat] += w * std::norm(src[flat]);
        }
    }
    return std::sqrt(pairwise_sum(terms) / g.box_volume());
}

double sobolev_norm(const SpectralField& F, int k) {
    double s = 0.0;
    for (int j = 0; j <= k; ++j) {
        const double v = sobolev_seminorm(F, j);
        s += v * v;
    }
    return std::sqrt(s);
}

namespace {

// gradient samples of every component, laid out grad[c*dim + axis]
std::vector<RealField> gradient_fields(const RealField& f) {
    SpectralField F = transform_forward(f);
    std::vector<RealField> out;
    out.reserve(static_cast<std::size_t>(f.components()) * f.grid().dim);
    for (int c = 0; c < f.components(); ++c) {
        SpectralField single(f.grid(), 1);
        auto src = F.component(c);
        std::copy(src.begin(), src.end(), single.component(0).begin());
        for (int a = 0; a < f.grid().dim; ++a) {
            std::array<int, 3> alpha{0, 0, 0};
            alpha[a] = 1;
            out.push_back(transform_inverse_unchecked(derivative(single, alpha)));
        }
    }
    return out;
}

} // namespace

double linf_gradient(const RealField& f) {
    auto grads = gradient_fields(f);
    const std::size_t pts = f.points();
    double worst = 0.0;
    for (std::size_t i = 0; i < pts; ++i) {
        double s = 0.0;
        for (const auto& gfield : grads) {
            const double v = gfield.at(0, i);
            s += v * v;
        }
        worst = std::max(worst, s);
    }
    return std::sqrt(worst);
}

double linf_divergence(const RealField& u) {
    const Grid& g = u.grid();
    if (u.components() != g.dim)
        throw std::invalid_argument("linf_divergence: component count must equal grid dimension");
    SpectralField U = transform_forward(u);
    SpectralField div(g, 1);
    for (int a = 0; a < g.dim; ++a) {
        SpectralField single(g, 1);
        auto src = U.component(a);
        std::copy(src.begin(), src.end(), single.component(0).begin());
        std::array<int, 3> alpha{0, 0, 0};
        alpha[a] = 1;
        SpectralField d = derivative(single, alpha);
        for (std::size_t i = 0; i < g.points(); ++i) div.at(0, i) += d.at(0, i);
    }
    RealField divu = transform_inverse_unchecked(div);
    return divu.max_abs();
}

double integral(const RealField& f, int component) {
    return pairwise_sum(f.component(component)) * f.grid().cell_volume();
}

} // namespace eud
