#pragma once

#include "eulerdamp/field.hpp"

#include <array>
#include <string>

namespace eud {

// Low/high frequency splitting profile.  Frequencies are angular, i.e.
// measured in the same |xi| = 2*pi*|kappa| variable the symbol formulas
// use; r0 < 1/2 keeps the retained low band inside the real-eigenvalue
// regime of the linearized operator.
struct CutoffProfile {
    enum class Kind { Sharp, Smooth };

    double r0 = 0.25;
    double R0 = 0.45;
    Kind kind = Kind::Smooth;

    static CutoffProfile sharp(double r0);
    static CutoffProfile smooth(double r0, double R0);

    // transition weight, 1 on the low band, 0 on the high band
    double chi1(double xi_mag) const;

    // outer edge of the transition region (r0 for a sharp profile)
    double outer() const { return kind == Kind::Sharp ? r0 : R0; }

    // throws unless the whole transition region is resolved by the grid
    void require_resolved(const Grid& grid) const;
};

enum class FrequencyPart { Low, High };

// forward DFT scaled by h^d: coefficients approximate the continuum
// Fourier integral of box-supported data
SpectralField transform_forward(const RealField& f);

// inverse of transform_forward; validates Hermitian symmetry
RealField transform_inverse(const SpectralField& F);

// inverse without the symmetry check, for internal hot paths where the
// input is Hermitian by construction
RealField transform_inverse_unchecked(const SpectralField& F);

// multiply by prod_j (i 2 pi kappa_j)^{alpha_j}; the Nyquist plane of any
// axis with odd alpha_j is zeroed so real fields stay exactly real
SpectralField derivative(const SpectralField& F, const std::array<int, 3>& alpha);

// coefficient-wise low/high split; Low multiplies by chi1, High returns
// F minus the low part so the two parts always recombine to F exactly
SpectralField project(const SpectralField& F, const CutoffProfile& cutoff, FrequencyPart part);

// || |D|^k F ||_{L^2} via Parseval, deterministic fixed-order reduction
double sobolev_seminorm(const SpectralField& F, int k);

// full H^k norm: root-sum-square of seminorms of order 0..k
double sobolev_norm(const SpectralField& F, int k);

// max over grid points of the Euclidean norm of the spectral gradient,
// all components stacked
double linf_gradient(const RealField& f);

// max |div u| over grid points (u must have grid.dim components)
double linf_divergence(const RealField& u);

// h^d-weighted box quadrature of one component
double integral(const RealField& f, int component = 0);

} // namespace eud
