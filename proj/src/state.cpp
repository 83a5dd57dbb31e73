#include "eulerdamp/state.hpp"

#include "eulerdamp/spectral.hpp"

#include <cmath>

namespace eud {

RealField State::rho() const {
    RealField r(grid(), 1);
    auto src = a.component(0);
    auto dst = r.component(0);
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = rho_star * std::exp(src[i]);
    return r;
}

double State::linf() const {
    return std::max(a.max_abs(), u.max_abs());
}

SpectralState to_spectral(const State& s) {
    return SpectralState{transform_forward(s.a), transform_forward(s.u), s.t, s.rho_star};
}

State to_physical(const SpectralState& S) {
    return State{transform_inverse_unchecked(S.a), transform_inverse_unchecked(S.u), S.t, S.rho_star};
}

} // namespace eud
