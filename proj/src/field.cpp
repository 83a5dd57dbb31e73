#include "eulerdamp/field.hpp"

#include <cmath>

namespace eud {

std::size_t RealField::first_non_finite() const {
    for (std::size_t i = 0; i < v_.size(); ++i)
        if (!std::isfinite(v_[i])) return i;
    return npos;
}

double RealField::max_abs() const {
    double m = 0.0;
    for (double x : v_) m = std::max(m, std::abs(x));
    return m;
}

double SpectralField::max_abs() const {
    double m = 0.0;
    for (const auto& z : v_) m = std::max(m, std::abs(z));
    return m;
}

double SpectralField::hermitian_defect() const {
    const int n = grid_.n;
    double worst = 0.0;
    for (int c = 0; c < comps_; ++c) {
        auto f = component(c);
        for (std::size_t flat = 0; flat < points(); ++flat) {
            auto ix = grid_.unflatten(flat);
            std::size_t mirror = 0;
            for (int a = 0; a < grid_.dim; ++a)
                mirror = mirror * n + static_cast<std::size_t>((n - ix[a]) % n);
            const auto d = f[flat] - std::conj(f[mirror]);
            worst = std::max(worst, std::abs(d));
        }
    }
    return worst;
}

} // namespace eud
