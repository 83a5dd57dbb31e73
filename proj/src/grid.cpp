#include "eulerdamp/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace eud {

Grid Grid::make(int dim, int n, double length) {
    if (dim < 1 || dim > 3)
        throw std::invalid_argument("Grid: dimension must be 1, 2 or 3, got " + std::to_string(dim));
    if (n < 4 || (n & (n - 1)) != 0)
        throw std::invalid_argument("Grid: N must be a power of two >= 4, got " + std::to_string(n));
    if (!(length > 0.0) || !std::isfinite(length))
        throw std::invalid_argument("Grid: box length must be positive and finite");
    return Grid{dim, n, length};
}

double Grid::max_resolved_xi() const {
    return std::sqrt(static_cast<double>(dim)) * nyquist_xi();
}

} // namespace eud
