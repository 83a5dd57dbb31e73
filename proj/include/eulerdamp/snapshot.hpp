#pragma once

#include "eulerdamp/state.hpp"

#include <string>

namespace eud {

// Binary state snapshot.  Little-endian layout:
//   u32 d, u32 N, f64 L, f64 rho_star, f64 t,
//   then (1+d)*N^d f64 samples: a first, then each u component,
//   row-major lattice order.
void save_snapshot(const std::string& path, const State& s);
State load_snapshot(const std::string& path);

} // namespace eud
