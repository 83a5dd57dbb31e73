#pragma once

#include <cstddef>
#include <span>

namespace eud {

// Worker cap for internal parallelism.  Reads the THREADS environment
// variable once; results of every operation are identical for any cap.
int thread_cap();

// Deterministic pairwise summation (fixed reduction tree, independent of
// thread count).
double pairwise_sum(std::span<const double> v);

} // namespace eud
