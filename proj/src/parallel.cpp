#include "eulerdamp/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace eud {

int thread_cap() {
    static const int cap = [] {
        if (const char* env = std::getenv("THREADS")) {
            int v = std::atoi(env);
            if (v >= 1) return std::min(v, 64);
        }
        unsigned hw = std::thread::hardware_concurrency();
        return static_cast<int>(std::clamp(hw, 1u, 8u));
    }();
    return cap;
}

namespace {

double pairwise_sum_rec(const double* v, std::size_t n) {
    if (n <= 64) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    std::size_t half = n / 2;
    return pairwise_sum_rec(v, half) + pairwise_sum_rec(v + half, n - half);
}

} // namespace

double pairwise_sum(std::span<const double> v) {
    return pairwise_sum_rec(v.data(), v.size());
}

} // namespace eud
