#include "eulerdamp/dynamics.hpp"

#include "eulerdamp/fft.hpp"
#include "eulerdamp/parallel.hpp"
#include "eulerdamp/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace eud {

namespace {

constexpr double kBlowUpThreshold = 1e6;

// gradients of all components of F, laid out [c*dim + axis], batched
std::vector<RealField> gradients(const SpectralField& F) {
    const Grid& g = F.grid();
    const int d = g.dim;
    const int total = F.components() * d;
    std::vector<RealField> out(total);

#pragma omp parallel for num_threads(thread_cap()) schedule(static)
    for (int idx = 0; idx < total; ++idx) {
        const int c = idx / d;
        const int axis = idx % d;
        SpectralField single(g, 1);
        auto src = F.component(c);
        std::copy(src.begin(), src.end(), single.component(0).begin());
        std::array<int, 3> alpha{0, 0, 0};
        alpha[axis] = 1;
        out[idx] = transform_inverse_unchecked(derivative(single, alpha));
    }
    return out;
}

// 2/3-rule mask applied in place to every component
void truncate_top_third(SpectralField& F) {
    const Grid& g = F.grid();
    const int keep = g.n / 3;
    const std::size_t pts = g.points();
    for (int c = 0; c < F.components(); ++c) {
        auto v = F.component(c);
#pragma omp parallel for num_threads(thread_cap()) schedule(static)
        for (std::size_t flat = 0; flat < pts; ++flat) {
            auto ix = g.unflatten(flat);
            for (int a = 0; a < g.dim; ++a) {
                if (std::abs(g.signed_index(ix[a])) > keep) {
                    v[flat] = 0.0;
                    break;
                }
            }
        }
    }
}

RealField dealias_field(const RealField& f) {
    SpectralField F = transform_forward(f);
    truncate_top_third(F);
    return transform_inverse_unchecked(F);
}

struct RhsResult {
    RealField f1;
    RealField f2;
};

// f1 = -u.grad(a) [- div u], f2 = -u.grad(u) [- grad a - u]; quadratic
// products optionally pass through the 2/3 rule, linear terms never do
RhsResult rhs_eval(const State& s, bool dealias, bool advection, bool linear) {
    const Grid& g = s.grid();
    const int d = g.dim;
    SpectralField A = transform_forward(s.a);
    SpectralField U = transform_forward(s.u);
    std::vector<RealField> ga = gradients(A); // [axis]
    std::vector<RealField> gu = gradients(U); // [c*d + axis]

    RhsResult r{RealField(g, 1), RealField(g, d)};
    const std::size_t pts = g.points();

    if (advection) {
        auto f1 = r.f1.component(0);
#pragma omp parallel for num_threads(thread_cap()) schedule(static)
        for (std::size_t i = 0; i < pts; ++i) {
            double adv = 0.0;
            for (int ax = 0; ax < d; ++ax) adv += s.u.at(ax, i) * ga[ax].at(0, i);
            f1[i] = -adv;
        }
        for (int c = 0; c < d; ++c) {
            auto f2 = r.f2.component(c);
#pragma omp parallel for num_threads(thread_cap()) schedule(static)
            for (std::size_t i = 0; i < pts; ++i) {
                double adv = 0.0;
                for (int ax = 0; ax < d; ++ax) adv += s.u.at(ax, i) * gu[c * d + ax].at(0, i);
                f2[i] = -adv;
            }
        }
        if (dealias) {
            r.f1 = dealias_field(r.f1);
            r.f2 = dealias_field(r.f2);
        }
    }

    if (linear) {
        auto f1 = r.f1.component(0);
#pragma omp parallel for num_threads(thread_cap()) schedule(static)
        for (std::size_t i = 0; i < pts; ++i) {
            double divu = 0.0;
            for (int ax = 0; ax < d; ++ax) divu += gu[ax * d + ax].at(0, i);
            f1[i] -= divu;
        }
        for (int c = 0; c < d; ++c) {
            auto f2 = r.f2.component(c);
#pragma omp parallel for num_threads(thread_cap()) schedule(static)
            for (std::size_t i = 0; i < pts; ++i)
                f2[i] -= ga[c].at(0, i) + s.u.at(c, i);
        }
    }
    return r;
}

State axpy(const State& s, double coef, const RhsResult& r) {
    State out = s;
    auto a = out.a.component(0);
    auto f1 = r.f1.component(0);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += coef * f1[i];
    auto u = out.u.data();
    auto f2 = r.f2.data();
    for (std::size_t i = 0; i < u.size(); ++i) u[i] += coef * f2[i];
    return out;
}

// classical 4-stage step of ds/dt = rhs(s)
template <class Rhs>
State rk4_generic(const State& s, double dt, Rhs&& rhs) {
    RhsResult k1 = rhs(s);
    RhsResult k2 = rhs(axpy(s, 0.5 * dt, k1));
    RhsResult k3 = rhs(axpy(s, 0.5 * dt, k2));
    RhsResult k4 = rhs(axpy(s, dt, k3));

    State out = s;
    auto acc = [&](auto dst, auto a1, auto a2, auto a3, auto a4) {
        for (std::size_t i = 0; i < dst.size(); ++i)
            dst[i] += dt / 6.0 * (a1[i] + 2.0 * a2[i] + 2.0 * a3[i] + a4[i]);
    };
    acc(out.a.component(0), k1.f1.component(0), k2.f1.component(0),
        k3.f1.component(0), k4.f1.component(0));
    acc(out.u.data(), k1.f2.data(), k2.f2.data(), k3.f2.data(), k4.f2.data());
    out.t = s.t + dt;
    return out;
}

} // namespace

Scheme scheme_from_string(const std::string& s) {
    if (s == "strang-exponential") return Scheme::StrangExponential;
    if (s == "rk4") return Scheme::Rk4;
    if (s == "exponential-euler") return Scheme::ExponentialEuler;
    throw std::invalid_argument("unknown scheme '" + s +
                                "' (expected strang-exponential, rk4 or exponential-euler)");
}

std::string scheme_to_string(Scheme s) {
    switch (s) {
    case Scheme::StrangExponential: return "strang-exponential";
    case Scheme::Rk4: return "rk4";
    case Scheme::ExponentialEuler: return "exponential-euler";
    }
    return "?";
}

NonlinearRhs nonlinear_rhs(const State& s, bool dealias) {
    if (!s.finite()) throw std::invalid_argument("nonlinear_rhs: state is not finite");
    RhsResult r = rhs_eval(s, dealias, true, false);
    return NonlinearRhs{std::move(r.f1), std::move(r.f2)};
}

double default_dt(const State& s) {
    return 0.5 * s.grid().spacing() / (1.0 + s.u.max_abs() + 1.0);
}

Integrator::Integrator(const Grid& grid, const IntegratorConfig& cfg)
    : grid_(grid), cfg_(cfg) {}

const GreenSymbol& Integrator::symbol(double t) const {
    auto& slot = symbols_[t];
    if (!slot) slot = std::make_unique<GreenSymbol>(t, grid_);
    return *slot;
}

State Integrator::step(const State& s, double dt) const {
    switch (cfg_.scheme) {
    case Scheme::StrangExponential: return step_strang(s, dt);
    case Scheme::Rk4: return step_rk4(s, dt);
    case Scheme::ExponentialEuler: return step_exponential_euler(s, dt);
    }
    throw std::logic_error("Integrator::step: bad scheme");
}

State Integrator::step_strang(const State& s, double dt) const {
    if (!(dt > 0.0)) throw std::invalid_argument("step_strang: dt must be > 0");
    const GreenSymbol& half = symbol(0.5 * dt);

    SpectralState S = to_spectral(s);
    half.apply(S);
    State mid = to_physical(S);

    if (!cfg_.linear_only) {
        mid = rk4_generic(mid, dt, [&](const State& y) {
            return rhs_eval(y, cfg_.dealias, true, false);
        });
    }

    SpectralState S2 = to_spectral(mid);
    half.apply(S2);
    State out = to_physical(S2);
    out.t = s.t + dt;
    return out;
}

State Integrator::step_rk4(const State& s, double dt) const {
    if (!(dt > 0.0)) throw std::invalid_argument("step_rk4: dt must be > 0");
    return rk4_generic(s, dt, [&](const State& y) {
        return rhs_eval(y, cfg_.dealias, !cfg_.linear_only, true);
    });
}

State Integrator::step_exponential_euler(const State& s, double dt) const {
    if (!(dt > 0.0)) throw std::invalid_argument("step_exponential_euler: dt must be > 0");
    State stage = s;
    if (!cfg_.linear_only) {
        RhsResult f = rhs_eval(s, cfg_.dealias, true, false);
        stage = axpy(s, dt, f);
    }
    SpectralState S = to_spectral(stage);
    symbol(dt).apply(S);
    State out = to_physical(S);
    out.t = s.t + dt;
    return out;
}

RunStatus run(State& s, const IntegratorConfig& cfg,
              const std::function<void(const State&)>& recorder) {
    RunStatus status;
    if (!s.finite()) {
        status.outcome = RunOutcome::Aborted;
        status.t = s.t;
        status.message = "initial state is not finite";
        return status;
    }

    IntegratorConfig cfg_eff = cfg;
    if (cfg_eff.dt <= 0.0) cfg_eff.dt = default_dt(s);
    if (cfg_eff.output_every < 1) cfg_eff.output_every = 1;

    if (cfg_eff.scheme == Scheme::Rk4) {
        const double bound = default_dt(s);
        if (cfg_eff.dt > bound)
            status.warnings.push_back(
                "rk4 step " + std::to_string(cfg_eff.dt) +
                " exceeds the advisory CFL bound " + std::to_string(bound));
    }

    recorder(s);
    if (cfg_eff.t_end <= s.t) {
        status.t = s.t;
        return status;
    }

    Integrator integ(s.grid(), cfg_eff);
    const double t0 = s.t;
    long step_index = 0;
    while (s.t < cfg_eff.t_end - 1e-12 * std::max(1.0, cfg_eff.t_end)) {
        ++step_index;
        const double target = std::min(t0 + step_index * cfg_eff.dt, cfg_eff.t_end);
        const double dt = target - s.t;
        s = integ.step(s, dt);
        s.t = target;

        if (!s.finite() || s.linf() > kBlowUpThreshold) {
            status.outcome = RunOutcome::BlowUp;
            status.t = s.t;
            status.message = s.finite()
                ? "sup norm exceeded " + std::to_string(kBlowUpThreshold)
                : "non-finite sample detected";
            return status;
        }

        const bool last = !(s.t < cfg_eff.t_end - 1e-12 * std::max(1.0, cfg_eff.t_end));
        if (last || step_index % cfg_eff.output_every == 0) recorder(s);
    }
    status.t = s.t;
    return status;
}

} // namespace eud
