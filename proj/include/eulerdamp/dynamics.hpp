#pragma once

#include "eulerdamp/greens.hpp"
#include "eulerdamp/state.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace eud {

enum class Scheme { StrangExponential, Rk4, ExponentialEuler };

Scheme scheme_from_string(const std::string& s);
std::string scheme_to_string(Scheme s);

struct IntegratorConfig {
    Scheme scheme = Scheme::StrangExponential;
    double dt = 0.0;          // 0 selects the advective-acoustic heuristic
    bool dealias = true;      // 2/3-rule truncation after products
    double t_end = 0.0;
    int output_every = 1;     // steps between recorder calls
    bool linear_only = false; // zero the advective nonlinearity
};

struct NonlinearRhs {
    RealField f1; // -u . grad a
    RealField f2; // -u . grad u
};

NonlinearRhs nonlinear_rhs(const State& s, bool dealias);

// default step heuristic: 0.5 * h / (1 + max|u| + 1)
double default_dt(const State& s);

enum class RunOutcome { Completed, BlowUp, Aborted };

struct RunStatus {
    RunOutcome outcome = RunOutcome::Completed;
    double t = 0.0;
    std::string message;
    std::vector<std::string> warnings;

    bool completed() const { return outcome == RunOutcome::Completed; }
};

// One-step integrators sharing cached linear-flow symbols and scratch.
class Integrator {
public:
    Integrator(const Grid& grid, const IntegratorConfig& cfg);

    State step(const State& s, double dt) const;
    State step_strang(const State& s, double dt) const;
    State step_rk4(const State& s, double dt) const;
    State step_exponential_euler(const State& s, double dt) const;

    const IntegratorConfig& config() const { return cfg_; }

private:
    const GreenSymbol& symbol(double t) const;

    Grid grid_;
    IntegratorConfig cfg_;
    mutable std::map<double, std::unique_ptr<GreenSymbol>> symbols_;
};

// Advances s to cfg.t_end, invoking the recorder at t = 0, every
// output_every steps, and at t_end.  Aborts with a blow-up status when
// the sup norm passes 1e6 or any sample stops being finite; the recorder
// is never invoked on a non-finite state.
RunStatus run(State& s, const IntegratorConfig& cfg,
              const std::function<void(const State&)>& recorder);

} // namespace eud
