#pragma once

#include "eulerdamp/spectral.hpp"
#include "eulerdamp/state.hpp"

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace eud {

// One time sample of every tracked quantity.
struct DiagnosticsRecord {
    double t = 0.0;
    std::array<double, 4> dk_a{}, dk_u{}, dk_rho{};
    std::array<double, 4> dk_a_low{}, dk_u_low{}, dk_a_high{}, dk_u_high{};
    double linf_grad_a = 0.0, linf_grad_u = 0.0, linf_div_u = 0.0;
    double criterion_integral = 0.0; // running int (|grad a|_inf + |grad u|_inf) dt
    double divu_integral = 0.0;      // running int |div u|_inf dt
    double mass = 0.0;               // int (rho - rho_star)
    std::array<double, 3> momentum{}; // int rho u, zero-padded beyond dim
    double rho_min = 0.0, rho_max = 0.0;

    // sqrt(sum_k dk_a^2 + dk_u^2), the H^3 size of the evolved pair
    double h3_pair() const;
};

DiagnosticsRecord record(const State& s, const CutoffProfile& cutoff,
                         const DiagnosticsRecord* prev);

// ---- CSV ----

extern const char* kCsvHeader;

void write_csv_header(std::ostream& os);
void write_csv_row(std::ostream& os, const DiagnosticsRecord& rec);

struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    int column_index(const std::string& name) const; // throws naming the column
    std::vector<double> column(const std::string& name) const;
};

CsvTable read_csv(std::istream& is);

// ---- decay fitting ----

struct FitWindow {
    double t_lo = 1.0;
    double t_hi = 0.0;
};

struct DecayFit {
    std::string quantity;
    FitWindow window;
    double slope = 0.0;
    double slope_stderr = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    double pass_margin = 0.0; // tolerance - |slope - expected|
    bool pass = false;
    int samples = 0;
};

// OLS of log(value) against log(1+t) restricted to the window.
// Rejects windows with t_lo < 1, fewer than 8 samples, or nonpositive
// values inside the window.
DecayFit fit_exponent(std::span<const double> t, std::span<const double> value,
                      FitWindow window, double expected, double tolerance);

// Fit windows must close before the slowest box mode decays appreciably:
// (2 pi / L)^2 * t_hi <= 0.2.  Throws with the constraint echoed.
void require_box_valid_window(double box_length, FitWindow window);

// Theorem decay exponent associated with a CSV quantity name
// (d{k}_a, d{k}_u, d{k}_rho and their _low/_high variants).
std::optional<double> theorem_slope(const std::string& quantity);

// Series values strictly below 1e3 * eps * initial are roundoff floor and
// are removed before fitting.
void apply_norm_floor(std::vector<double>& t, std::vector<double>& v);

// ---- run-level checks ----

struct EnvelopeCheck {
    bool pass = false;
    double lower_margin = 0.0; // rho_min - e^{-I} rho0_min
    double upper_margin = 0.0; // e^{+I} rho0_max - rho_max
};

EnvelopeCheck density_envelope_check(const DiagnosticsRecord& rec,
                                     double rho0_min, double rho0_max);

struct BoundednessCheck {
    bool pass = false;
    double sup = 0.0;
    double bound = 0.0; // factor * n0
};

BoundednessCheck boundedness_check(std::span<const double> h3_series, double n0,
                                   double factor = 1.1);

// weighted-norm aggregate of the record series, reported for inspection
double weighted_norm_aggregate(std::span<const DiagnosticsRecord> recs);

} // namespace eud
