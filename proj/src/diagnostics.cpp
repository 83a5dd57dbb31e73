#include "eulerdamp/diagnostics.hpp"

#include "eulerdamp/fitting.hpp"
#include "eulerdamp/parallel.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace eud {

double DiagnosticsRecord::h3_pair() const {
    double s = 0.0;
    for (int k = 0; k <= 3; ++k) s += dk_a[k] * dk_a[k] + dk_u[k] * dk_u[k];
    return std::sqrt(s);
}

DiagnosticsRecord record(const State& s, const CutoffProfile& cutoff,
                         const DiagnosticsRecord* prev) {
    if (!s.finite()) throw std::invalid_argument("record: state is not finite");

    DiagnosticsRecord rec;
    rec.t = s.t;

    SpectralField A = transform_forward(s.a);
    SpectralField U = transform_forward(s.u);

    RealField rho_dev(s.grid(), 1);
    {
        auto a = s.a.component(0);
        auto r = rho_dev.component(0);
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = s.rho_star * std::expm1(a[i]);
    }
    SpectralField R = transform_forward(rho_dev);

    SpectralField A_low = project(A, cutoff, FrequencyPart::Low);
    SpectralField A_high = project(A, cutoff, FrequencyPart::High);
    SpectralField U_low = project(U, cutoff, FrequencyPart::Low);
    SpectralField U_high = project(U, cutoff, FrequencyPart::High);

    for (int k = 0; k <= 3; ++k) {
        rec.dk_a[k] = sobolev_seminorm(A, k);
        rec.dk_u[k] = sobolev_seminorm(U, k);
        rec.dk_rho[k] = sobolev_seminorm(R, k);
        rec.dk_a_low[k] = sobolev_seminorm(A_low, k);
        rec.dk_a_high[k] = sobolev_seminorm(A_high, k);
        rec.dk_u_low[k] = sobolev_seminorm(U_low, k);
        rec.dk_u_high[k] = sobolev_seminorm(U_high, k);
    }

    rec.linf_grad_a = linf_gradient(s.a);
    rec.linf_grad_u = linf_gradient(s.u);
    rec.linf_div_u = linf_divergence(s.u);

    rec.mass = integral(rho_dev);
    {
        RealField rho_u(s.grid(), s.grid().dim);
        auto a = s.a.component(0);
        for (int c = 0; c < s.grid().dim; ++c) {
            auto dst = rho_u.component(c);
            auto uc = s.u.component(c);
            for (std::size_t i = 0; i < a.size(); ++i)
                dst[i] = s.rho_star * std::exp(a[i]) * uc[i];
            rec.momentum[c] = integral(rho_u, c);
        }
    }
    {
        auto a = s.a.component(0);
        double amin = a[0], amax = a[0];
        for (double v : a) {
            amin = std::min(amin, v);
            amax = std::max(amax, v);
        }
        rec.rho_min = s.rho_star * std::exp(amin);
        rec.rho_max = s.rho_star * std::exp(amax);
    }

    if (prev) {
        const double dt = rec.t - prev->t;
        rec.criterion_integral = prev->criterion_integral +
            0.5 * dt * ((prev->linf_grad_a + prev->linf_grad_u) +
                        (rec.linf_grad_a + rec.linf_grad_u));
        rec.divu_integral = prev->divu_integral +
            0.5 * dt * (prev->linf_div_u + rec.linf_div_u);
    }
    return rec;
}

const char* kCsvHeader =
    "t,d0_a,d1_a,d2_a,d3_a,d0_u,d1_u,d2_u,d3_u,d0_rho,d1_rho,d2_rho,d3_rho,"
    "d0_a_low,d1_a_low,d2_a_low,d3_a_low,d0_u_low,d1_u_low,d2_u_low,d3_u_low,"
    "d0_a_high,d1_a_high,d2_a_high,d3_a_high,d0_u_high,d1_u_high,d2_u_high,d3_u_high,"
    "linf_grad_a,linf_grad_u,linf_div_u,criterion_integral,divu_integral,mass,"
    "momentum_1,momentum_2,momentum_3,rho_min,rho_max";

void write_csv_header(std::ostream& os) { os << kCsvHeader << "\n"; }

namespace {

void put(std::ostream& os, double v, bool first = false) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    if (!first) os << ',';
    os << buf;
}

} // namespace

void write_csv_row(std::ostream& os, const DiagnosticsRecord& r) {
    put(os, r.t, true);
    for (int k = 0; k <= 3; ++k) put(os, r.dk_a[k]);
    for (int k = 0; k <= 3; ++k) put(os, r.dk_u[k]);
    for (int k = 0; k <= 3; ++k) put(os, r.dk_rho[k]);
    for (int k = 0; k <= 3; ++k) put(os, r.dk_a_low[k]);
    for (int k = 0; k <= 3; ++k) put(os, r.dk_u_low[k]);
    for (int k = 0; k <= 3; ++k) put(os, r.dk_a_high[k]);
    for (int k = 0; k <= 3; ++k) put(os, r.dk_u_high[k]);
    put(os, r.linf_grad_a);
    put(os, r.linf_grad_u);
    put(os, r.linf_div_u);
    put(os, r.criterion_integral);
    put(os, r.divu_integral);
    put(os, r.mass);
    for (int c = 0; c < 3; ++c) put(os, r.momentum[c]);
    put(os, r.rho_min);
    put(os, r.rho_max);
    os << "\n";
}

int CsvTable::column_index(const std::string& name) const {
    auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end())
        throw std::invalid_argument("csv: missing column '" + name + "'");
    return static_cast<int>(it - columns.begin());
}

std::vector<double> CsvTable::column(const std::string& name) const {
    const int idx = column_index(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& row : rows) out.push_back(row[idx]);
    return out;
}

CsvTable read_csv(std::istream& is) {
    CsvTable table;
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) table.columns.push_back(cell);
    }
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line.back() == '\r') line.pop_back();
        std::stringstream ss(line);
        std::string cell;
        std::vector<double> row;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        if (row.size() != table.columns.size())
            throw std::invalid_argument("csv: row width " + std::to_string(row.size()) +
                                        " does not match header width " +
                                        std::to_string(table.columns.size()));
        table.rows.push_back(std::move(row));
    }
    return table;
}

DecayFit fit_exponent(std::span<const double> t, std::span<const double> value,
                      FitWindow window, double expected, double tolerance) {
    if (t.size() != value.size())
        throw std::invalid_argument("fit_exponent: mismatched series lengths");
    if (window.t_lo < 1.0)
        throw std::invalid_argument("fit_exponent: window must start at t >= 1");
    if (!(window.t_hi > window.t_lo))
        throw std::invalid_argument("fit_exponent: empty window");

    std::vector<double> x, y;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < window.t_lo || t[i] > window.t_hi) continue;
        if (!(value[i] > 0.0))
            throw std::invalid_argument(
                "fit_exponent: nonpositive value " + std::to_string(value[i]) +
                " at t = " + std::to_string(t[i]) + " (norm underflow or floor)");
        x.push_back(std::log1p(t[i]));
        y.push_back(std::log(value[i]));
    }
    if (x.size() < 8)
        throw std::invalid_argument("fit_exponent: need at least 8 samples in window, got " +
                                    std::to_string(x.size()));

    const OlsLine line = ols_line(x, y);
    DecayFit fit;
    fit.window = window;
    fit.slope = line.slope;
    fit.slope_stderr = line.slope_stderr;
    fit.expected = expected;
    fit.tolerance = tolerance;
    fit.pass_margin = tolerance - std::abs(line.slope - expected);
    fit.pass = fit.pass_margin >= 0.0;
    fit.samples = line.n;
    return fit;
}

void require_box_valid_window(double box_length, FitWindow window) {
    const double rate = std::pow(2.0 * M_PI / box_length, 2);
    if (rate * window.t_hi > 0.2) {
        std::ostringstream msg;
        msg << "fit window violates box validity: (2*pi/L)^2 * t_hi = "
            << rate * window.t_hi << " > 0.2 (L = " << box_length
            << ", t_hi = " << window.t_hi << ")";
        throw std::invalid_argument(msg.str());
    }
}

std::optional<double> theorem_slope(const std::string& quantity) {
    std::string base = quantity;
    for (const char* suffix : {"_low", "_high"}) {
        const std::string s = suffix;
        if (base.size() > s.size() && base.compare(base.size() - s.size(), s.size(), s) == 0)
            base = base.substr(0, base.size() - s.size());
    }
    if (base.size() < 4 || base[0] != 'd' || base[2] != '_') return std::nullopt;
    const int k = base[1] - '0';
    if (k < 0 || k > 3) return std::nullopt;
    const std::string var = base.substr(3);
    if (var == "a" || var == "rho") return -0.5 * k;
    if (var == "u") return -0.5 * (k + 1);
    return std::nullopt;
}

void apply_norm_floor(std::vector<double>& t, std::vector<double>& v) {
    if (v.empty()) return;
    const double floor = 1e3 * DBL_EPSILON * v.front();
    std::vector<double> tf, vf;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] >= floor) {
            tf.push_back(t[i]);
            vf.push_back(v[i]);
        }
    }
    t.swap(tf);
    v.swap(vf);
}

EnvelopeCheck density_envelope_check(const DiagnosticsRecord& rec,
                                     double rho0_min, double rho0_max) {
    EnvelopeCheck c;
    const double I = rec.divu_integral;
    c.lower_margin = rec.rho_min - std::exp(-I) * rho0_min;
    c.upper_margin = std::exp(I) * rho0_max - rec.rho_max;
    const double tol = 1e-12 * std::max(rho0_max, 1.0);
    c.pass = c.lower_margin >= -tol && c.upper_margin >= -tol;
    return c;
}

BoundednessCheck boundedness_check(std::span<const double> h3_series, double n0,
                                   double factor) {
    BoundednessCheck c;
    c.bound = factor * n0;
    for (double v : h3_series) c.sup = std::max(c.sup, v);
    c.pass = c.sup <= c.bound;
    return c;
}

double weighted_norm_aggregate(std::span<const DiagnosticsRecord> recs) {
    double sup = 0.0;
    for (const auto& r : recs) {
        const double w = 1.0 + r.t;
        double y = 0.0;
        for (int k = 1; k <= 3; ++k) y += std::pow(w, 0.5 * k) * r.dk_a[k];
        for (int k = 0; k <= 3; ++k) y += std::pow(w, 0.5 * (k + 1)) * r.dk_u[k];
        y += std::pow(w, 1.5) * r.dk_u[3];
        sup = std::max(sup, y);
    }
    return sup;
}

} // namespace eud
