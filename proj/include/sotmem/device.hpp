#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "sotmem/common.hpp"

namespace sotmem {

/// CODATA values, SI.
struct PhysicalConstants {
    double e = 1.602176634e-19;      // C
    double mu0 = 1.25663706212e-6;   // N/A^2
    double hbar = 1.054571817e-34;   // J*s
    double k_b = 1.380649e-23;       // J/K
};

inline constexpr PhysicalConstants kConstants{};

/// Bit-cell geometry and magnetics, SI units throughout.
struct SotDeviceParams {
    double theta_sh = 1.0;     // spin Hall angle
    double t_fl = 0.5e-9;      // free layer thickness, m
    double w_sot = 130e-9;     // SOT channel width, m
    double t_sot = 3e-9;       // SOT channel thickness, m
    double t_mgo = 3e-9;       // tunnel oxide thickness, m
    double d_mtj = 55e-9;      // MTJ diameter, m
    double m_s = 1e6;          // free layer saturation magnetization, A/m
    double h_k_eff = 2.4971919018567674e5;  // effective anisotropy field, A/m
    double h_x = 8.1610350136982950e4;      // applied in-plane field, A/m
    double temperature = 300.0;             // K

    void validate() const {
        if (theta_sh <= 0.0) throw config_error("theta_sh must be positive");
        if (t_fl <= 0.0 || w_sot <= 0.0 || t_sot <= 0.0 || t_mgo <= 0.0 || d_mtj <= 0.0)
            throw config_error("device dimensions must be positive");
        if (m_s <= 0.0 || h_k_eff <= 0.0 || h_x < 0.0 || temperature <= 0.0)
            throw config_error("magnetics and temperature must be positive");
        if (h_k_eff / 2.0 <= h_x / std::sqrt(2.0))
            throw config_error("sub-critical field configuration");
    }
};

struct CellTimings {
    double read_latency = 0.0;      // s
    double write_pulse = 0.0;       // s
    double read_current_p = 0.0;    // A (parallel, low resistance)
    double read_current_ap = 0.0;   // A (antiparallel, high resistance)
    double retention_window = 0.0;  // s
    double delta = 0.0;             // thermal stability factor
};

/// Critical switching current density (A/m^2) of the SOT-driven free layer.
inline double critical_current_density(const SotDeviceParams& p,
                                       const PhysicalConstants& c = kConstants) {
    p.validate();
    const double field_term = p.h_k_eff / 2.0 - p.h_x / std::sqrt(2.0);
    return 2.0 * c.e * c.mu0 * p.m_s * p.t_fl / (c.hbar * p.theta_sh) * field_term;
}

/// Empirical SOT channel thickness response. Below the optimum the channel
/// is too thin for the bulk spin Hall effect and the current needed rises;
/// above it the extra thickness shunts charge past the interface. kappa = 0
/// disables both corrections.
struct ThicknessPenalty {
    double t_opt = 3e-9;
    double kappa = 0.2;
    double sub_bulk_ratio = 6.0;

    double effective_thickness(double t_sot) const {
        if (kappa <= 0.0) return t_sot;
        if (t_sot >= t_opt) return t_sot * (1.0 + kappa * (t_sot - t_opt) / t_opt);
        return t_sot + kappa * sub_bulk_ratio * (t_opt - t_sot);
    }
};

/// Critical switching current (A) through the SOT channel cross-section.
inline double critical_current(const SotDeviceParams& p,
                               const PhysicalConstants& c = kConstants,
                               const ThicknessPenalty& pen = {}) {
    return critical_current_density(p, c) * p.w_sot * pen.effective_thickness(p.t_sot);
}

/// Write pulse width for an applied switching current density. Overdrive
/// model: tau_p = k_tau / (j_sw - j_c), demanding j_sw strictly above the
/// critical density.
inline double switching_pulse_width(double j_sw, const SotDeviceParams& p,
                                    const PhysicalConstants& c = kConstants,
                                    double k_tau = 66.666666666666667) {
    const double j_c = critical_current_density(p, c);
    if (j_sw <= j_c) throw config_error("sub-critical write current");
    return k_tau / (j_sw - j_c);
}

/// Thermal stability factor: anisotropy energy barrier over k_B*T.
inline double thermal_stability(const SotDeviceParams& p,
                                const PhysicalConstants& c = kConstants) {
    p.validate();
    const double volume = M_PI * (p.d_mtj / 2.0) * (p.d_mtj / 2.0) * p.t_fl;
    const double barrier = c.mu0 * p.m_s * (p.h_k_eff / 2.0) * volume;
    return barrier / (c.k_b * p.temperature);
}

/// Time horizon within which a single bit's flip probability stays below
/// p_rf, for attempt period tau0.
inline double retention_window(double delta, double p_rf, double tau0) {
    if (p_rf <= 0.0 || p_rf >= 1.0) throw config_error("failure probability must be in (0,1)");
    if (delta < 0.0) throw config_error("thermal stability factor must be >= 0");
    return -std::log1p(-p_rf) * tau0 * std::exp(delta);
}

using TmrTable = std::vector<std::pair<double, double>>;  // (t_mgo m, TMR %)

/// Shipped MgO calibration curve; anchored at 3 nm -> 240 %.
inline TmrTable default_tmr_table() {
    return {{1.0e-9, 100.0}, {1.5e-9, 130.0}, {2.0e-9, 160.0}, {2.5e-9, 200.0},
            {3.0e-9, 240.0}, {3.5e-9, 260.0}, {4.0e-9, 270.0}};
}

/// TMR ratio (%) for an oxide thickness, by piecewise-linear interpolation
/// over the calibration table. Out-of-range thicknesses clamp to the table
/// edge; *clamped reports that when non-null.
inline double tmr_from_oxide(double t_mgo, const TmrTable& table = default_tmr_table(),
                             bool* clamped = nullptr) {
    if (table.size() < 2) throw config_error("TMR table needs at least two points");
    if (clamped) *clamped = false;
    if (t_mgo <= table.front().first) {
        if (clamped) *clamped = t_mgo < table.front().first;
        return table.front().second;
    }
    if (t_mgo >= table.back().first) {
        if (clamped) *clamped = t_mgo > table.back().first;
        return table.back().second;
    }
    for (std::size_t i = 1; i < table.size(); ++i) {
        if (t_mgo <= table[i].first) {
            const auto& [x0, y0] = table[i - 1];
            const auto& [x1, y1] = table[i];
            return y0 + (y1 - y0) * (t_mgo - x0) / (x1 - x0);
        }
    }
    return table.back().second;
}

/// Sense latency falls toward the amplifier floor as the TMR window widens:
/// latency = floor + slope / tmr_pct.
inline double read_latency_from_tmr(double tmr_pct, double floor_s = 100e-12,
                                    double slope_s_pct = 3.6e-8) {
    if (tmr_pct <= 0.0) throw config_error("TMR must be positive");
    return floor_s + slope_s_pct / tmr_pct;
}

/// Pass/fail thresholds for the yield analysis.
struct YieldThresholds {
    double tau_p_max = 1.2e-9;        // write must settle within this pulse
    double read_margin_min = 5e-6;    // A between P and AP sense currents
    double t_ret_min = 1e-3;          // s
};

/// Everything the full cell evaluation needs beyond the raw device knobs:
/// calibration constants, sense path, thresholds. Shipped in tech files.
struct SotCellModel {
    std::string name = "sot_dtco";
    SotDeviceParams params{};
    ThicknessPenalty penalty{};
    double tau0 = 1e-9;                    // retention attempt period, s
    double k_tau = 66.666666666666667;     // s * A/m^2
    double i_write = 100e-6;               // nominal write drive, A
    double v_read = 0.1;                   // V
    double ra_product = 1.2900431371641348e-11;  // ohm*m^2
    double i_read_bias = 14.583333333333336e-6;  // A, sense-path offset
    TmrTable tmr_table = default_tmr_table();
    double read_lat_floor = 100e-12;       // s
    double read_lat_slope = 3.6e-8;        // s * %
    double p_rf = 1e-9;
    double t_hot = 358.0;                  // K
    YieldThresholds thresholds{};

    double write_density(const SotDeviceParams& p) const {
        return i_write / (p.w_sot * p.t_sot);
    }
};

/// Sense currents through the MTJ for both resistance states. The bias term
/// models the current-mirror offset; it cancels out of the read margin.
inline std::pair<double, double> read_currents(const SotCellModel& m,
                                               const SotDeviceParams& p) {
    const double area = M_PI * (p.d_mtj / 2.0) * (p.d_mtj / 2.0);
    const double r_p = m.ra_product / area;
    const double tmr = tmr_from_oxide(p.t_mgo, m.tmr_table);
    const double r_ap = r_p * (1.0 + tmr / 100.0);
    return {m.v_read / r_p + m.i_read_bias, m.v_read / r_ap + m.i_read_bias};
}

/// Nominal read/write timing and stability summary of a cell.
inline CellTimings cell_timings(const SotCellModel& m) {
    const SotDeviceParams& p = m.params;
    CellTimings t;
    t.delta = thermal_stability(p);
    t.retention_window = retention_window(t.delta, m.p_rf, m.tau0);
    t.write_pulse = switching_pulse_width(m.write_density(p), p, kConstants, m.k_tau);
    const double tmr = tmr_from_oxide(p.t_mgo, m.tmr_table);
    t.read_latency = read_latency_from_tmr(tmr, m.read_lat_floor, m.read_lat_slope);
    auto [ip, iap] = read_currents(m, p);
    t.read_current_p = ip;
    t.read_current_ap = iap;
    return t;
}

/// Inflate the lithography-defined dimensions by the combined process and
/// temperature margins.
inline SotDeviceParams apply_guard_band(SotDeviceParams p, double process_frac = 0.20,
                                        double temp_frac = 0.10) {
    if (process_frac < 0.0 || temp_frac < 0.0)
        throw config_error("guard band fractions must be >= 0");
    const double scale = 1.0 + process_frac + temp_frac;
    p.t_fl *= scale;
    p.t_sot *= scale;
    p.t_mgo *= scale;
    p.w_sot *= scale;
    p.d_mtj *= scale;
    return p;
}

namespace detail {

/// Counter-based generator: sample index -> independent stream, so results
/// do not depend on how samples are partitioned across workers.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    // uniform in (0,1]
    double uniform_pos() { return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53; }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double gaussian() {
        const double u1 = uniform_pos();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }
    double truncated_gaussian(double trunc_sigma) {
        while (true) {
            const double z = gaussian();
            if (std::fabs(z) <= trunc_sigma) return z;
        }
    }
};

} // namespace detail

struct MonteCarloConfig {
    int samples = 5000;
    double sigma_frac = 0.05;
    double trunc_sigma = 4.0;
    std::uint64_t seed = 1;

    void validate() const {
        if (samples < 1) throw config_error("monte carlo needs at least one sample");
        if (sigma_frac < 0.0 || sigma_frac >= 1.0)
            throw config_error("sigma fraction must be in [0,1)");
        if (trunc_sigma <= 0.0) throw config_error("truncation must be positive");
    }
};

struct SampleStats {
    double mean = 0.0, min = 0.0, max = 0.0;
};

struct MonteCarloReport {
    int samples = 0;
    double write_yield = 0.0;      // fraction in [0,1]
    double read_yield = 0.0;
    double retention_yield = 0.0;
    SampleStats i_c, tau_p, read_margin, delta, t_ret;

    // Analytic corners: +trunc on the write-critical dims, -trunc with the
    // hot temperature on the read/retention-critical dims.
    double corner_write_i_c = 0.0;
    double corner_write_tau_p = 0.0;
    double corner_read_margin = 0.0;
    double corner_retention_delta = 0.0;
    double corner_retention_t_ret = 0.0;
};

/// Process-variation yield analysis: d_mtj, t_fl and w_sot vary as
/// independent truncated Gaussians around the model's nominal cell. Write
/// drive is the fixed nominal current, so a wider channel sees a lower
/// switching density while a thicker free layer raises the critical one.
inline MonteCarloReport monte_carlo(const SotCellModel& model, const MonteCarloConfig& cfg) {
    cfg.validate();
    const SotDeviceParams& nom = model.params;
    nom.validate();

    MonteCarloReport rep;
    rep.samples = cfg.samples;
    int write_pass = 0, read_pass = 0, ret_pass = 0;

    auto accumulate = [](SampleStats& s, double v, int i) {
        if (i == 0) {
            s.mean = 0.0;
            s.min = v;
            s.max = v;
        }
        s.mean += v;
        s.min = std::min(s.min, v);
        s.max = std::max(s.max, v);
    };

    for (int i = 0; i < cfg.samples; ++i) {
        detail::SplitMix64 rng(cfg.seed ^ (0xA0761D6478BD642Full * (static_cast<std::uint64_t>(i) + 1)));
        SotDeviceParams p = nom;
        p.d_mtj *= 1.0 + cfg.sigma_frac * rng.truncated_gaussian(cfg.trunc_sigma);
        p.t_fl *= 1.0 + cfg.sigma_frac * rng.truncated_gaussian(cfg.trunc_sigma);
        p.w_sot *= 1.0 + cfg.sigma_frac * rng.truncated_gaussian(cfg.trunc_sigma);

        const double j_c = critical_current_density(p);
        const double i_c = j_c * p.w_sot * model.penalty.effective_thickness(p.t_sot);
        const double j_sw = model.write_density(p);
        const bool write_ok =
            j_sw > j_c && model.k_tau / (j_sw - j_c) <= model.thresholds.tau_p_max;
        const double tau_p = j_sw > j_c ? model.k_tau / (j_sw - j_c)
                                        : model.thresholds.tau_p_max * 2.0;
        if (write_ok) ++write_pass;

        auto [ip, iap] = read_currents(model, p);
        const double margin = ip - iap;
        if (margin >= model.thresholds.read_margin_min) ++read_pass;

        const double dlt = thermal_stability(p);
        const double ret = retention_window(dlt, model.p_rf, model.tau0);
        if (ret >= model.thresholds.t_ret_min) ++ret_pass;

        accumulate(rep.i_c, i_c, i);
        accumulate(rep.tau_p, tau_p, i);
        accumulate(rep.read_margin, margin, i);
        accumulate(rep.delta, dlt, i);
        accumulate(rep.t_ret, ret, i);
    }
    rep.i_c.mean /= cfg.samples;
    rep.tau_p.mean /= cfg.samples;
    rep.read_margin.mean /= cfg.samples;
    rep.delta.mean /= cfg.samples;
    rep.t_ret.mean /= cfg.samples;
    rep.write_yield = static_cast<double>(write_pass) / cfg.samples;
    rep.read_yield = static_cast<double>(read_pass) / cfg.samples;
    rep.retention_yield = static_cast<double>(ret_pass) / cfg.samples;

    // Corners.
    const double up = 1.0 + cfg.sigma_frac * cfg.trunc_sigma;
    const double dn = 1.0 - cfg.sigma_frac * cfg.trunc_sigma;
    {
        SotDeviceParams p = nom;
        p.t_fl *= up;
        p.w_sot *= up;
        p.d_mtj *= up;
        const double j_c = critical_current_density(p);
        rep.corner_write_i_c = j_c * p.w_sot * model.penalty.effective_thickness(p.t_sot);
        const double j_sw = model.write_density(p);
        rep.corner_write_tau_p =
            j_sw > j_c ? model.k_tau / (j_sw - j_c) : std::numeric_limits<double>::infinity();
    }
    {
        SotDeviceParams p = nom;
        p.t_fl *= dn;
        p.w_sot *= dn;
        p.d_mtj *= dn;
        p.temperature = model.t_hot;
        auto [ip, iap] = read_currents(model, p);
        rep.corner_read_margin = ip - iap;
        rep.corner_retention_delta = thermal_stability(p);
        rep.corner_retention_t_ret =
            retention_window(rep.corner_retention_delta, model.p_rf, model.tau0);
    }
    return rep;
}

} // namespace sotmem
