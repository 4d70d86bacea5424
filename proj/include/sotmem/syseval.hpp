#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "sotmem/access.hpp"

namespace sotmem {

/// Array-level characteristics of one GLB technology at one capacity, as an
/// external array estimator would report them. Energies are J per access at
/// the stated MB-per-access granularity; MRAM-style bit-value splits carry
/// separate 0/1 values (equal for symmetric technologies).
struct MemoryTechSpec {
    std::string name;
    double capacity_mb = 0.0;
    double read_energy_0 = 0.0;   // J/access
    double read_energy_1 = 0.0;
    double write_energy_0 = 0.0;
    double write_energy_1 = 0.0;
    double read_latency = 0.0;    // s/access
    double write_latency = 0.0;
    double leakage_power = 0.0;   // W at this capacity
    double area_mm2 = 0.0;        // at this capacity
    double mbpa = 64.0 / kBytesPerMb;

    // Fraction of accessed bits assumed to carry value 1.
    double read_energy(double bit1_bias = 0.5) const {
        return read_energy_0 * (1.0 - bit1_bias) + read_energy_1 * bit1_bias;
    }
    double write_energy(double bit1_bias = 0.5) const {
        return write_energy_0 * (1.0 - bit1_bias) + write_energy_1 * bit1_bias;
    }

    void validate() const {
        if (capacity_mb <= 0.0) throw config_error("tech capacity must be positive");
        if (read_energy_0 < 0 || read_energy_1 < 0 || write_energy_0 < 0 ||
            write_energy_1 < 0 || read_latency < 0 || write_latency < 0 ||
            leakage_power < 0 || area_mm2 < 0)
            throw config_error("tech parameters must be >= 0");
        if (mbpa <= 0.0) throw config_error("tech mbpa must be positive");
    }
};

struct DramSpec {
    std::string name = "hbm3";
    double read_energy = 0.0;    // J/access
    double write_energy = 0.0;
    double access_latency = 0.0; // s/access
    double mbpa = 64.0 / kBytesPerMb;

    void validate() const {
        if (read_energy <= 0 || write_energy <= 0 || access_latency <= 0 || mbpa <= 0)
            throw config_error("DRAM parameters must be positive");
    }
};

enum class ExecTimeModel { serial, overlapped };

/// Energy/latency rollup for one (workload, phase, GLB tech) combination.
/// Splits always sum to the totals.
struct PpaEntry {
    std::string model;
    Phase phase = Phase::inference;
    std::string tech;
    double dram_dynamic_j = 0.0;
    double glb_dynamic_j = 0.0;
    double glb_leakage_j = 0.0;
    double dram_latency_s = 0.0;
    double glb_latency_s = 0.0;
    double area_mm2 = 0.0;

    double total_energy_j() const { return dram_dynamic_j + glb_dynamic_j + glb_leakage_j; }
    double total_latency_s() const { return dram_latency_s + glb_latency_s; }
};

/// Roll access counts into energy and latency for one GLB technology.
/// The memory system is assumed to bound execution; compute overlaps fully.
/// In the serial model DRAM and GLB phases add; the overlapped model hides
/// the cheaper of the two. Leakage integrates the GLB's static power over
/// the run.
inline PpaEntry evaluate_ppa(const AccessCounts& counts, const MemoryTechSpec& glb,
                             const DramSpec& dram,
                             ExecTimeModel time_model = ExecTimeModel::serial,
                             double bit1_bias = 0.5) {
    glb.validate();
    dram.validate();
    const double rel_err_dram = std::fabs(counts.mbpa_dram - dram.mbpa);
    const double rel_err_glb = std::fabs(counts.mbpa_glb - glb.mbpa);
    if (rel_err_dram > 1e-12 * dram.mbpa || rel_err_glb > 1e-12 * glb.mbpa)
        throw config_error("access counts were produced with different mbpa values than "
                           "the technology specs");

    PpaEntry e;
    e.tech = glb.name;
    e.area_mm2 = glb.area_mm2;
    const auto& t = counts.totals;
    e.dram_dynamic_j = t.rd_dram * dram.read_energy + t.wr_dram * dram.write_energy;
    e.glb_dynamic_j =
        t.rd_glb * glb.read_energy(bit1_bias) + t.wr_glb * glb.write_energy(bit1_bias);

    double dram_lat = 0.0, glb_lat = 0.0;
    if (time_model == ExecTimeModel::serial) {
        dram_lat = (t.rd_dram + t.wr_dram) * dram.access_latency;
        glb_lat = t.rd_glb * glb.read_latency + t.wr_glb * glb.write_latency;
    } else {
        // Per-layer overlap of the DRAM and GLB streams.
        for (const auto& la : counts.per_layer) {
            const double d = (la.rd_dram + la.wr_dram) * dram.access_latency;
            const double g = la.rd_glb * glb.read_latency + la.wr_glb * glb.write_latency;
            dram_lat += d;
            glb_lat += g;
            const double hidden = std::min(d, g);
            if (d <= g)
                dram_lat -= hidden;
            else
                glb_lat -= hidden;
        }
    }
    e.dram_latency_s = dram_lat;
    e.glb_latency_s = glb_lat;
    e.glb_leakage_j = glb.leakage_power * e.total_latency_s();
    return e;
}

struct TechRatioRow {
    std::string model;
    Phase phase = Phase::inference;
    std::string tech;
    double energy_ratio = 0.0;   // baseline / candidate (>1 = improvement)
    double latency_ratio = 0.0;
    double area_ratio = 0.0;     // candidate / baseline (<1 = smaller)
};

struct TechComparison {
    std::string baseline;
    std::vector<PpaEntry> entries;                  // model-major, tech-minor
    std::vector<TechRatioRow> ratios;
    std::vector<TechRatioRow> geomean;              // one row per non-baseline tech
};

/// Evaluate every workload against every technology and report per-model
/// energy/latency ratios against the named baseline, plus geometric means.
inline TechComparison compare_techs(const std::vector<Workload>& models,
                                    const std::vector<MemoryTechSpec>& techs,
                                    const DramSpec& dram, Phase phase,
                                    const std::string& baseline_name,
                                    ExecTimeModel time_model = ExecTimeModel::serial,
                                    int datum_bytes = 4) {
    if (techs.size() < 2) throw config_error("tech comparison needs at least two technologies");
    const MemoryTechSpec* baseline = nullptr;
    for (const auto& t : techs)
        if (t.name == baseline_name) baseline = &t;
    if (!baseline) throw lookup_error("baseline technology '" + baseline_name + "' not in list");

    TechComparison cmp;
    cmp.baseline = baseline_name;

    struct Acc {
        double log_e = 0.0, log_l = 0.0;
        int n = 0;
    };
    std::vector<Acc> acc(techs.size());

    for (const auto& w : models) {
        const auto fps = workload_footprints(w, datum_bytes);
        AccessConfig cfg;
        cfg.mbpa_dram = dram.mbpa;

        PpaEntry base_entry;
        {
            AccessConfig c = cfg;
            c.glb_mb = baseline->capacity_mb;
            c.mbpa_glb = baseline->mbpa;
            base_entry = evaluate_ppa(access_counts(fps, c, phase), *baseline, dram, time_model);
            base_entry.model = w.name;
            base_entry.phase = phase;
        }

        for (std::size_t ti = 0; ti < techs.size(); ++ti) {
            const auto& tech = techs[ti];
            AccessConfig c = cfg;
            c.glb_mb = tech.capacity_mb;
            c.mbpa_glb = tech.mbpa;
            PpaEntry entry = evaluate_ppa(access_counts(fps, c, phase), tech, dram, time_model);
            entry.model = w.name;
            entry.phase = phase;
            cmp.entries.push_back(entry);

            TechRatioRow row;
            row.model = w.name;
            row.phase = phase;
            row.tech = tech.name;
            row.energy_ratio = base_entry.total_energy_j() / entry.total_energy_j();
            row.latency_ratio = base_entry.total_latency_s() / entry.total_latency_s();
            row.area_ratio = entry.area_mm2 / base_entry.area_mm2;
            cmp.ratios.push_back(row);

            acc[ti].log_e += std::log(row.energy_ratio);
            acc[ti].log_l += std::log(row.latency_ratio);
            acc[ti].n += 1;
        }
    }

    for (std::size_t ti = 0; ti < techs.size(); ++ti) {
        if (acc[ti].n == 0) continue;
        TechRatioRow row;
        row.model = "geomean";
        row.phase = phase;
        row.tech = techs[ti].name;
        row.energy_ratio = std::exp(acc[ti].log_e / acc[ti].n);
        row.latency_ratio = std::exp(acc[ti].log_l / acc[ti].n);
        row.area_ratio = techs[ti].area_mm2 / baseline->area_mm2;
        cmp.geomean.push_back(row);
    }
    return cmp;
}

/// Area scaling law of one technology family: bit cells plus a
/// capacity-dependent periphery overhead.
struct AreaModel {
    std::string name;
    double cell_area_um2 = 0.0;        // per bit
    double periphery_base_mm2 = 0.0;
    double periphery_per_mb_mm2 = 0.0;

    void validate() const {
        if (cell_area_um2 <= 0.0) throw config_error("cell area must be positive");
        if (periphery_base_mm2 < 0.0 || periphery_per_mb_mm2 < 0.0)
            throw config_error("periphery overheads must be >= 0");
    }
};

inline double area_at_capacity(const AreaModel& m, double capacity_mb) {
    m.validate();
    if (capacity_mb <= 0.0) throw config_error("capacity must be positive");
    const double bits = capacity_mb * kBytesPerMb * 8.0;
    return bits * m.cell_area_um2 * 1e-6 + m.periphery_base_mm2 +
           m.periphery_per_mb_mm2 * capacity_mb;
}

} // namespace sotmem
