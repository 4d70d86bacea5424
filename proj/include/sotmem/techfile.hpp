#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sotmem/device.hpp"
#include "sotmem/syseval.hpp"
#include "sotmem/zoo.hpp"

namespace sotmem {

namespace detail {

/// Shared line scanner for the key/value technology files.
class TechScanner {
public:
    TechScanner(std::istream& in, std::string source) : source_(std::move(source)) {
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            auto toks = split_ws(line);
            if (toks.empty()) continue;
            records_.push_back({lineno, std::move(toks)});
        }
    }

    struct Record {
        int lineno;
        std::vector<std::string> toks;
    };

    const std::vector<Record>& records() const { return records_; }
    std::string context(const Record& r) const {
        return source_ + ":" + std::to_string(r.lineno);
    }

private:
    std::string source_;
    std::vector<Record> records_;
};

inline double to_double(const std::string& s, const std::string& ctx) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw config_error(ctx + ": not a number: '" + s + "'");
    }
}

} // namespace detail

/// Load a SOT cell model file: scalar "key value" lines plus repeated
/// "tmr_point nm=<thickness> pct=<tmr>" rows for the oxide calibration
/// table. Geometry keys carry explicit units in their names.
inline SotCellModel load_device_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw lookup_error("cannot open device file: " + path.string());
    detail::TechScanner scan(in, path.filename().string());

    SotCellModel m;
    m.tmr_table.clear();
    bool have_name = false;

    for (const auto& rec : scan.records()) {
        const std::string ctx = scan.context(rec);
        const std::string& key = rec.toks[0];
        if (key == "tmr_point") {
            const auto kv = detail::kv_fields(rec.toks, 1, ctx);
            const double nm = detail::to_double(kv.at("nm"), ctx);
            const double pct = detail::to_double(kv.at("pct"), ctx);
            m.tmr_table.emplace_back(nm * 1e-9, pct);
            continue;
        }
        if (rec.toks.size() != 2) throw config_error(ctx + ": expected 'key value'");
        const std::string& val = rec.toks[1];
        if (key == "name") {
            m.name = val;
            have_name = true;
            continue;
        }
        const double v = detail::to_double(val, ctx);
        if (key == "theta_sh") m.params.theta_sh = v;
        else if (key == "t_fl_nm") m.params.t_fl = v * 1e-9;
        else if (key == "w_sot_nm") m.params.w_sot = v * 1e-9;
        else if (key == "t_sot_nm") m.params.t_sot = v * 1e-9;
        else if (key == "t_mgo_nm") m.params.t_mgo = v * 1e-9;
        else if (key == "d_mtj_nm") m.params.d_mtj = v * 1e-9;
        else if (key == "m_s_a_m") m.params.m_s = v;
        else if (key == "h_k_eff_a_m") m.params.h_k_eff = v;
        else if (key == "h_x_a_m") m.params.h_x = v;
        else if (key == "temperature_k") m.params.temperature = v;
        else if (key == "tau0_s") m.tau0 = v;
        else if (key == "t_sot_opt_nm") m.penalty.t_opt = v * 1e-9;
        else if (key == "kappa") m.penalty.kappa = v;
        else if (key == "kappa_sub_bulk") m.penalty.sub_bulk_ratio = v;
        else if (key == "k_tau") m.k_tau = v;
        else if (key == "i_write_a") m.i_write = v;
        else if (key == "v_read_v") m.v_read = v;
        else if (key == "ra_ohm_um2") m.ra_product = v * 1e-12;
        else if (key == "i_read_bias_a") m.i_read_bias = v;
        else if (key == "read_lat_floor_s") m.read_lat_floor = v;
        else if (key == "read_lat_slope_s_pct") m.read_lat_slope = v;
        else if (key == "p_rf") m.p_rf = v;
        else if (key == "t_hot_k") m.t_hot = v;
        else if (key == "tau_p_max_s") m.thresholds.tau_p_max = v;
        else if (key == "read_margin_min_a") m.thresholds.read_margin_min = v;
        else if (key == "t_ret_min_s") m.thresholds.t_ret_min = v;
        else throw config_error(ctx + ": unknown key '" + key + "'");
    }
    if (!have_name) throw config_error(path.string() + ": device file must set a name");
    if (m.tmr_table.empty()) m.tmr_table = default_tmr_table();
    m.params.validate();
    return m;
}

/// One memory technology family: an area scaling law plus array-level
/// energy/latency/leakage rows at the capacities an external array
/// estimator was run for.
struct MemoryTechFamily {
    std::string name;
    AreaModel area;
    double mbpa = 64.0 / kBytesPerMb;
    std::map<double, MemoryTechSpec> by_capacity;

    /// Spec at an exact capacity from the file.
    const MemoryTechSpec& at(double capacity_mb) const {
        auto it = by_capacity.find(capacity_mb);
        if (it == by_capacity.end()) {
            std::string msg = name + " has no data at " + format_double(capacity_mb) +
                              " MB; available:";
            for (const auto& [cap, spec] : by_capacity) msg += " " + format_double(cap);
            throw lookup_error(msg);
        }
        return it->second;
    }
};

/// Load a memory technology family file. Scalar keys set the family-wide
/// area model and access granularity; each "at capacity_mb=..." row carries
/// the array-level numbers for that capacity. MRAM-style files may split
/// energies by bit value (read_energy0_j/read_energy1_j); symmetric files
/// give read_energy_j/write_energy_j once.
inline MemoryTechFamily load_memory_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw lookup_error("cannot open memory tech file: " + path.string());
    detail::TechScanner scan(in, path.filename().string());

    MemoryTechFamily fam;
    for (const auto& rec : scan.records()) {
        const std::string ctx = scan.context(rec);
        const std::string& key = rec.toks[0];
        if (key == "at") {
            const auto kv = detail::kv_fields(rec.toks, 1, ctx);
            MemoryTechSpec spec;
            spec.name = fam.name;
            spec.mbpa = fam.mbpa;
            spec.capacity_mb = detail::to_double(kv.at("capacity_mb"), ctx);
            auto get = [&](const char* k) -> double {
                auto it = kv.find(k);
                if (it == kv.end())
                    throw config_error(ctx + ": missing field '" + std::string(k) + "'");
                return detail::to_double(it->second, ctx);
            };
            if (kv.count("read_energy_j")) {
                spec.read_energy_0 = spec.read_energy_1 = get("read_energy_j");
            } else {
                spec.read_energy_0 = get("read_energy0_j");
                spec.read_energy_1 = get("read_energy1_j");
            }
            if (kv.count("write_energy_j")) {
                spec.write_energy_0 = spec.write_energy_1 = get("write_energy_j");
            } else {
                spec.write_energy_0 = get("write_energy0_j");
                spec.write_energy_1 = get("write_energy1_j");
            }
            spec.read_latency = get("read_latency_s");
            spec.write_latency = get("write_latency_s");
            spec.leakage_power = get("leakage_w");
            spec.area_mm2 = area_at_capacity(fam.area, spec.capacity_mb);
            spec.validate();
            fam.by_capacity.emplace(spec.capacity_mb, std::move(spec));
            continue;
        }
        if (rec.toks.size() != 2) throw config_error(ctx + ": expected 'key value'");
        if (key == "name") {
            fam.name = rec.toks[1];
            fam.area.name = fam.name;
            continue;
        }
        const double v = detail::to_double(rec.toks[1], ctx);
        if (key == "mbpa_bytes") fam.mbpa = v / kBytesPerMb;
        else if (key == "cell_area_um2") fam.area.cell_area_um2 = v;
        else if (key == "periphery_base_mm2") fam.area.periphery_base_mm2 = v;
        else if (key == "periphery_per_mb_mm2") fam.area.periphery_per_mb_mm2 = v;
        else throw config_error(ctx + ": unknown key '" + key + "'");
    }
    if (fam.name.empty()) throw config_error(path.string() + ": memory file must set a name");
    if (fam.by_capacity.empty())
        throw config_error(path.string() + ": memory file needs at least one 'at' row");
    // Capacity rows were parsed before the area model in principle; recompute.
    for (auto& [cap, spec] : fam.by_capacity) spec.area_mm2 = area_at_capacity(fam.area, cap);
    return fam;
}

inline DramSpec load_dram_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw lookup_error("cannot open DRAM file: " + path.string());
    detail::TechScanner scan(in, path.filename().string());

    DramSpec d;
    for (const auto& rec : scan.records()) {
        const std::string ctx = scan.context(rec);
        if (rec.toks.size() != 2) throw config_error(ctx + ": expected 'key value'");
        const std::string& key = rec.toks[0];
        if (key == "name") {
            d.name = rec.toks[1];
            continue;
        }
        const double v = detail::to_double(rec.toks[1], ctx);
        if (key == "mbpa_bytes") d.mbpa = v / kBytesPerMb;
        else if (key == "read_energy_j") d.read_energy = v;
        else if (key == "write_energy_j") d.write_energy = v;
        else if (key == "access_latency_s") d.access_latency = v;
        else throw config_error(ctx + ": unknown key '" + key + "'");
    }
    d.validate();
    return d;
}

} // namespace sotmem
