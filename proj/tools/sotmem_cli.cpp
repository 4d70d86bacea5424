// sotmem command-line front end: workload bandwidth profiles, DRAM/GLB
// access-count sweeps, SOT-MRAM device sweeps and yield analysis, and
// system-level technology comparisons. All subcommands emit deterministic
// CSV or JSON tables.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sotmem/access.hpp"
#include "sotmem/bandwidth.hpp"
#include "sotmem/device.hpp"
#include "sotmem/syseval.hpp"
#include "sotmem/table.hpp"
#include "sotmem/techfile.hpp"
#include "sotmem/workload.hpp"
#include "sotmem/zoo.hpp"

namespace fs = std::filesystem;
using namespace sotmem;

namespace {

struct CommonOpts {
    std::string data_dir = "data";
    std::string out;
    std::string format = "csv";

    fs::path workloads_dir() const { return fs::path(data_dir) / "workloads"; }
    fs::path tech_dir() const { return fs::path(data_dir) / "tech"; }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--data-dir", opts.data_dir, "Directory holding workloads/ and tech/");
    cmd->add_option("--out", opts.out, "Output file (default: stdout)");
    cmd->add_option("--format", opts.format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
}

void emit(const Table& table, const CommonOpts& opts) {
    if (opts.out.empty()) {
        if (opts.format == "json")
            table.write_json(std::cout);
        else
            table.write_csv(std::cout);
    } else {
        table.write_file(opts.out, opts.format);
    }
}

std::string layer_dims(const LayerSpec& l) {
    std::ostringstream os;
    if (const auto* c = l.as_conv()) {
        os << "of=" << c->out_h << "x" << c->out_w << " k=" << c->kernel_h << "x"
           << c->kernel_w << " if=" << c->in_h << "x" << c->in_w;
    } else if (const auto* g = l.as_gemm()) {
        os << "K=" << g->input_rows << " M=" << g->shared_dim << " N=" << g->output_cols;
    } else {
        os << "sql=" << l.as_softmax()->seq_len;
    }
    return os.str();
}

Phase parse_phase(const std::string& s) {
    if (s == "inference") return Phase::inference;
    if (s == "training") return Phase::training;
    throw config_error("phase must be 'inference' or 'training'");
}

std::vector<Workload> select_models(const Zoo& zoo, const std::vector<std::string>& selectors,
                                    int batch) {
    if (selectors.empty()) throw config_error("no models selected; use --models");
    std::vector<std::string> names;
    for (const auto& sel : selectors)
        for (const auto& n : zoo.resolve(sel))
            if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
    std::vector<Workload> out;
    for (const auto& n : names) {
        Workload w = zoo.get(n);
        w.batch_size = batch;
        out.push_back(std::move(w));
    }
    return out;
}

// ---------------------------------------------------------------- zoo ----

int cmd_zoo_list(const CommonOpts& opts) {
    Zoo zoo(opts.workloads_dir());
    Table t({"model", "kind", "layers", "parameters_millions"});
    t.provenance("command", "zoo list");
    t.provenance("data_dir", opts.data_dir);
    for (const auto& name : zoo.names()) {
        const Workload& w = zoo.get(name);
        t.add_row({name, std::string(w.kind == WorkloadKind::cv ? "cv" : "nlp"),
                   static_cast<std::int64_t>(w.layers.size()), parameter_count(w) / 1e6});
    }
    emit(t, opts);
    return 0;
}

// ---------------------------------------------------------- bandwidth ----

struct BandwidthOpts {
    CommonOpts common;
    std::vector<std::string> models;
    std::vector<int> arrays{32, 64, 128, 256};
    int dw = 4;
    double clock_hz = 1e9;
    bool capped = false;
    bool per_layer = false;
};

int cmd_bandwidth(const BandwidthOpts& o) {
    Zoo zoo(o.common.workloads_dir());
    auto models = select_models(zoo, o.models, 1);

    std::vector<std::string> cols =
        o.per_layer
            ? std::vector<std::string>{"model", "array", "layer", "dims",
                                       "read_bw_bytes_per_cycle", "write_bw_bytes_per_cycle",
                                       "oi_ops_per_byte"}
            : std::vector<std::string>{"model", "array", "max_read_bw_bytes_per_cycle",
                                       "max_write_bw_bytes_per_cycle",
                                       "mean_read_bw_bytes_per_cycle",
                                       "mean_write_bw_bytes_per_cycle", "max_read_layer",
                                       "max_read_dims", "max_write_layer", "max_write_dims"};
    Table t(cols);
    t.provenance("command", "bandwidth");
    t.provenance("dw_bytes", std::to_string(o.dw));
    t.provenance("clock_hz", format_double(o.clock_hz));
    t.provenance("pe_mapping", o.capped ? "channel_capped" : "raw");

    for (const auto& w : models) {
        for (int a : o.arrays) {
            AcceleratorConfig acc;
            acc.array_height = a;
            acc.array_width = a;
            acc.clock_hz = o.clock_hz;
            acc.datum_bytes = o.dw;
            const auto prof = workload_bw_profile(w, acc, o.capped);
            if (o.per_layer) {
                for (std::size_t i = 0; i < w.layers.size(); ++i)
                    t.add_row({w.name, static_cast<std::int64_t>(a), w.layers[i].name,
                               layer_dims(w.layers[i]), prof.per_layer[i].read_bw,
                               prof.per_layer[i].write_bw, prof.per_layer[i].oi});
            } else {
                t.add_row({w.name, static_cast<std::int64_t>(a), prof.max_read_bw,
                           prof.max_write_bw, prof.mean_read_bw, prof.mean_write_bw,
                           w.layers[prof.max_read_layer].name,
                           layer_dims(w.layers[prof.max_read_layer]),
                           w.layers[prof.max_write_layer].name,
                           layer_dims(w.layers[prof.max_write_layer])});
            }
        }
    }
    emit(t, o.common);
    return 0;
}

// -------------------------------------------------------------- access ----

struct AccessOpts {
    CommonOpts common;
    std::vector<std::string> models;
    std::vector<double> glb_mb;
    std::vector<int> batches;
    std::string phase = "inference";
    int dw = 4;
    double mbpa_dram_bytes = 64.0;
    double mbpa_glb_bytes = 64.0;
    bool per_layer = false;
    bool apply_ceil = false;
};

int cmd_access(const AccessOpts& o) {
    Zoo zoo(o.common.workloads_dir());
    const Phase phase = parse_phase(o.phase);
    AccessConfig cfg;
    cfg.mbpa_dram = o.mbpa_dram_bytes / kBytesPerMb;
    cfg.mbpa_glb = o.mbpa_glb_bytes / kBytesPerMb;

    const bool batch_sweep = o.batches.size() > 1;
    std::vector<double> sizes = o.glb_mb;
    if (sizes.empty()) sizes = {2, 4, 8, 16, 32, 64, 128, 256};
    std::vector<int> batches = o.batches;
    if (batches.empty()) batches = {16};
    if (batch_sweep && sizes.size() != 1)
        throw config_error("batch sweep needs exactly one --glb size");

    auto models = select_models(zoo, o.models, batches.front());

    if (o.per_layer) {
        Table t({"model", "layer", "phase", "glb_mb", "batch", "rd_dram", "wr_dram",
                 "rd_glb", "wr_glb"});
        t.provenance("command", "access");
        t.provenance("phase", o.phase);
        for (const auto& w : models) {
            for (double size : sizes) {
                AccessConfig c = cfg;
                c.glb_mb = size;
                AccessCounts counts = access_counts(w, c, phase, o.dw);
                if (o.apply_ceil) counts = ceil_counts(counts);
                for (std::size_t i = 0; i < counts.per_layer.size(); ++i) {
                    const auto& la = counts.per_layer[i];
                    t.add_row({w.name, w.layers[i].name, o.phase, size,
                               static_cast<std::int64_t>(w.batch_size), la.rd_dram,
                               la.wr_dram, la.rd_glb, la.wr_glb});
                }
            }
        }
        emit(t, o.common);
        return 0;
    }

    if (batch_sweep) {
        Table t({"model", "phase", "glb_mb", "batch", "rd_dram", "wr_dram", "rd_glb",
                 "wr_glb", "dram_total", "increase_pct_vs_batch16_4mb"});
        t.provenance("command", "access");
        t.provenance("phase", o.phase);
        t.provenance("glb_mb", format_double(sizes.front()));
        for (const auto& w : models) {
            AccessConfig c = cfg;
            c.glb_mb = sizes.front();
            const auto sweep = sweep_batch(w, batches, c, phase, o.dw);
            for (const auto& row : sweep.rows) {
                const auto& tt = row.counts.totals;
                t.add_row({w.name, o.phase, sizes.front(),
                           static_cast<std::int64_t>(row.batch), tt.rd_dram, tt.wr_dram,
                           tt.rd_glb, tt.wr_glb, tt.dram_total(), row.increase_pct});
            }
        }
        emit(t, o.common);
        return 0;
    }

    Table t({"model", "phase", "glb_mb", "batch", "rd_dram", "wr_dram", "rd_glb", "wr_glb",
             "dram_total", "reduction_pct_vs_2mb_batch16"});
    t.provenance("command", "access");
    t.provenance("phase", o.phase);
    t.provenance("batch", std::to_string(batches.front()));
    for (const auto& w : models) {
        const auto sweep = sweep_glb(w, sizes, cfg, phase, o.dw);
        for (const auto& row : sweep.rows) {
            const auto& tt = row.counts.totals;
            t.add_row({w.name, o.phase, row.glb_mb,
                       static_cast<std::int64_t>(w.batch_size), tt.rd_dram, tt.wr_dram,
                       tt.rd_glb, tt.wr_glb, tt.dram_total(), row.reduction_pct});
        }
    }
    emit(t, o.common);
    return 0;
}

// ---------------------------------------------------------------- dtco ----

struct DtcoOpts {
    CommonOpts common;
    std::string device = "sot_dtco";
    std::string sweep;
    double from = 0.0;
    double to = 0.0;
    int points = 25;
    bool log_scale = false;
    bool montecarlo = false;
    int samples = 5000;
    double sigma = 0.05;
    double trunc = 4.0;
    std::uint64_t seed = 1;
};

SotCellModel load_device(const CommonOpts& common, const std::string& name) {
    fs::path p = name;
    if (!fs::exists(p)) p = common.tech_dir() / (name + ".dev");
    if (!fs::exists(p)) {
        std::string msg = "unknown device '" + name + "'; available:";
        if (fs::is_directory(common.tech_dir()))
            for (const auto& e : fs::directory_iterator(common.tech_dir()))
                if (e.path().extension() == ".dev") msg += " " + e.path().stem().string();
        throw lookup_error(msg);
    }
    return load_device_file(p);
}

int cmd_dtco(const DtcoOpts& o) {
    SotCellModel model = load_device(o.common, o.device);

    if (o.montecarlo) {
        MonteCarloConfig cfg;
        cfg.samples = o.samples;
        cfg.sigma_frac = o.sigma;
        cfg.trunc_sigma = o.trunc;
        cfg.seed = o.seed;
        const auto rep = monte_carlo(model, cfg);
        Table t({"quantity", "value", "unit"});
        t.provenance("command", "dtco montecarlo");
        t.provenance("device", model.name);
        t.provenance("samples", std::to_string(o.samples));
        t.provenance("sigma_frac", format_double(o.sigma));
        t.provenance("trunc_sigma", format_double(o.trunc));
        t.provenance("seed", std::to_string(o.seed));
        t.add_row({std::string("write_yield"), rep.write_yield * 100.0, std::string("%")});
        t.add_row({std::string("read_yield"), rep.read_yield * 100.0, std::string("%")});
        t.add_row({std::string("retention_yield"), rep.retention_yield * 100.0, std::string("%")});
        t.add_row({std::string("i_c_mean"), rep.i_c.mean, std::string("A")});
        t.add_row({std::string("i_c_min"), rep.i_c.min, std::string("A")});
        t.add_row({std::string("i_c_max"), rep.i_c.max, std::string("A")});
        t.add_row({std::string("tau_p_mean"), rep.tau_p.mean, std::string("s")});
        t.add_row({std::string("tau_p_max"), rep.tau_p.max, std::string("s")});
        t.add_row({std::string("read_margin_mean"), rep.read_margin.mean, std::string("A")});
        t.add_row({std::string("read_margin_min"), rep.read_margin.min, std::string("A")});
        t.add_row({std::string("delta_mean"), rep.delta.mean, std::string("")});
        t.add_row({std::string("delta_min"), rep.delta.min, std::string("")});
        t.add_row({std::string("t_ret_min"), rep.t_ret.min, std::string("s")});
        t.add_row({std::string("corner_write_i_c"), rep.corner_write_i_c, std::string("A")});
        t.add_row({std::string("corner_write_tau_p"), rep.corner_write_tau_p, std::string("s")});
        t.add_row({std::string("corner_read_margin"), rep.corner_read_margin, std::string("A")});
        t.add_row({std::string("corner_retention_delta"), rep.corner_retention_delta,
                   std::string("")});
        t.add_row({std::string("corner_retention_t_ret"), rep.corner_retention_t_ret,
                   std::string("s")});
        emit(t, o.common);
        return 0;
    }

    if (o.sweep.empty())
        throw config_error("dtco needs --sweep <knob> or --montecarlo");
    static const std::vector<std::string> knobs{"theta_sh", "w_sot", "t_sot",
                                                "t_fl", "d_mtj", "t_mgo"};
    if (std::find(knobs.begin(), knobs.end(), o.sweep) == knobs.end())
        throw config_error("unknown sweep knob '" + o.sweep +
                           "' (theta_sh, w_sot, t_sot, t_fl, d_mtj, t_mgo)");
    if (o.points < 2 || o.from <= 0.0 || o.to <= o.from)
        throw config_error("sweep needs --from < --to (positive) and --points >= 2");

    Table t({"knob", "value", "j_c_a_per_m2", "i_c_a", "tau_p_s", "delta", "t_ret_s",
             "tmr_pct", "read_latency_s", "status"});
    t.provenance("command", "dtco sweep");
    t.provenance("device", model.name);
    t.provenance("knob", o.sweep);
    t.provenance("from", format_double(o.from));
    t.provenance("to", format_double(o.to));
    t.provenance("points", std::to_string(o.points));
    t.provenance("scale", o.log_scale ? "log" : "linear");

    for (int i = 0; i < o.points; ++i) {
        const double f = static_cast<double>(i) / (o.points - 1);
        const double v = o.log_scale ? o.from * std::pow(o.to / o.from, f)
                                     : o.from + (o.to - o.from) * f;
        SotDeviceParams p = model.params;
        // Geometry knobs are given in nm on the command line.
        if (o.sweep == "theta_sh") p.theta_sh = v;
        else if (o.sweep == "w_sot") p.w_sot = v * 1e-9;
        else if (o.sweep == "t_sot") p.t_sot = v * 1e-9;
        else if (o.sweep == "t_fl") p.t_fl = v * 1e-9;
        else if (o.sweep == "d_mtj") p.d_mtj = v * 1e-9;
        else if (o.sweep == "t_mgo") p.t_mgo = v * 1e-9;

        std::string status = "ok";
        double j_c = 0.0, i_c = 0.0, tau_p = 0.0, dlt = 0.0, ret = 0.0;
        const double tmr = tmr_from_oxide(p.t_mgo, model.tmr_table);
        const double rd_lat = read_latency_from_tmr(tmr, model.read_lat_floor,
                                                    model.read_lat_slope);
        try {
            j_c = critical_current_density(p);
            i_c = j_c * p.w_sot * model.penalty.effective_thickness(p.t_sot);
            dlt = thermal_stability(p);
            ret = retention_window(dlt, model.p_rf, model.tau0);
            const double j_sw = model.write_density(p);
            if (j_sw > j_c) {
                tau_p = model.k_tau / (j_sw - j_c);
            } else {
                status = "sub_critical_write";
            }
        } catch (const config_error&) {
            status = "sub_critical_field";
        }
        t.add_row({o.sweep, v, j_c, i_c,
                   status == "ok" ? Table::Cell(tau_p) : Table::Cell(std::string("")),
                   dlt, ret, tmr, rd_lat, status});
    }
    emit(t, o.common);
    return 0;
}

// ------------------------------------------------------------ evaluate ----

struct EvaluateOpts {
    CommonOpts common;
    std::vector<std::string> models;
    std::vector<std::string> techs{"sram", "sot", "sotopt"};
    std::string baseline = "sram";
    double capacity_mb = 64.0;
    std::string phase = "inference";
    std::string dram = "hbm3";
    int dw = 4;
    int batch = 16;
    std::string time_model = "serial";
    bool area_only = false;
    bool detail = false;
};

int cmd_evaluate(const EvaluateOpts& o) {
    std::vector<MemoryTechFamily> families;
    for (const auto& name : o.techs) {
        fs::path p = o.common.tech_dir() / (name + ".mem");
        if (!fs::exists(p)) {
            std::string msg = "unknown memory technology '" + name + "'; available:";
            if (fs::is_directory(o.common.tech_dir()))
                for (const auto& e : fs::directory_iterator(o.common.tech_dir()))
                    if (e.path().extension() == ".mem") msg += " " + e.path().stem().string();
            throw lookup_error(msg);
        }
        families.push_back(load_memory_file(p));
    }

    if (o.area_only) {
        const MemoryTechFamily* base = nullptr;
        for (const auto& f : families)
            if (f.name == o.baseline) base = &f;
        if (!base) throw lookup_error("baseline technology '" + o.baseline + "' not selected");
        Table t({"tech", "capacity_mb", "area_mm2", "area_ratio_vs_" + o.baseline});
        t.provenance("command", "evaluate area");
        t.provenance("capacity_mb", format_double(o.capacity_mb));
        const double base_area = area_at_capacity(base->area, o.capacity_mb);
        for (const auto& f : families)
            t.add_row({f.name, o.capacity_mb, area_at_capacity(f.area, o.capacity_mb),
                       area_at_capacity(f.area, o.capacity_mb) / base_area});
        emit(t, o.common);
        return 0;
    }

    Zoo zoo(o.common.workloads_dir());
    auto models = select_models(zoo, o.models, o.batch);
    const Phase phase = parse_phase(o.phase);
    const DramSpec dram = load_dram_file(o.common.tech_dir() / (o.dram + ".dram"));
    const ExecTimeModel tm =
        o.time_model == "overlapped" ? ExecTimeModel::overlapped : ExecTimeModel::serial;

    std::vector<MemoryTechSpec> specs;
    for (const auto& f : families) specs.push_back(f.at(o.capacity_mb));

    const auto cmp = compare_techs(models, specs, dram, phase, o.baseline, tm, o.dw);

    if (o.detail) {
        Table t({"model", "phase", "tech", "dram_dynamic_j", "glb_dynamic_j",
                 "glb_leakage_j", "total_energy_j", "dram_latency_s", "glb_latency_s",
                 "total_latency_s", "area_mm2"});
        t.provenance("command", "evaluate detail");
        t.provenance("phase", o.phase);
        t.provenance("capacity_mb", format_double(o.capacity_mb));
        t.provenance("batch", std::to_string(o.batch));
        t.provenance("time_model", o.time_model);
        for (const auto& e : cmp.entries)
            t.add_row({e.model, phase_name(e.phase), e.tech, e.dram_dynamic_j,
                       e.glb_dynamic_j, e.glb_leakage_j, e.total_energy_j(),
                       e.dram_latency_s, e.glb_latency_s, e.total_latency_s(), e.area_mm2});
        emit(t, o.common);
        return 0;
    }

    Table t({"model", "phase", "tech", "energy_ratio_vs_" + o.baseline,
             "latency_ratio_vs_" + o.baseline, "area_ratio_vs_" + o.baseline});
    t.provenance("command", "evaluate");
    t.provenance("phase", o.phase);
    t.provenance("capacity_mb", format_double(o.capacity_mb));
    t.provenance("batch", std::to_string(o.batch));
    t.provenance("baseline", o.baseline);
    t.provenance("time_model", o.time_model);
    for (const auto& r : cmp.ratios)
        t.add_row({r.model, phase_name(r.phase), r.tech, r.energy_ratio, r.latency_ratio,
                   r.area_ratio});
    for (const auto& r : cmp.geomean)
        t.add_row({r.model, phase_name(r.phase), r.tech, r.energy_ratio, r.latency_ratio,
                   r.area_ratio});
    emit(t, o.common);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Analytical memory-hierarchy co-design toolkit for systolic AI accelerators"};
    app.require_subcommand(1);

    // zoo
    CommonOpts zoo_opts;
    auto* zoo_cmd = app.add_subcommand("zoo", "Workload zoo utilities");
    zoo_cmd->require_subcommand(1);
    auto* zoo_list = zoo_cmd->add_subcommand("list", "List available workloads");
    add_common(zoo_list, zoo_opts);

    // bandwidth
    BandwidthOpts bw;
    auto* bw_cmd = app.add_subcommand("bandwidth", "Per-layer GLB bandwidth demand");
    add_common(bw_cmd, bw.common);
    bw_cmd->add_option("--models", bw.models, "Model names or all/all-cv/all-nlp");
    bw_cmd->add_option("--array", bw.arrays, "Square PE array sizes");
    bw_cmd->add_option("--dw", bw.dw, "Datum width in bytes");
    bw_cmd->add_option("--clock", bw.clock_hz, "Accelerator clock in Hz");
    bw_cmd->add_flag("--capped", bw.capped, "Cap active PEs by layer channel count");
    bw_cmd->add_flag("--per-layer", bw.per_layer, "Emit one row per layer");

    // access
    AccessOpts ac;
    auto* ac_cmd = app.add_subcommand("access", "DRAM/GLB access counts and sweeps");
    add_common(ac_cmd, ac.common);
    ac_cmd->add_option("--models", ac.models, "Model names or all/all-cv/all-nlp");
    ac_cmd->add_option("--glb", ac.glb_mb, "GLB sizes in MB");
    ac_cmd->add_option("--batch", ac.batches, "Batch sizes");
    ac_cmd->add_option("--phase", ac.phase, "inference or training")
        ->check(CLI::IsMember({"inference", "training"}));
    ac_cmd->add_option("--dw", ac.dw, "Datum width in bytes");
    ac_cmd->add_option("--mbpa-dram-bytes", ac.mbpa_dram_bytes, "Bytes per DRAM access");
    ac_cmd->add_option("--mbpa-glb-bytes", ac.mbpa_glb_bytes, "Bytes per GLB access");
    ac_cmd->add_flag("--per-layer", ac.per_layer, "Emit one row per layer");
    ac_cmd->add_flag("--ceil", ac.apply_ceil, "Report integer (ceiled) access counts");

    // dtco
    DtcoOpts dt;
    auto* dt_cmd = app.add_subcommand("dtco", "SOT-MRAM device sweeps and yield analysis");
    add_common(dt_cmd, dt.common);
    dt_cmd->add_option("--device", dt.device, "Device name (data/tech/<name>.dev) or path");
    dt_cmd->add_option("--sweep", dt.sweep, "Knob: theta_sh w_sot t_sot t_fl d_mtj t_mgo");
    dt_cmd->add_option("--from", dt.from, "Sweep start (nm for geometry knobs)");
    dt_cmd->add_option("--to", dt.to, "Sweep end");
    dt_cmd->add_option("--points", dt.points, "Sweep points");
    dt_cmd->add_flag("--log", dt.log_scale, "Logarithmic sweep spacing");
    dt_cmd->add_flag("--montecarlo", dt.montecarlo, "Run process-variation yield analysis");
    dt_cmd->add_option("--samples", dt.samples, "Monte Carlo samples");
    dt_cmd->add_option("--sigma", dt.sigma, "Relative sigma of varied dimensions");
    dt_cmd->add_option("--trunc", dt.trunc, "Truncation in sigmas");
    dt_cmd->add_option("--seed", dt.seed, "RNG seed");

    // evaluate
    EvaluateOpts ev;
    auto* ev_cmd = app.add_subcommand("evaluate", "System-level PPA comparison");
    add_common(ev_cmd, ev.common);
    ev_cmd->add_option("--models", ev.models, "Model names or all/all-cv/all-nlp");
    ev_cmd->add_option("--techs", ev.techs, "Memory technologies to compare");
    ev_cmd->add_option("--baseline", ev.baseline, "Baseline technology name");
    ev_cmd->add_option("--capacity", ev.capacity_mb, "GLB capacity in MB");
    ev_cmd->add_option("--phase", ev.phase, "inference or training")
        ->check(CLI::IsMember({"inference", "training"}));
    ev_cmd->add_option("--dram", ev.dram, "DRAM spec name (data/tech/<name>.dram)");
    ev_cmd->add_option("--dw", ev.dw, "Datum width in bytes");
    ev_cmd->add_option("--batch", ev.batch, "Batch size");
    ev_cmd->add_option("--time-model", ev.time_model, "serial or overlapped")
        ->check(CLI::IsMember({"serial", "overlapped"}));
    ev_cmd->add_flag("--area", ev.area_only, "Emit the area table only");
    ev_cmd->add_flag("--detail", ev.detail, "Emit absolute energy/latency splits");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (zoo_list->parsed()) return cmd_zoo_list(zoo_opts);
        if (bw_cmd->parsed()) return cmd_bandwidth(bw);
        if (ac_cmd->parsed()) return cmd_access(ac);
        if (dt_cmd->parsed()) return cmd_dtco(dt);
        if (ev_cmd->parsed()) return cmd_evaluate(ev);
    } catch (const lookup_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
