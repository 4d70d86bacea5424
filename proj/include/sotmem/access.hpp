#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "sotmem/workload.hpp"

namespace sotmem {

/// Memory-hierarchy knobs the access-count model depends on. ub_mb is the
/// spill threshold used when deciding whether a previous ofmap stayed
/// resident / how much of an oversized ofmap spills; it defaults to the GLB
/// capacity itself (<= 0 selects that default).
struct AccessConfig {
    double glb_mb = 2.0;
    double mbpa_dram = 64.0 / kBytesPerMb;  // MB moved per DRAM access
    double mbpa_glb = 64.0 / kBytesPerMb;   // MB moved per GLB access
    double ub_mb = 0.0;

    double effective_ub() const { return ub_mb > 0.0 ? ub_mb : glb_mb; }

    void validate() const {
        if (glb_mb <= 0.0 || mbpa_dram <= 0.0 || mbpa_glb <= 0.0)
            throw config_error("GLB capacity and mbpa values must be positive");
    }
};

enum class Phase { inference, training };

inline const char* phase_name(Phase p) {
    return p == Phase::inference ? "inference" : "training";
}

struct LayerAccess {
    double rd_dram = 0.0;
    double wr_dram = 0.0;
    double rd_glb = 0.0;
    double wr_glb = 0.0;

    double dram_total() const { return rd_dram + wr_dram; }
    double glb_total() const { return rd_glb + wr_glb; }
};

/// Access tallies are real-valued ratios (MB moved / MB per access); see
/// ceil_counts for integer reporting.
struct AccessCounts {
    std::vector<LayerAccess> per_layer;
    LayerAccess totals;
    double mbpa_dram = 0.0;  // provenance, checked against tech specs
    double mbpa_glb = 0.0;

    void add(const LayerAccess& la) {
        per_layer.push_back(la);
        totals.rd_dram += la.rd_dram;
        totals.wr_dram += la.wr_dram;
        totals.rd_glb += la.rd_glb;
        totals.wr_glb += la.wr_glb;
    }
};

/// Per-layer ceiling for integer access counts; totals are re-summed.
inline AccessCounts ceil_counts(const AccessCounts& in) {
    AccessCounts out;
    out.mbpa_dram = in.mbpa_dram;
    out.mbpa_glb = in.mbpa_glb;
    for (const auto& la : in.per_layer)
        out.add({std::ceil(la.rd_dram), std::ceil(la.wr_dram), std::ceil(la.rd_glb),
                 std::ceil(la.wr_glb)});
    return out;
}

/// Inference access counts for a layer chain.
///
/// Layer 1 pulls its ifmap and weights from DRAM, paying the spilled
/// fraction again when they exceed the GLB. Later layers re-read only their
/// weights while the previous ofmap stayed resident, otherwise the full
/// ifmap+weights with the same spill surcharge. Ofmaps write back to DRAM
/// only when they overflow (the spilled part) or at the last layer. Weights
/// stream directly from DRAM into the PE register files, so GLB traffic is
/// ifmap reads plus ofmap writes (plus staging the first layer's ifmap).
inline AccessCounts inference_access_counts(const std::vector<LayerFootprint>& fps,
                                            const AccessConfig& cfg) {
    cfg.validate();
    if (fps.empty()) throw config_error("access counting needs a non-empty layer list");
    const double glb = cfg.glb_mb;
    const double ub = cfg.effective_ub();
    const std::size_t n = fps.size();

    AccessCounts out;
    out.mbpa_dram = cfg.mbpa_dram;
    out.mbpa_glb = cfg.mbpa_glb;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& f = fps[i];
        LayerAccess la;
        la.rd_glb = f.ifmap_mb / cfg.mbpa_glb;
        if (i == 0) {
            la.wr_glb = (f.ifmap_mb + f.ofmap_mb) / cfg.mbpa_glb;
            const double iw = f.ifmap_mb + f.weight_mb;
            la.rd_dram = iw / cfg.mbpa_dram;
            if (iw > glb) la.rd_dram += (iw - glb) / cfg.mbpa_dram;
        } else {
            la.wr_glb = f.ofmap_mb / cfg.mbpa_glb;
            if (fps[i - 1].ofmap_mb <= ub) {
                la.rd_dram = f.weight_mb / cfg.mbpa_dram;
                if (f.weight_mb > glb) la.rd_dram += (f.weight_mb - glb) / cfg.mbpa_dram;
            } else {
                const double iw = f.ifmap_mb + f.weight_mb;
                la.rd_dram = (iw + std::max(0.0, iw - glb)) / cfg.mbpa_dram;
            }
        }
        if (i == n - 1) {
            la.wr_dram = f.ofmap_mb / cfg.mbpa_dram;
        } else if (f.ofmap_mb > glb) {
            la.wr_dram = std::max(0.0, f.ofmap_mb - ub) / cfg.mbpa_dram;
        }
        out.add(la);
    }
    return out;
}

/// Training access counts for a layer chain.
///
/// While the running total of forward plus gradient tensors still fits the
/// GLB, the pass reads the first ifmap and every layer's weights, and writes
/// the last ofmap. Once it overflows, the forward side behaves like
/// inference and each layer whose gradient bundle exceeds the GLB spills it
/// out and reads it back. Updated weights are written back for every layer.
/// GLB traffic per layer is fixed by the dataflow: the ifmap is read on both
/// passes plus once as the upstream gradient, the ofmap once, weights five
/// times; ifmap and ofmap are each written twice and weights three times.
inline AccessCounts training_access_counts(const std::vector<LayerFootprint>& fps,
                                           const AccessConfig& cfg) {
    cfg.validate();
    if (fps.empty()) throw config_error("access counting needs a non-empty layer list");
    const double glb = cfg.glb_mb;
    const std::size_t n = fps.size();

    AccessCounts out;
    out.mbpa_dram = cfg.mbpa_dram;
    out.mbpa_glb = cfg.mbpa_glb;
    double cum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& f = fps[i];
        cum += f.forward_mb() + f.backward_mb();

        LayerAccess la;
        la.rd_glb = (3 * f.ifmap_mb + f.ofmap_mb + 5 * f.weight_mb) / cfg.mbpa_glb;
        la.wr_glb = (2 * f.ifmap_mb + 2 * f.ofmap_mb + 3 * f.weight_mb) / cfg.mbpa_glb;

        double rd_fwd = 0.0, rd_bwd = 0.0, wr_fwd = 0.0;
        if (cum <= glb) {
            rd_fwd = f.weight_mb / cfg.mbpa_dram;
            if (i == 0) rd_fwd += f.ifmap_mb / cfg.mbpa_dram;
            if (i == n - 1) wr_fwd = f.ofmap_mb / cfg.mbpa_dram;
        } else {
            if (i != 0 && fps[i - 1].ofmap_mb <= glb) {
                rd_fwd = f.weight_mb / cfg.mbpa_dram;
            } else {
                const double iw = f.ifmap_mb + f.weight_mb;
                rd_fwd = iw / cfg.mbpa_dram;
                if (iw > glb) rd_fwd += (iw - glb) / cfg.mbpa_dram;
            }
            const double grads = f.backward_mb();
            if (grads > glb) {
                wr_fwd = grads / cfg.mbpa_dram;
                rd_bwd = grads / cfg.mbpa_dram;
            }
        }
        const double wr_bwd = f.weight_mb / cfg.mbpa_dram;

        la.rd_dram = rd_fwd + rd_bwd;
        la.wr_dram = wr_fwd + wr_bwd;
        out.add(la);
    }
    return out;
}

inline AccessCounts access_counts(const std::vector<LayerFootprint>& fps,
                                  const AccessConfig& cfg, Phase phase) {
    return phase == Phase::inference ? inference_access_counts(fps, cfg)
                                     : training_access_counts(fps, cfg);
}

inline AccessCounts access_counts(const Workload& w, const AccessConfig& cfg, Phase phase,
                                  int datum_bytes = 4) {
    return access_counts(workload_footprints(w, datum_bytes), cfg, phase);
}

/// DRAM access floor: every input and weight element read once, the final
/// ofmap written once; training additionally writes every layer's updated
/// weights.
inline LayerAccess algorithmic_minimum(const std::vector<LayerFootprint>& fps,
                                       const AccessConfig& cfg, Phase phase) {
    if (fps.empty()) throw config_error("access counting needs a non-empty layer list");
    double weights = 0.0;
    for (const auto& f : fps) weights += f.weight_mb;
    LayerAccess la;
    la.rd_dram = (fps.front().ifmap_mb + weights) / cfg.mbpa_dram;
    la.wr_dram = fps.back().ofmap_mb / cfg.mbpa_dram;
    if (phase == Phase::training) la.wr_dram += weights / cfg.mbpa_dram;
    return la;
}

struct GlbSweepRow {
    double glb_mb = 0.0;
    AccessCounts counts;
    double reduction_pct = 0.0;
};

struct GlbSweep {
    double baseline_glb_mb = 2.0;
    int baseline_batch = 16;
    AccessCounts baseline;
    std::vector<GlbSweepRow> rows;
};

/// Fraction of removable DRAM traffic eliminated relative to the baseline:
/// 100% means the run reached the algorithmic minimum.
inline double dram_reduction_pct(double total, double baseline_total, double minimum) {
    const double removable = baseline_total - minimum;
    if (removable <= 0.0) return 0.0;
    return 100.0 * (baseline_total - total) / removable;
}

/// GLB-capacity sweep against the 2 MB / batch-16 baseline.
inline GlbSweep sweep_glb(const Workload& w, const std::vector<double>& sizes_mb,
                          const AccessConfig& cfg, Phase phase, int datum_bytes = 4) {
    if (sizes_mb.empty()) throw config_error("GLB sweep needs at least one size");
    GlbSweep sweep;
    Workload base_wl = w;
    base_wl.batch_size = sweep.baseline_batch;
    const auto base_fps = workload_footprints(base_wl, datum_bytes);
    AccessConfig base_cfg = cfg;
    base_cfg.glb_mb = sweep.baseline_glb_mb;
    base_cfg.ub_mb = 0.0;
    sweep.baseline = access_counts(base_fps, base_cfg, phase);
    const double base_total = sweep.baseline.totals.dram_total();
    const auto base_min = algorithmic_minimum(base_fps, base_cfg, phase);

    const auto fps = workload_footprints(w, datum_bytes);
    for (double size : sizes_mb) {
        AccessConfig c = cfg;
        c.glb_mb = size;
        c.ub_mb = 0.0;
        GlbSweepRow row;
        row.glb_mb = size;
        row.counts = access_counts(fps, c, phase);
        row.reduction_pct = dram_reduction_pct(row.counts.totals.dram_total(), base_total,
                                               base_min.dram_total());
        sweep.rows.push_back(std::move(row));
    }
    return sweep;
}

struct BatchSweepRow {
    int batch = 0;
    AccessCounts counts;
    double increase_pct = 0.0;
};

struct BatchSweep {
    int baseline_batch = 16;
    double baseline_glb_mb = 4.0;
    AccessCounts baseline;
    std::vector<BatchSweepRow> rows;
};

/// Batch sweep against the batch-16 / 4 MB baseline.
inline BatchSweep sweep_batch(const Workload& w, const std::vector<int>& batches,
                              const AccessConfig& cfg, Phase phase, int datum_bytes = 4) {
    if (batches.empty()) throw config_error("batch sweep needs at least one batch size");
    BatchSweep sweep;
    Workload base_wl = w;
    base_wl.batch_size = sweep.baseline_batch;
    AccessConfig base_cfg = cfg;
    base_cfg.glb_mb = sweep.baseline_glb_mb;
    base_cfg.ub_mb = 0.0;
    sweep.baseline = access_counts(workload_footprints(base_wl, datum_bytes), base_cfg, phase);
    const double base_total = sweep.baseline.totals.dram_total();

    for (int b : batches) {
        Workload wl = w;
        wl.batch_size = b;
        BatchSweepRow row;
        row.batch = b;
        row.counts = access_counts(workload_footprints(wl, datum_bytes), cfg, phase);
        row.increase_pct =
            base_total > 0.0
                ? 100.0 * (row.counts.totals.dram_total() - base_total) / base_total
                : 0.0;
        sweep.rows.push_back(std::move(row));
    }
    return sweep;
}

} // namespace sotmem
