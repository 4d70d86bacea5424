#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "sotmem/workload.hpp"

namespace sotmem {

/// GLB bandwidth a layer demands to keep every PE busy, plus the roofline
/// quantities it derives from. Bandwidths are bytes per accelerator cycle.
struct BandwidthDemand {
    double read_bw = 0.0;
    double write_bw = 0.0;
    double oi = 0.0;        // ops per byte read
    double peak_ops = 0.0;  // ops per second
};

/// Theoretical peak of an H x W PE array: one MAC per PE per cycle.
inline double peak_performance(const AcceleratorConfig& acc) {
    acc.validate();
    return static_cast<double>(acc.array_height) * acc.array_width * acc.clock_hz;
}

/// Operational intensity of a conv layer under row-stationary mapping.
inline double conv_oi(const ConvLayerSpec& l, int datum_bytes) {
    l.validate();
    const double kk = static_cast<double>(l.kernel_h) * l.kernel_w;
    const double num = kk * l.out_h * l.out_w;
    const double den = datum_bytes * (kk + static_cast<double>(l.in_h) * l.in_w);
    return num / den;
}

/// PEs a conv layer can actually occupy given its channel count; the raw
/// expressions assume unlimited channels per iteration.
inline double conv_active_pes(const ConvLayerSpec& l, const AcceleratorConfig& acc) {
    const double per_channel =
        static_cast<double>(l.kernel_h) * l.kernel_w * l.out_h * l.out_w;
    const double total = static_cast<double>(acc.array_height) * acc.array_width;
    return std::min(total, per_channel * l.in_channels);
}

/// Read bandwidth demand of a conv layer. Returns bytes/cycle by default;
/// bytes/sec when per_cycle is false. channel_capped limits the active PEs
/// to what the layer's input channels can fill.
inline double conv_read_bw(const ConvLayerSpec& l, const AcceleratorConfig& acc,
                           bool per_cycle = true, bool channel_capped = false) {
    l.validate();
    acc.validate();
    const double kk = static_cast<double>(l.kernel_h) * l.kernel_w;
    const double pes = channel_capped
                           ? conv_active_pes(l, acc)
                           : static_cast<double>(acc.array_height) * acc.array_width;
    const double bw_cycle = (kk + static_cast<double>(l.in_h) * l.in_w) * acc.datum_bytes /
                            (kk * l.out_h * l.out_w) * pes;
    return per_cycle ? bw_cycle : bw_cycle * acc.clock_hz;
}

/// Write bandwidth demand of a conv layer in bytes/cycle.
inline double conv_write_bw(const ConvLayerSpec& l, const AcceleratorConfig& acc,
                            bool channel_capped = false) {
    l.validate();
    acc.validate();
    const double pes = channel_capped
                           ? conv_active_pes(l, acc)
                           : static_cast<double>(acc.array_height) * acc.array_width;
    return pes * acc.datum_bytes / (static_cast<double>(l.kernel_h) * l.kernel_w);
}

/// Peak GLB read/write demand of a GEMM on a weight-stationary systolic
/// array. Eight cases depending on how the weight matrix (M x N) and the
/// input stream depth K compare against the array dims; ties take the ">="
/// branch. Expressions are in elements/cycle internally, scaled to bytes.
inline BandwidthDemand fc_bandwidth(const GemmLayerSpec& l, const AcceleratorConfig& acc,
                                    int datum_bytes) {
    l.validate();
    acc.validate();
    const double k = static_cast<double>(l.input_rows);
    const double m = static_cast<double>(l.shared_dim);
    const double n = static_cast<double>(l.output_cols);
    const double h = acc.array_height;
    const double w = acc.array_width;

    double rd = 0.0, wr = 0.0;
    if (m < h && n < w) {
        if (k < w) {
            rd = (m * n + k * m) / (n + k);
            wr = k * n / (2 * n + k - 1);
        } else {
            rd = (m * n + w * m) / (n + w);
            wr = w * n / (2 * n + k - 1);
        }
    } else if (m < h && n >= w) {
        if (k < w) {
            rd = (m * w + k * m) / (n + k);
            wr = k * w / (2 * w + k - 1);
        } else {
            rd = (m * w + w * m) / (2 * w);
            wr = w * w / (2 * w + k - 1);
        }
    } else if (m >= h && n < w) {
        if (k < w) {
            rd = (h * n + k * h) / (n + k);
            wr = k * n / (2 * n + k - 1);
        } else {
            rd = (h * n + w * h) / (w + n);
            wr = w * n / (2 * n + k - 1);
        }
    } else {
        if (k < w) {
            rd = (h * w + w * h) / (w + k);
            wr = w * n / (2 * n + k - 1);
        } else {
            rd = (h * w + w * h) / (2 * w);
            wr = w * w / (2 * w + k - 1);
        }
    }

    BandwidthDemand d;
    d.read_bw = rd * datum_bytes;
    d.write_bw = wr * datum_bytes;
    d.peak_ops = peak_performance(acc);
    d.oi = h * w / d.read_bw;
    return d;
}

/// Softmax feeds one exponential unit per SFU lane per cycle.
inline double softmax_bw(const AcceleratorConfig& acc, int datum_bytes) {
    acc.validate();
    return static_cast<double>(datum_bytes) * acc.effective_sfu_width();
}

/// Bandwidth demand of one layer of any kind, bytes/cycle.
inline BandwidthDemand layer_bandwidth(const LayerSpec& layer, const AcceleratorConfig& acc,
                                       bool channel_capped = false) {
    BandwidthDemand d;
    if (const auto* c = layer.as_conv()) {
        d.read_bw = conv_read_bw(*c, acc, true, channel_capped);
        d.write_bw = conv_write_bw(*c, acc, channel_capped);
        d.oi = conv_oi(*c, acc.datum_bytes);
        d.peak_ops = peak_performance(acc);
    } else if (const auto* g = layer.as_gemm()) {
        d = fc_bandwidth(*g, acc, acc.datum_bytes);
    } else {
        // SFU-bound: exponentials stream in at SFU width; the normalized
        // outputs drain through the accumulate/divide stage, so the GLB
        // write demand is not PE-array limited.
        d.read_bw = softmax_bw(acc, acc.datum_bytes);
        d.write_bw = 0.0;
        d.oi = 1.0 / acc.datum_bytes;
        d.peak_ops = peak_performance(acc);
    }
    return d;
}

struct BandwidthProfile {
    std::vector<BandwidthDemand> per_layer;
    double max_read_bw = 0.0;
    double max_write_bw = 0.0;
    double mean_read_bw = 0.0;
    double mean_write_bw = 0.0;
    std::size_t max_read_layer = 0;
    std::size_t max_write_layer = 0;
};

/// Per-layer demand plus the max/mean summary used by the per-model tables.
inline BandwidthProfile workload_bw_profile(const Workload& w, const AcceleratorConfig& acc,
                                            bool channel_capped = false) {
    w.validate();
    BandwidthProfile p;
    p.per_layer.reserve(w.layers.size());
    for (std::size_t i = 0; i < w.layers.size(); ++i) {
        BandwidthDemand d = layer_bandwidth(w.layers[i], acc, channel_capped);
        if (d.read_bw > p.max_read_bw) {
            p.max_read_bw = d.read_bw;
            p.max_read_layer = i;
        }
        if (d.write_bw > p.max_write_bw) {
            p.max_write_bw = d.write_bw;
            p.max_write_layer = i;
        }
        p.mean_read_bw += d.read_bw;
        p.mean_write_bw += d.write_bw;
        p.per_layer.push_back(d);
    }
    p.mean_read_bw /= static_cast<double>(w.layers.size());
    p.mean_write_bw /= static_cast<double>(w.layers.size());
    return p;
}

} // namespace sotmem
