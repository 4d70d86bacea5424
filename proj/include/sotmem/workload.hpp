#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "sotmem/common.hpp"

namespace sotmem {

/// Systolic-array accelerator under study. The SFU is a 1 x sfu_width row of
/// exponential units used by softmax layers; it defaults to the array height.
struct AcceleratorConfig {
    int array_height = 256;       // PEs
    int array_width = 256;        // PEs
    double clock_hz = 1e9;
    int datum_bytes = 4;
    int sfu_width = 0;            // 0 -> use array_height

    int effective_sfu_width() const { return sfu_width > 0 ? sfu_width : array_height; }

    void validate() const {
        if (array_height <= 0 || array_width <= 0)
            throw config_error("accelerator array dims must be positive");
        if (clock_hz <= 0.0)
            throw config_error("accelerator clock must be positive");
        if (datum_bytes != 1 && datum_bytes != 2 && datum_bytes != 4 && datum_bytes != 8)
            throw config_error("datum width must be 1, 2, 4 or 8 bytes");
        if (sfu_width < 0)
            throw config_error("sfu width must be >= 0");
    }
};

/// One convolution layer. Output dims are stored explicitly rather than
/// derived from padding, which model zoo files state per layer.
struct ConvLayerSpec {
    int kernel_h = 1, kernel_w = 1;
    int in_h = 1, in_w = 1;
    int out_h = 1, out_w = 1;
    int in_channels = 1, out_channels = 1;
    int stride = 1;

    void validate() const {
        if (kernel_h < 1 || kernel_w < 1 || in_h < 1 || in_w < 1 || out_h < 1 ||
            out_w < 1 || in_channels < 1 || out_channels < 1 || stride < 1)
            throw config_error("conv layer dims must all be >= 1");
        if (out_h > in_h || out_w > in_w)
            throw config_error("conv ofmap cannot exceed ifmap");
    }
};

/// Dense / GEMM layer: input (input_rows x shared_dim) times weight
/// (shared_dim x output_cols).
struct GemmLayerSpec {
    std::int64_t input_rows = 1;   // K
    std::int64_t shared_dim = 1;   // M
    std::int64_t output_cols = 1;  // N

    // Attention score / attention-value GEMMs multiply two activations; the
    // "weight" operand then carries no trainable parameters. Tied output
    // projections reuse the embedding table and are likewise excluded from
    // parameter counts.
    bool weight_is_parameter = true;
    // Embedding lookups consume token indices, not a dense one-hot operand.
    bool ifmap_is_indices = false;
    // The ifmap is a tensor pinned on chip for the whole pass (cached encoder
    // output feeding cross-attention); it contributes no ifmap traffic.
    bool ifmap_is_resident = false;

    void validate() const {
        if (input_rows < 1 || shared_dim < 1 || output_cols < 1)
            throw config_error("gemm dims must all be >= 1");
    }
};

/// Softmax over an (seq_len x seq_len) attention-filter matrix, executed on
/// the SFU row.
struct SoftmaxLayerSpec {
    std::int64_t seq_len = 1;

    void validate() const {
        if (seq_len < 1) throw config_error("softmax seq_len must be >= 1");
    }
};

using LayerShape = std::variant<ConvLayerSpec, GemmLayerSpec, SoftmaxLayerSpec>;

struct LayerSpec {
    std::string name;
    LayerShape shape;

    const ConvLayerSpec* as_conv() const { return std::get_if<ConvLayerSpec>(&shape); }
    const GemmLayerSpec* as_gemm() const { return std::get_if<GemmLayerSpec>(&shape); }
    const SoftmaxLayerSpec* as_softmax() const { return std::get_if<SoftmaxLayerSpec>(&shape); }

    void validate() const {
        std::visit([](const auto& s) { s.validate(); }, shape);
    }
};

/// Transformer topology knobs; expanded into a flat layer list at load time.
struct TransformerConfig {
    int encoder_layers = 0;
    int decoder_layers = 0;
    int heads = 1;
    std::int64_t embed_dim = 1;
    std::int64_t ff_dim = 1;
    std::int64_t seq_len = 1;
    std::int64_t vocab_size = 1;
    // Encoder output feeding decoder cross-attention K/V projections is held
    // on chip once computed (cached) or re-streamed per decoder layer.
    bool cached_cross_kv = true;

    void validate() const {
        if (encoder_layers < 0 || decoder_layers < 0)
            throw config_error("encoder/decoder layer counts must be >= 0");
        if (encoder_layers == 0 && decoder_layers == 0)
            throw config_error("transformer needs at least one encoder or decoder layer");
        if (heads < 1 || embed_dim < 1 || ff_dim < 1 || seq_len < 1 || vocab_size < 1)
            throw config_error("transformer dims must all be >= 1");
        if (embed_dim % heads != 0)
            throw config_error("embed_dim must be divisible by heads");
    }
};

enum class WorkloadKind { cv, nlp };

struct Workload {
    std::string name;
    WorkloadKind kind = WorkloadKind::cv;
    std::vector<LayerSpec> layers;
    int batch_size = 1;

    void validate() const {
        if (layers.empty()) throw config_error("workload '" + name + "' has no layers");
        if (batch_size < 1) throw config_error("batch size must be >= 1");
        for (const auto& l : layers) l.validate();
    }
};

/// Per-layer tensor sizes in MB. Gradients mirror their forward tensors
/// (a gradient has the tensor's shape), so the *_grad fields equal their
/// forward counterparts for every layer kind.
struct LayerFootprint {
    double ifmap_mb = 0.0;
    double ofmap_mb = 0.0;
    double weight_mb = 0.0;
    double ifmap_grad_mb = 0.0;
    double ofmap_grad_mb = 0.0;
    double weight_grad_mb = 0.0;

    double forward_mb() const { return ifmap_mb + ofmap_mb + weight_mb; }
    double backward_mb() const { return ifmap_grad_mb + ofmap_grad_mb + weight_grad_mb; }
};

inline LayerFootprint make_footprint(double ifmap_bytes, double ofmap_bytes,
                                     double weight_bytes) {
    LayerFootprint fp;
    fp.ifmap_mb = bytes_to_mb(ifmap_bytes);
    fp.ofmap_mb = bytes_to_mb(ofmap_bytes);
    fp.weight_mb = bytes_to_mb(weight_bytes);
    fp.ifmap_grad_mb = fp.ifmap_mb;
    fp.ofmap_grad_mb = fp.ofmap_mb;
    fp.weight_grad_mb = fp.weight_mb;
    return fp;
}

/// Activations (and their gradients) scale with batch; weights do not.
inline LayerFootprint scale_batch(LayerFootprint fp, int batch) {
    fp.ifmap_mb *= batch;
    fp.ofmap_mb *= batch;
    fp.ifmap_grad_mb *= batch;
    fp.ofmap_grad_mb *= batch;
    return fp;
}

inline LayerFootprint conv_footprint(const ConvLayerSpec& l, int batch, int datum_bytes) {
    l.validate();
    const double i = static_cast<double>(l.in_channels) * l.in_h * l.in_w * datum_bytes;
    const double o = static_cast<double>(l.out_channels) * l.out_h * l.out_w * datum_bytes;
    const double w = static_cast<double>(l.out_channels) * l.in_channels * l.kernel_h *
                     l.kernel_w * datum_bytes;
    return scale_batch(make_footprint(i, o, w), batch);
}

inline LayerFootprint gemm_footprint(const GemmLayerSpec& l, int datum_bytes) {
    l.validate();
    double i = static_cast<double>(l.input_rows) * l.shared_dim * datum_bytes;
    if (l.ifmap_is_indices) i = static_cast<double>(l.input_rows) * datum_bytes;
    if (l.ifmap_is_resident) i = 0.0;
    const double w = static_cast<double>(l.shared_dim) * l.output_cols * datum_bytes;
    const double o = static_cast<double>(l.input_rows) * l.output_cols * datum_bytes;
    return make_footprint(i, o, w);
}

inline LayerFootprint softmax_footprint(const SoftmaxLayerSpec& l, int datum_bytes) {
    l.validate();
    const double n2 = static_cast<double>(l.seq_len) * l.seq_len * datum_bytes;
    return make_footprint(n2, n2, 0.0);
}

/// Footprint of one layer at the given batch.
inline LayerFootprint layer_footprint(const LayerSpec& layer, int batch, int datum_bytes) {
    if (const auto* c = layer.as_conv()) return conv_footprint(*c, batch, datum_bytes);
    if (const auto* g = layer.as_gemm())
        return scale_batch(gemm_footprint(*g, datum_bytes), batch);
    return scale_batch(softmax_footprint(*layer.as_softmax(), datum_bytes), batch);
}

/// Footprints for every layer at the workload's batch size.
inline std::vector<LayerFootprint> workload_footprints(const Workload& w, int datum_bytes) {
    w.validate();
    std::vector<LayerFootprint> fps;
    fps.reserve(w.layers.size());
    for (const auto& l : w.layers) fps.push_back(layer_footprint(l, w.batch_size, datum_bytes));
    return fps;
}

/// Trainable parameter count implied by the layer dims (conv kernels plus
/// GEMM weights that actually carry parameters).
inline double parameter_count(const Workload& w) {
    double n = 0.0;
    for (const auto& l : w.layers) {
        if (const auto* c = l.as_conv()) {
            n += static_cast<double>(c->out_channels) * c->in_channels * c->kernel_h *
                 c->kernel_w;
        } else if (const auto* g = l.as_gemm()) {
            if (g->weight_is_parameter)
                n += static_cast<double>(g->shared_dim) * g->output_cols;
        }
    }
    return n;
}

namespace detail {

inline void emit_attention_block(std::vector<LayerSpec>& out, const std::string& prefix,
                                 const TransformerConfig& cfg, std::int64_t kv_rows,
                                 bool kv_reads_cached) {
    const std::int64_t d_head = cfg.embed_dim / cfg.heads;
    out.push_back({prefix + ".q_proj", GemmLayerSpec{cfg.seq_len, cfg.embed_dim, cfg.embed_dim}});
    GemmLayerSpec kv_proj{kv_rows, cfg.embed_dim, cfg.embed_dim};
    kv_proj.ifmap_is_resident = kv_reads_cached;
    out.push_back({prefix + ".k_proj", kv_proj});
    out.push_back({prefix + ".v_proj", kv_proj});
    for (int h = 0; h < cfg.heads; ++h) {
        GemmLayerSpec score{cfg.seq_len, d_head, kv_rows};
        score.weight_is_parameter = false;
        out.push_back({prefix + ".h" + std::to_string(h) + ".score", score});
    }
    for (int h = 0; h < cfg.heads; ++h)
        out.push_back({prefix + ".h" + std::to_string(h) + ".softmax",
                       SoftmaxLayerSpec{cfg.seq_len}});
    for (int h = 0; h < cfg.heads; ++h) {
        GemmLayerSpec av{cfg.seq_len, kv_rows, d_head};
        av.weight_is_parameter = false;
        out.push_back({prefix + ".h" + std::to_string(h) + ".attn_value", av});
    }
    out.push_back({prefix + ".out_proj", GemmLayerSpec{cfg.seq_len, cfg.embed_dim, cfg.embed_dim}});
}

inline void emit_ffn(std::vector<LayerSpec>& out, const std::string& prefix,
                     const TransformerConfig& cfg) {
    out.push_back({prefix + ".ffn1", GemmLayerSpec{cfg.seq_len, cfg.embed_dim, cfg.ff_dim}});
    out.push_back({prefix + ".ffn2", GemmLayerSpec{cfg.seq_len, cfg.ff_dim, cfg.embed_dim}});
}

} // namespace detail

/// Expand a transformer topology into its ordered GEMM/softmax layer list:
/// embedding, encoder stack, decoder stack (masked self-attention plus
/// cross-attention when an encoder exists), and the vocabulary projection.
/// The projection reuses the embedding table, so it carries no parameters of
/// its own.
inline std::vector<LayerSpec> transformer_to_layers(const TransformerConfig& cfg,
                                                    int /*datum_bytes*/ = 4) {
    cfg.validate();
    std::vector<LayerSpec> out;

    GemmLayerSpec embed{cfg.seq_len, cfg.vocab_size, cfg.embed_dim};
    embed.ifmap_is_indices = true;
    out.push_back({"embedding", embed});

    for (int e = 0; e < cfg.encoder_layers; ++e) {
        const std::string prefix = "enc" + std::to_string(e);
        detail::emit_attention_block(out, prefix + ".self", cfg, cfg.seq_len, false);
        detail::emit_ffn(out, prefix, cfg);
    }
    for (int d = 0; d < cfg.decoder_layers; ++d) {
        const std::string prefix = "dec" + std::to_string(d);
        detail::emit_attention_block(out, prefix + ".self", cfg, cfg.seq_len, false);
        if (cfg.encoder_layers > 0)
            detail::emit_attention_block(out, prefix + ".cross", cfg, cfg.seq_len,
                                         cfg.cached_cross_kv);
        detail::emit_ffn(out, prefix, cfg);
    }

    GemmLayerSpec vocab{cfg.seq_len, cfg.embed_dim, cfg.vocab_size};
    vocab.weight_is_parameter = false;  // tied to the embedding table
    out.push_back({"vocab_proj", vocab});
    return out;
}

} // namespace sotmem
