#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sotmem/workload.hpp"

namespace sotmem {

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

/// Parse "key=value" fields of one record into a map.
inline std::map<std::string, std::string> kv_fields(const std::vector<std::string>& toks,
                                                    std::size_t first,
                                                    const std::string& context) {
    std::map<std::string, std::string> kv;
    for (std::size_t i = first; i < toks.size(); ++i) {
        const auto eq = toks[i].find('=');
        if (eq == std::string::npos)
            throw config_error(context + ": expected key=value, got '" + toks[i] + "'");
        kv[toks[i].substr(0, eq)] = toks[i].substr(eq + 1);
    }
    return kv;
}

inline std::int64_t kv_int(const std::map<std::string, std::string>& kv,
                           const std::string& key, const std::string& context) {
    auto it = kv.find(key);
    if (it == kv.end()) throw config_error(context + ": missing field '" + key + "'");
    return std::stoll(it->second);
}

inline std::int64_t kv_int_or(const std::map<std::string, std::string>& kv,
                              const std::string& key, std::int64_t fallback) {
    auto it = kv.find(key);
    return it == kv.end() ? fallback : std::stoll(it->second);
}

/// "AxB" pair, e.g. k=3x3.
inline std::pair<int, int> kv_dims(const std::map<std::string, std::string>& kv,
                                   const std::string& key, const std::string& context) {
    auto it = kv.find(key);
    if (it == kv.end()) throw config_error(context + ": missing field '" + key + "'");
    const auto x = it->second.find('x');
    if (x == std::string::npos)
        throw config_error(context + ": field '" + key + "' must look like HxW");
    return {std::stoi(it->second.substr(0, x)), std::stoi(it->second.substr(x + 1))};
}

} // namespace detail

/// Parse one workload description.
///
/// Line-oriented text, '#' starts a comment. Records:
///   name <model-name>
///   kind cv|nlp
///   conv k=KHxKW if=IHxIW of=OHxOW ich=N och=N [stride=N]
///   gemm K=N M=N N=N
///   softmax sql=N
///   transformer enc=N dec=N heads=N em=N ff=N sql=N vocab=N [cached_kv=0|1]
/// A transformer record expands into its full layer list in place.
inline Workload parse_workload(std::istream& in, const std::string& source,
                               int batch_size = 1, int datum_bytes = 4) {
    Workload w;
    w.batch_size = batch_size;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto toks = detail::split_ws(line);
        if (toks.empty()) continue;
        const std::string ctx = source + ":" + std::to_string(lineno);
        const std::string& rec = toks[0];

        if (rec == "name") {
            if (toks.size() != 2) throw config_error(ctx + ": name takes one value");
            w.name = toks[1];
        } else if (rec == "kind") {
            if (toks.size() != 2 || (toks[1] != "cv" && toks[1] != "nlp"))
                throw config_error(ctx + ": kind must be cv or nlp");
            w.kind = toks[1] == "cv" ? WorkloadKind::cv : WorkloadKind::nlp;
        } else if (rec == "conv") {
            const auto kv = detail::kv_fields(toks, 1, ctx);
            ConvLayerSpec c;
            std::tie(c.kernel_h, c.kernel_w) = detail::kv_dims(kv, "k", ctx);
            std::tie(c.in_h, c.in_w) = detail::kv_dims(kv, "if", ctx);
            std::tie(c.out_h, c.out_w) = detail::kv_dims(kv, "of", ctx);
            c.in_channels = static_cast<int>(detail::kv_int(kv, "ich", ctx));
            c.out_channels = static_cast<int>(detail::kv_int(kv, "och", ctx));
            c.stride = static_cast<int>(detail::kv_int_or(kv, "stride", 1));
            w.layers.push_back({"conv" + std::to_string(w.layers.size()), c});
        } else if (rec == "gemm") {
            const auto kv = detail::kv_fields(toks, 1, ctx);
            GemmLayerSpec g;
            g.input_rows = detail::kv_int(kv, "K", ctx);
            g.shared_dim = detail::kv_int(kv, "M", ctx);
            g.output_cols = detail::kv_int(kv, "N", ctx);
            w.layers.push_back({"gemm" + std::to_string(w.layers.size()), g});
        } else if (rec == "softmax") {
            const auto kv = detail::kv_fields(toks, 1, ctx);
            SoftmaxLayerSpec s;
            s.seq_len = detail::kv_int(kv, "sql", ctx);
            w.layers.push_back({"softmax" + std::to_string(w.layers.size()), s});
        } else if (rec == "transformer") {
            const auto kv = detail::kv_fields(toks, 1, ctx);
            TransformerConfig cfg;
            cfg.encoder_layers = static_cast<int>(detail::kv_int(kv, "enc", ctx));
            cfg.decoder_layers = static_cast<int>(detail::kv_int(kv, "dec", ctx));
            cfg.heads = static_cast<int>(detail::kv_int(kv, "heads", ctx));
            cfg.embed_dim = detail::kv_int(kv, "em", ctx);
            cfg.ff_dim = detail::kv_int(kv, "ff", ctx);
            cfg.seq_len = detail::kv_int(kv, "sql", ctx);
            cfg.vocab_size = detail::kv_int(kv, "vocab", ctx);
            cfg.cached_cross_kv = detail::kv_int_or(kv, "cached_kv", 1) != 0;
            auto layers = transformer_to_layers(cfg, datum_bytes);
            w.layers.insert(w.layers.end(), layers.begin(), layers.end());
        } else {
            throw config_error(ctx + ": unknown record '" + rec + "'");
        }
    }
    if (w.name.empty()) throw config_error(source + ": workload file must set a name");
    w.validate();
    return w;
}

inline Workload load_workload(const std::filesystem::path& path, int batch_size = 1,
                              int datum_bytes = 4) {
    std::ifstream in(path);
    if (!in) throw lookup_error("cannot open workload file: " + path.string());
    return parse_workload(in, path.filename().string(), batch_size, datum_bytes);
}

/// The model zoo: every .wl file in a directory, keyed by model name.
class Zoo {
public:
    explicit Zoo(const std::filesystem::path& dir, int batch_size = 1, int datum_bytes = 4) {
        if (!std::filesystem::is_directory(dir))
            throw lookup_error("workload zoo directory not found: " + dir.string());
        std::vector<std::filesystem::path> files;
        for (const auto& entry : std::filesystem::directory_iterator(dir))
            if (entry.path().extension() == ".wl") files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) {
            Workload w = load_workload(f, batch_size, datum_bytes);
            names_.push_back(w.name);
            models_.emplace(w.name, std::move(w));
        }
        std::sort(names_.begin(), names_.end());
    }

    const std::vector<std::string>& names() const { return names_; }

    std::vector<std::string> names(WorkloadKind kind) const {
        std::vector<std::string> out;
        for (const auto& n : names_)
            if (models_.at(n).kind == kind) out.push_back(n);
        return out;
    }

    const Workload& get(const std::string& name) const {
        auto it = models_.find(name);
        if (it == models_.end()) {
            std::string msg = "unknown model '" + name + "'; available:";
            for (const auto& n : names_) msg += " " + n;
            throw lookup_error(msg);
        }
        return it->second;
    }

    /// Resolve a selector: a model name, "all", "all-cv" or "all-nlp".
    std::vector<std::string> resolve(const std::string& selector) const {
        if (selector == "all") return names_;
        if (selector == "all-cv") return names(WorkloadKind::cv);
        if (selector == "all-nlp") return names(WorkloadKind::nlp);
        get(selector);
        return {selector};
    }

private:
    std::map<std::string, Workload> models_;
    std::vector<std::string> names_;
};

} // namespace sotmem
