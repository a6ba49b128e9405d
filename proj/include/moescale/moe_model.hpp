#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

namespace moescale {

/// Architecture description for a sparse mixture-of-experts transformer.
///
/// e_total and e_active count granular expert units per MoE layer; the
/// expansion factor relative to a dense MLP is e_total / granularity. Every
/// feed-forward block is a bank of GLU experts with hidden dimension
/// 4 * d_model / granularity.
struct MoeConfig {
    std::uint64_t n_layers = 0;
    std::uint64_t d_model = 0;
    std::uint64_t n_heads = 0;
    std::uint64_t d_head = 0;
    std::uint64_t e_total = 0;
    std::uint64_t e_active = 0;
    std::uint64_t granularity = 1;
    std::uint64_t n_ctx = 2048;
    std::uint64_t n_vocab = 50432;
    std::uint64_t d_ffn = 0;  ///< 4 * d_model; filled in by validate() when zero

    /// Fraction of non-active experts, (e_total - e_active) / e_total.
    double sparsity() const;

    /// Checks invariants, filling derived fields (d_ffn, and n_heads/d_head
    /// when only one of them is given). Throws InvalidConfigError.
    void validate();

    /// Parses a flat JSON document with the field names above.
    /// Unknown keys are rejected.
    static MoeConfig from_json_text(const std::string& text, const std::string& source = "<string>");
    static MoeConfig from_json_file(const std::filesystem::path& path);
    std::string to_json_text() const;
};

/// (e_total - e_active) / e_total. Throws InvalidConfigError unless
/// 1 <= e_active <= e_total.
double sparsity_of(std::uint64_t e_total, std::uint64_t e_active);

struct ParamBreakdown {
    std::uint64_t attention = 0;       ///< QKV + output projections, all layers
    std::uint64_t experts_total = 0;   ///< all experts, all layers
    std::uint64_t experts_active = 0;  ///< selected experts only, all layers
    std::uint64_t router = 0;          ///< gating projections, all layers
    std::uint64_t embedding = 0;       ///< input table, zero unless requested
    std::uint64_t unembedding = 0;     ///< final projection to vocabulary
};

struct ParamCount {
    std::uint64_t n_total = 0;
    std::uint64_t n_active = 0;
    ParamBreakdown breakdown;
};

/// Leading-order parameter counts. Per layer: 4 d^2 attention,
/// 12 d^2 / G per expert (three GLU projections), d * e_total router;
/// plus n_vocab * d unembedding once. Biases and norms are omitted.
/// The input embedding is a table lookup and excluded by default.
ParamCount count_params(const MoeConfig& config, bool include_input_embedding = false);

/// Aspect-ratio policy used when deriving a config from a parameter target.
struct ShapeRule {
    std::uint64_t d_head = 64;
    double aspect_ratio = 64.0;  ///< preferred d_model / n_layers
    std::uint64_t max_layers = 192;
    bool experts_power_of_two = false;
    std::uint64_t n_ctx = 2048;
    std::uint64_t n_vocab = 50432;
};

/// Inverse of count_params for planning: picks integer expert counts that hit
/// the requested sparsity exactly, then rounds the width so that the total
/// parameter count lands within 5% of n_target. Throws NoFeasibleConfigError
/// when no integer architecture qualifies.
MoeConfig derive_config(std::uint64_t n_target, double sparsity, std::uint64_t granularity,
                        const ShapeRule& rule = {});

}  // namespace moescale
