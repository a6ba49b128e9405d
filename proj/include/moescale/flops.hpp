#pragma once

#include <cstdint>

#include "moescale/moe_model.hpp"

namespace moescale {

struct FlopConstants {
    std::uint64_t linear_c = 6;   ///< add-multiply ops per parameter, fwd+bwd
    std::uint64_t router_r = 14;  ///< ops per router parameter, incl. routing
};

/// Forward+backward FLOPs per token by module, each already summed over
/// layers. All values are exact 64-bit integers; absurd configs raise
/// RangeError instead of overflowing.
struct FlopBreakdown {
    std::uint64_t qkv_proj = 0;
    std::uint64_t attn_logits = 0;
    std::uint64_t attn_values = 0;
    std::uint64_t router = 0;
    std::uint64_t experts = 0;
    std::uint64_t unembedding = 0;
    std::uint64_t total = 0;
    FlopConstants constants;
};

FlopBreakdown flops_breakdown(const MoeConfig& config, const FlopConstants& k = {});

/// Simplified per-token estimate
///   C n_layers d^2 (4 + 2 n_ctx/d + 12 e_active/G + n_vocab/(d n_layers)),
/// i.e. the breakdown total with the router term dropped. Computed
/// multiply-before-divide so the result is an exact integer.
std::uint64_t flops_per_token(const MoeConfig& config, const FlopConstants& k = {});

/// The 6 * N_a * D proxy for total training FLOPs.
double flops_6nad(double n_active, double tokens);

/// flops_per_token / (6 * n_active), with n_active counted without the input
/// embedding. Approaches 1 from above as the model grows.
double estimator_ratio(const MoeConfig& config, const FlopConstants& k = {});

enum class FlopEstimator { exact, proxy_6nad };

/// Total training FLOPs for d tokens, by the exact per-token estimate or the
/// 6 N_a D proxy.
double training_flops(const MoeConfig& config, double tokens,
                      FlopEstimator estimator = FlopEstimator::exact, const FlopConstants& k = {});

}  // namespace moescale
