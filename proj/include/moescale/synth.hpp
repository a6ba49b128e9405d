#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "moescale/moe_model.hpp"
#include "moescale/paramlaw.hpp"
#include "moescale/runs.hpp"
#include "moescale/surface.hpp"

namespace moescale {

/// Mapping (N, S) -> N_a used when inverting a budget into a token count.
///
/// structural: n * (expert_fraction (1-s) + (1 - expert_fraction)), a fixed
/// split between expert and always-active parameters. config_backed derives
/// an integer architecture for (n, s) and counts its parameters. identity
/// returns n (dense behavior).
struct NaRule {
    enum class Kind { structural, identity, config_backed };

    Kind kind = Kind::structural;
    double expert_fraction = 0.8;
    std::uint64_t granularity = 1;  ///< config_backed only
    ShapeRule shape;                ///< config_backed only

    double operator()(double n, double sparsity) const;
};

/// Ground-truth model behind a synthetic table: either the parametric law or
/// a fixed isoFLOP surface (which ignores the token count).
struct SynthTruth {
    std::optional<ScalingLawCoeffs> law;
    std::optional<SurfaceFit> surface;

    double operator()(double n, double n_active, double d, double sparsity) const;
};

struct SynthDesign {
    SynthTruth truth;
    std::vector<double> budgets = {3e19, 6e19, 1e20, 3e20, 1e21};
    std::vector<double> sparsities = {0.0, 0.25, 0.5, 0.75, 0.9, 0.95, 0.98};
    int sizes_per_cell = 12;  ///< log-spaced sizes shared by every (C, S) cell
    double size_min = 1e8;
    double size_max = 3e10;
    double noise_sigma = 0.0;  ///< stddev of additive noise on ln(loss)
    std::uint64_t seed = 0;
    NaRule na_rule;

    void validate() const;  ///< throws InvalidConfigError
};

struct SkippedCell {
    double budget = 0;
    double sparsity = 0;
    double size = 0;
    std::string reason;
};

struct SynthResult {
    RunTable table;
    std::vector<SkippedCell> skipped;
};

/// Generates one record per (budget, sparsity, size) cell: N_a from the rule,
/// D = C / (6 N_a) rounded to whole tokens, loss = truth * exp(noise). The
/// stored compute is exactly 6 * n_active * tokens. Cells whose budget cannot
/// afford a single token are skipped with a reason. Fully determined by the
/// design (including the seed).
SynthResult generate_runs(const SynthDesign& design);

}  // namespace moescale
