#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "moescale/frontier.hpp"
#include "moescale/lbfgs.hpp"
#include "moescale/runs.hpp"

namespace moescale {

enum class LawForm { dense, moe };

const char* to_string(LawForm f);
LawForm law_form_from_string(const std::string& s);

/// Coefficients of the parametric loss law
///   L(N, D, S) = a/N^alpha + b/D^beta + c/(1-S)^lambda
///                + d/((1-S)^delta N^gamma) + e.
/// a..e are stored in log space so positivity is structural. The law's own
/// delta exponent is named delta_exp; the Huber knee is a separate knob.
struct ScalingLawCoeffs {
    double log_a = 0, log_b = 0, log_c = 0, log_d = 0, log_e = 0;
    double alpha = 0, beta = 0, gamma = 0, lambda = 0, delta_exp = 0;

    double a() const;
    double b() const;
    double c() const;
    double d() const;
    double e() const;
};

/// Dense special case a/N^alpha + b/D^beta + e.
double predict_loss_dense(const ScalingLawCoeffs& coeffs, double n, double d);

/// Full law; sparsity must be < 1. Evaluated through log-sum-exp so extreme
/// N, D stay finite.
double predict_loss_moe(const ScalingLawCoeffs& coeffs, double n, double d, double sparsity);

double predict_loss(const ScalingLawCoeffs& coeffs, LawForm form, double n, double d,
                    double sparsity);

/// 0.5 r^2 inside the knee, delta (|r| - delta/2) outside; C1 at |r| = delta.
double huber_loss(double residual, double huber_delta);

enum class ResidualSpace { log_loss, raw_loss };

/// Initialization grid for the multi-start fit, crossed per coefficient.
struct InitGrid {
    std::vector<double> log_coeffs = {0.0, 10.0, 20.0};                      ///< log a,b,c,d
    std::vector<double> size_exponents = {0.0, 0.25, 0.5, 0.75, 1.0, 1.25};  ///< alpha, beta, gamma
    std::vector<double> sparsity_exponents = {-1.0, -0.5, 0.0, 0.5, 1.0};    ///< lambda, delta
    std::vector<double> log_e_values = {1.5};

    std::size_t total_starts(LawForm form) const;
    /// The start vector at flat index i (lexicographic nesting, log_a slowest).
    std::vector<double> start_at(LawForm form, std::size_t index) const;
};

struct LawFitOptions {
    ResidualSpace residual_space = ResidualSpace::log_loss;
    double huber_delta = 1e-3;
    LbfgsOptions lbfgs;              ///< per-start optimizer settings
    double starts_fraction = 1.0;    ///< seeded subsample of the grid
    std::uint64_t seed = 0;
    int threads = 1;
    int polish_max_iter = 2000;      ///< extra iterations on the winning start
};

struct LawMetrics {
    double mse = 0;
    double huber = 0;  ///< mean Huber over residuals
};

struct ScalingLawFit {
    ScalingLawCoeffs coeffs;
    LawForm form = LawForm::moe;
    double objective_value = 0;  ///< mean Huber in the fit residual space
    LawMetrics fit_metrics;
    std::optional<LawMetrics> holdout_metrics;
    std::size_t starts_evaluated = 0;
    std::size_t best_start_index = 0;  ///< flat index into the full grid
    std::vector<double> best_start;    ///< the winning initial vector
    OptimizerReport report;            ///< from the winning, polished run
};

/// Multi-start robust fit: L-BFGS from every grid start (or a seeded
/// fraction of them), mean Huber objective over residuals in the requested
/// space, lowest objective wins with ties broken by start index. Deterministic
/// for fixed inputs, grid, seed and options, independent of thread count.
ScalingLawFit fit_law(const RunTable& records, LawForm form, const InitGrid& grid = {},
                      const LawFitOptions& opts = {});

LawMetrics evaluate_law(const ScalingLawCoeffs& coeffs, const RunTable& records, LawForm form,
                        double huber_delta = 1e-3,
                        ResidualSpace space = ResidualSpace::log_loss);

struct OptimalSizeSample {
    double budget = 0;
    double opt_size = 0;
    double opt_loss = 0;
    bool at_boundary = false;
};

struct ComputeExponentResult {
    double exponent = 0;   ///< a in N* ~ C^a
    double prefactor = 0;
    std::optional<double> closed_form;  ///< beta/(alpha+beta) for the dense form
    bool any_boundary = false;
    std::vector<OptimalSizeSample> samples;
};

inline constexpr double kDefaultExponentBudgets[] = {1e18, 3.16227766016838e18, 1e19,
                                                     3.16227766016838e19, 1e20,
                                                     3.16227766016838e20, 1e21,
                                                     3.16227766016838e21, 1e22};

/// Compute-optimal size exponent: minimizes L(N, C/(6 na_model(N)), S) over N
/// for each budget, then fits N* ~ C^a. The dense closed form beta/(alpha+beta)
/// is reported alongside for cross-checking.
ComputeExponentResult compute_optimal_exponent(
    const ScalingLawCoeffs& coeffs, LawForm form, double sparsity,
    const std::function<double(double)>& na_model,
    std::span<const double> budgets = kDefaultExponentBudgets,
    SizeInterval search = SizeInterval{1e7, 1e12});

}  // namespace moescale
