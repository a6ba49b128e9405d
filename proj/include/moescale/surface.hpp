#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "moescale/runs.hpp"

namespace moescale {

enum class SizeVariable { total_params, active_params };

const char* to_string(SizeVariable v);
SizeVariable size_variable_from_string(const std::string& s);

/// Polynomial degrees for the size, sparsity, and interaction features.
struct Degrees {
    int size = 2;
    int sparsity = 2;
    int interaction = 2;

    int total() const { return size + sparsity + interaction; }
    int free_coefficients() const { return total() + 1; }
    bool operator==(const Degrees&) const = default;
};

/// Transformed regression features: size_log = ln(size),
/// sparsity_log = -ln(1 - sparsity). Dense models map to sparsity_log = 0.
struct Features {
    double size_log = 0;
    double sparsity_log = 0;
};

Features transform_features(double size, double sparsity);
double inverse_size_transform(double size_log);
double inverse_sparsity_transform(double sparsity_log);

struct FitDomain {
    double size_min = 0, size_max = 0;
    double sparsity_min = 0, sparsity_max = 0;

    bool contains(double size, double sparsity) const;
};

/// IsoFLOP surface: loss modeled as
///   sum_i a_i x^i + sum_i b_i s^i + sum_i c_i (x s)^i + intercept
/// over the transformed features x = ln(size), s = -ln(1 - sparsity).
struct SurfaceFit {
    SizeVariable size_variable = SizeVariable::total_params;
    Degrees degrees;
    std::vector<double> coeffs_size;         ///< a_1..a_{degrees.size}
    std::vector<double> coeffs_sparsity;     ///< b_1..b_{degrees.sparsity}
    std::vector<double> coeffs_interaction;  ///< c_1..c_{degrees.interaction}
    double intercept = 0;
    double budget = 0;
    FitDomain fit_domain;

    double predict(double size, double sparsity) const;
    double predict_features(const Features& f) const;
};

double predict_loss(const SurfaceFit& fit, double size, double sparsity);

struct Prediction {
    double loss = 0;
    bool extrapolated = false;  ///< outside the fitted (size, sparsity) box
};

Prediction predict_loss_checked(const SurfaceFit& fit, double size, double sparsity);

/// Ordinary least squares on the transformed design matrix, solved by QR with
/// internal feature standardization. Throws SingularFitError naming the
/// collapsed feature when a requested column has no variation, and
/// InsufficientDataError when there are fewer records than coefficients.
SurfaceFit fit_surface(const RunTable& records, const Degrees& degrees, SizeVariable size_variable,
                       double budget = 0);

struct DegreeSearchResult {
    Degrees degrees;
    double cv_error = 0;  ///< mean k-fold CV squared error of the winner
};

/// K-fold cross-validated search over degrees in {0..max_degree}^3.
/// Candidates whose mean CV error lies within one standard error of the best
/// are treated as ties, resolved toward the lowest total degree and then
/// lexicographically. Singular candidates are skipped.
DegreeSearchResult grid_search_degrees(const RunTable& records, SizeVariable size_variable,
                                       int k_folds = 5, std::uint64_t seed = 0, int max_degree = 4);

struct FitEnsemble {
    std::vector<SurfaceFit> fits;
    std::uint64_t seed = 0;
    double subsample_fraction = 1.0;
};

/// k refits on seeded subsamples (without replacement). Identical seeds give
/// bit-identical ensembles. Singular draws are retried up to a fixed budget.
FitEnsemble bootstrap(const RunTable& records, const Degrees& degrees, SizeVariable size_variable,
                      std::size_t k, double subsample_fraction, std::uint64_t seed,
                      double budget = 0);

struct SurfaceMetrics {
    double mse = 0;
    std::optional<double> pearson_r;  ///< empty when predictions are constant
};

SurfaceMetrics holdout_metrics(const SurfaceFit& fit, const RunTable& holdout);

}  // namespace moescale
