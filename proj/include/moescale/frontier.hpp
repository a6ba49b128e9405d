#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "moescale/runs.hpp"
#include "moescale/surface.hpp"

namespace moescale {

struct SizeInterval {
    double lo = 0, hi = 0;
};

struct SparsityInterval {
    double lo = 0, hi = 0;
};

/// Default sparsity search ceiling: just above the densest grids seen in
/// practice, safely below the s = 1 singularity.
inline constexpr double kDefaultSparsityMax = 0.99;

/// Default size search interval: the fit domain padded by half a decade on
/// each side.
inline constexpr double kDomainPadDecades = 0.5;

enum class FrontierConstraint { fixed_sparsity, fixed_size };

struct FrontierPoint {
    double budget = 0;
    FrontierConstraint constraint = FrontierConstraint::fixed_sparsity;
    double constraint_value = 0;
    double opt_size = 0;  ///< N* or N_a*, per the surface's size variable
    double opt_sparsity = 0;
    double opt_loss = 0;
    bool at_boundary = false;  ///< optimum sits on a search-interval edge
    std::string source;
};

/// argmin over size of the surface at fixed sparsity. The scan+refine runs in
/// log-size space; boundary optima are flagged, not rejected.
FrontierPoint optimal_size_given_sparsity(const SurfaceFit& fit, double sparsity,
                                          std::optional<SizeInterval> search = std::nullopt);

/// argmin over sparsity of the surface at fixed size, scanning in the
/// -ln(1-s) coordinate.
FrontierPoint optimal_sparsity_given_size(const SurfaceFit& fit, double size,
                                          std::optional<SparsityInterval> search = std::nullopt);

/// Univariate quadratic in ln(size): loss = c0 + c1 x + c2 x^2.
struct QuadraticFit {
    double c0 = 0, c1 = 0, c2 = 0;
    double vertex_size = 0;  ///< exp(-c1 / (2 c2)); NaN when c2 == 0
    bool is_minimum = false;  ///< c2 > 0
};

/// Least-squares parabola through one (budget, sparsity) group's records.
/// Needs at least three distinct sizes.
QuadraticFit approach2_fit(const RunTable& records, SizeVariable size_variable);

struct PowerLaw {
    double exponent = 0;
    double prefactor = 0;  ///< y ~ prefactor * x^exponent
};

/// Ordinary least squares of ln y on ln x. All inputs must be positive with
/// at least two distinct x.
PowerLaw power_law_fit(std::span<const std::pair<double, double>> points);

struct SparsityMapCell {
    double budget = 0;
    double size = 0;
    std::optional<FrontierPoint> point;
    std::string error;  ///< set when this cell could not be evaluated
};

/// Optimal sparsity across a (budget, size) grid, one surface per budget.
/// All surfaces must use total parameters as the size variable. Output is
/// sorted by (budget, size) regardless of input order.
std::vector<SparsityMapCell> optimal_sparsity_map(std::span<const SurfaceFit> fits,
                                                  std::span<const double> size_grid,
                                                  std::optional<SparsityInterval> search = std::nullopt);

struct ExponentRow {
    double sparsity = 0;
    std::optional<PowerLaw> law;
    std::size_t budgets_used = 0;
    std::string note;  ///< reasons for skipped budgets or a missing fit
};

/// For each sparsity level, collects per-budget parabola vertices and fits
/// N* ~ C^a across budgets. Rows without at least two usable vertices carry
/// a note instead of a law.
std::vector<ExponentRow> scaling_exponent_vs_sparsity(const BudgetGroups& grouped,
                                                      std::span<const double> sparsities,
                                                      SizeVariable size_variable);

}  // namespace moescale
