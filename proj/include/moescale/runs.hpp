#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace moescale {

/// One training-run observation. Numeric fields are doubles because budgets
/// reach 1e21 FLOPs; tokens and parameter counts are integral in practice but
/// carried as-is from the source file.
struct RunRecord {
    std::string run_id;
    double n_total = 0;
    double n_active = 0;
    double sparsity = 0;  ///< in [0, 1)
    double tokens = 0;
    double compute = 0;
    double loss = 0;
    bool compute_synthetic = false;  ///< compute column absent, filled as 6 n_active tokens
    std::map<std::string, std::string> extras;
};

struct LoadWarning {
    std::size_t row = 0;  ///< 1-based data row
    std::string run_id;
    std::string message;
};

struct RunTable {
    std::vector<RunRecord> records;
    std::string source;
    std::vector<LoadWarning> warnings;

    std::size_t size() const { return records.size(); }
    bool empty() const { return records.empty(); }
};

/// The standard budget buckets, ascending.
inline constexpr double kDefaultBudgetCenters[] = {3e19, 6e19, 1e20, 3e20, 1e21};

/// Loaded records whose compute deviates from 6 N_a D by more than this
/// relative amount get a warning attached (they are not rejected).
inline constexpr double kComputeConsistencyTol = 0.25;

/// Loads a run table from CSV, or from a JSON array of objects when the file
/// ends in ".json". Throws LoadError naming the offending row and column.
RunTable load_runs(const std::filesystem::path& path);

RunTable parse_runs_csv(const std::string& text, const std::string& source);
RunTable parse_runs_json(const std::string& text, const std::string& source);

/// Canonical CSV writer; columns in the standard order, extras sorted by key,
/// doubles with 17 significant digits so reloading round-trips exactly.
void save_runs_csv(const RunTable& table, const std::filesystem::path& path);
std::string runs_to_csv(const RunTable& table);

struct BudgetBucket {
    double center = 0;
    RunTable runs;
};

struct BudgetGroups {
    std::vector<BudgetBucket> buckets;  ///< ascending by center, non-empty only
    RunTable unassigned;
};

/// Assigns each record to the nearest bucket center within rel_tol relative
/// distance. Records outside every window land in `unassigned`.
BudgetGroups group_by_budget(const RunTable& table, double rel_tol,
                             std::span<const double> centers = kDefaultBudgetCenters);

struct HoldoutSplit {
    RunTable fit;
    RunTable holdout;
};

/// Exact partition: records with |sparsity - holdout_sparsity| <= 1e-9 go to
/// the holdout side.
HoldoutSplit split_holdout_by_sparsity(const RunTable& table, double holdout_sparsity);

}  // namespace moescale
