#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace moescale {

struct LbfgsOptions {
    int history = 10;          ///< stored curvature pairs
    int max_iter = 500;
    double grad_tol = 1e-8;    ///< stop when ||g||_2 <= grad_tol
    double wolfe_c1 = 1e-4;    ///< sufficient-decrease constant
    double wolfe_c2 = 0.9;     ///< curvature constant
    int max_line_search = 50;  ///< objective evaluations per line search
};

struct OptimizerReport {
    int iterations = 0;
    double final_gradient_norm = 0;
    bool converged = false;  ///< final_gradient_norm <= grad_tol
    int history_size = 0;
    int line_search_evals = 0;
    std::string failure;  ///< empty on a clean exit
};

/// Objective contract: fill `grad` (same length as `x`) and return f(x).
using Objective = std::function<double(std::span<const double>, std::span<double>)>;

struct LbfgsResult {
    std::vector<double> x;
    double value = 0;
    OptimizerReport report;
};

/// Limited-memory BFGS with two-loop recursion and a strong-Wolfe line
/// search. Accepted steps never increase the objective. A non-finite
/// objective or gradient at x0 throws OptimizerError; later non-finite trial
/// points shrink the step, and a failed line search falls back to steepest
/// descent once before giving up with the last good iterate.
LbfgsResult lbfgs_minimize(const Objective& objective, std::span<const double> x0,
                           const LbfgsOptions& opts = {});

}  // namespace moescale
