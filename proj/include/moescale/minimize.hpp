#pragma once

#include <functional>

namespace moescale {

struct ScalarMinimum {
    double x = 0;
    double value = 0;
    bool at_lower = false;
    bool at_upper = false;

    bool at_boundary() const { return at_lower || at_upper; }
};

/// Minimizes f on [lo, hi]: dense scan over scan_points evenly spaced
/// abscissae, golden-section refinement of the bracketing interval down to
/// width tol * max(1, |x|), then one parabolic polish of the final triple
/// (exact on quadratic profiles). The result never exceeds the best scanned
/// value; plateau ties resolve to the smallest x. Throws EvaluationError if
/// f is non-finite anywhere on the scan.
ScalarMinimum minimize_scalar(const std::function<double(double)>& f, double lo, double hi,
                              int scan_points = 512, double tol = 1e-6);

}  // namespace moescale
