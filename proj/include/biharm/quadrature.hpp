#pragma once

#include <functional>
#include <vector>

namespace biharm {

struct QuadratureOptions {
    double rel_tol{1e-10};
    int initial_panels{1};
    int max_halvings{16};
};

struct QuadratureResult {
    double value{0.0};
    int panels{0};
    double last_change{0.0};
};

// Composite 16-point Gauss–Legendre on [a, b], halving panels until two
// successive sums agree to rel_tol. Throws QuadratureNotConverged.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options = {});

// Sum of integrate() over consecutive breakpoints (sorted, duplicates ignored).
double integrate_piecewise(const std::function<double(double)>& f, std::vector<double> breakpoints,
                           const QuadratureOptions& options = {});

}  // namespace biharm
