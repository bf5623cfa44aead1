#include "biharm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>

#include "biharm/errors.hpp"

namespace biharm {

namespace {

using Rule = boost::math::quadrature::gauss<double, 16>;

struct PanelSum {
    double value{0.0};
    double magnitude{0.0};
};

PanelSum composite(const std::function<double(double)>& f, double a, double b, int panels)
{
    const auto& x = Rule::abscissa();
    const auto& w = Rule::weights();
    const double h = (b - a) / panels;
    PanelSum s;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        const double half = 0.5 * h;
        double acc = 0.0;
        double mag = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double lo = f(mid - half * x[i]);
            const double hi = f(mid + half * x[i]);
            acc += w[i] * (lo + hi);
            mag += w[i] * (std::abs(lo) + std::abs(hi));
        }
        s.value += half * acc;
        s.magnitude += half * mag;
    }
    return s;
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options)
{
    if (a == b) return {};
    int panels = std::max(1, options.initial_panels);
    PanelSum prev = composite(f, a, b, panels);
    for (int step = 0; step < options.max_halvings; ++step) {
        panels *= 2;
        const PanelSum cur = composite(f, a, b, panels);
        const double change = std::abs(cur.value - prev.value);
        // Second test: the change is at rounding level for a cancelling integrand.
        const double noise = 64.0 * std::numeric_limits<double>::epsilon() * cur.magnitude;
        if (change <= options.rel_tol * std::abs(cur.value) || change <= noise)
            return {cur.value, panels, change};
        prev = cur;
    }
    std::ostringstream msg;
    msg << "quadrature on [" << a << ", " << b << "] did not converge after " << panels << " panels";
    throw QuadratureNotConverged(msg.str());
}

double integrate_piecewise(const std::function<double(double)>& f, std::vector<double> breakpoints,
                           const QuadratureOptions& options)
{
    std::sort(breakpoints.begin(), breakpoints.end());
    breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());
    double total = 0.0;
    for (std::size_t i = 1; i < breakpoints.size(); ++i)
        total += integrate(f, breakpoints[i - 1], breakpoints[i], options).value;
    return total;
}

}  // namespace biharm
