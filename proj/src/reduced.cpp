#include "biharm/reduced.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "biharm/errors.hpp"
#include "biharm/quadrature.hpp"

namespace biharm {

namespace {

void validate(long n, bool radius_positive, bool b_positive)
{
    if (n < 2) throw Error("reduced problem needs n >= 2");
    if (!radius_positive) throw Error("reduced problem needs R > 0");
    if (!b_positive) throw Error("ellipsoid parameter b must be positive");
}

ExactInt floor_of(const ExactRational& q)
{
    ExactInt r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

IndexNullity from_count(long below, bool on_threshold)
{
    return {1 + 2 * below, on_threshold ? 2 : 0};
}

constexpr double kPi = std::numbers::pi;

double bessel_integrand(double t, double theta)
{
    const double s = std::sin(theta);
    const double g = -t * s - 0.5 * std::cos(2.0 * t * s);
    return 0.5 * g * g;
}

double bessel_integrand_dt(double t, double theta)
{
    const double s = std::sin(theta);
    const double g = -t * s - 0.5 * std::cos(2.0 * t * s);
    const double gt = -s + s * std::sin(2.0 * t * s);
    return g * gt;
}

QuadratureOptions bessel_quadrature()
{
    QuadratureOptions o;
    o.rel_tol = 1e-13;
    o.initial_panels = 4;
    return o;
}

// Central difference of the given order at 0 with step h.
double central_difference(int order, double h)
{
    const auto e = [](double t) { return bessel_energy(t); };
    switch (order) {
    case 1: return (e(h) - e(-h)) / (2 * h);
    case 2: return (e(h) - 2 * e(0) + e(-h)) / (h * h);
    case 3: return (e(2 * h) - 2 * e(h) + 2 * e(-h) - e(-2 * h)) / (2 * h * h * h);
    case 4: return (e(2 * h) - 4 * e(h) + 6 * e(0) - 4 * e(-h) + e(-2 * h)) / (h * h * h * h);
    default: throw Error("unsupported difference order");
    }
}

// Romberg table on h, h/2, …; central differences have even error expansions.
double richardson(int order, double h0, int levels)
{
    std::vector<double> row;
    for (int i = 0; i < levels; ++i) {
        std::vector<double> next{central_difference(order, h0 / std::pow(2.0, i))};
        double factor = 4.0;
        for (std::size_t j = 0; j < row.size(); ++j) {
            next.push_back((factor * next[j] - row[j]) / (factor - 1.0));
            factor *= 4.0;
        }
        row = std::move(next);
    }
    return row.back();
}

}  // namespace

ExactRational reduced_threshold(const ReducedProblem& p)
{
    validate(p.n, sgn(p.radius_squared) > 0, !p.b || sgn(*p.b) > 0);
    const ExactRational nm1(p.n - 1);
    ExactRational y = nm1 * nm1 / (p.radius_squared * p.radius_squared);
    if (p.b) {
        const ExactRational b1 = *p.b + 1;
        y = 4 * y / (*p.b * b1 * b1);
    }
    y.canonicalize();
    return y;
}

IndexNullity reduced_index_nullity(const ReducedProblem& p)
{
    const ExactRational y = reduced_threshold(p);
    // ⌊y^{1/4}⌋ = ⌊√⌊√⌊y⌋⌋⌋
    const ExactInt root = isqrt(isqrt(floor_of(y)));
    const bool exact = y.get_den() == 1 && root > 0 && pow_int(root, 4) == y.get_num();
    const ExactInt below = exact ? ExactInt(root - 1) : root;
    if (!below.fits_slong_p()) throw Error("reduced index does not fit in a machine integer");
    return from_count(below.get_si(), exact);
}

IndexNullity reduced_index_nullity(const ReducedProblemReal& p)
{
    validate(p.n, p.radius > 0.0, !p.b || *p.b > 0.0);
    const double nm1 = static_cast<double>(p.n - 1);
    const double r4 = std::pow(p.radius, 4);
    double y = nm1 * nm1 / r4;
    if (p.b) y = 4.0 * y / (*p.b * (*p.b + 1.0) * (*p.b + 1.0));
    const double root = std::pow(y, 0.25);
    const double nearest = std::round(root);
    if (nearest >= 1.0 && std::abs(root - nearest) <= 1e-9 * std::max(1.0, root)) {
        std::ostringstream msg;
        msg << "threshold " << root << " is too close to the integer " << nearest
            << " to decide in floating point; pass R^2 and b as exact rationals";
        throw DegenerateThreshold(msg.str());
    }
    return from_count(static_cast<long>(std::floor(root)), false);
}

std::vector<ReducedSpectrumEntry> reduced_spectrum(const ReducedProblem& p, long m_max)
{
    const ExactRational y = reduced_threshold(p);
    std::vector<ReducedSpectrumEntry> out;
    for (long m = 0; m <= m_max; ++m) {
        const ExactInt m4 = pow_int(ExactInt(m), 4);
        out.push_back({m, ExactRational(m4) - y, m == 0 ? 1 : 2});
    }
    return out;
}

IndexNullity reduced_index_by_counting(const ReducedProblem& p)
{
    const ExactRational y = reduced_threshold(p);
    IndexNullity r;
    for (long m = 0;; ++m) {
        const ExactRational lambda = ExactRational(pow_int(ExactInt(m), 4)) - y;
        const long mult = m == 0 ? 1 : 2;
        if (sgn(lambda) < 0) r.index += mult;
        else if (sgn(lambda) == 0) r.nullity += mult;
        else break;
    }
    return r;
}

IndexNullity reduced_index_torus(long k)
{
    if (k < 1) throw InvalidLabel("k must be at least 1");
    return {1 + 2 * (k - 1), 2};
}

double alpha_star(double b)
{
    if (!(b > 0.0)) throw Error("ellipsoid parameter b must be positive");
    return 0.5 * std::acos((b - 1.0) / (b + 1.0));
}

double conformal_hessian(const SmoothFunction& v)
{
    if (v.is_zero()) return 0.0;
    const auto f = [&v](double u) {
        const double d1 = v.derivative(1, u);
        const double d2 = v.derivative(2, u);
        return d2 * d2 + 4.0 * d1 * d1;
    };
    return integrate_piecewise(f, v.breakpoints());
}

double j1(double x)
{
    if (std::abs(x) > 10.0) throw Error("j1 series is used only for |x| <= 10");
    const double half = 0.5 * x;
    const double q = -half * half;
    double term = half;
    double sum = term;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<double>(k) * (k + 1));
        sum += term;
        if (std::abs(term) < 1e-15) break;
    }
    return sum;
}

double bessel_energy(double t)
{
    return integrate([t](double th) { return bessel_integrand(t, th); }, 0.0, 2 * kPi, bessel_quadrature()).value;
}

double bessel_energy_derivative(double t)
{
    return integrate([t](double th) { return bessel_integrand_dt(t, th); }, 0.0, 2 * kPi, bessel_quadrature())
        .value;
}

double bessel_model_derivative(double t)
{
    return kPi * t - 0.5 * kPi * biharm::j1(4.0 * t);
}

BesselReport bessel_nullity_check()
{
    BesselReport r;
    for (int order = 1; order <= 4; ++order) r.derivatives_at_zero[order - 1] = richardson(order, 0.2, 5);

    for (int i = 0; i <= 25; ++i) r.t_grid.push_back(0.05 + 0.01 * i);
    for (double t : r.t_grid) r.ratios.push_back(bessel_energy_derivative(t) / bessel_model_derivative(t));
    const auto [lo, hi] = std::minmax_element(r.ratios.begin(), r.ratios.end());
    double sum = 0.0;
    for (double v : r.ratios) sum += v;
    r.ratio_mean = sum / static_cast<double>(r.ratios.size());
    r.ratio_spread = (*hi - *lo) / std::abs(r.ratio_mean);
    r.normalized_fourth = r.derivatives_at_zero[3] / r.ratio_mean;

    r.derivatives_vanish = std::all_of(r.derivatives_at_zero.begin(), r.derivatives_at_zero.begin() + 3,
                                       [](double d) { return std::abs(d) < kBesselVanishTol; });
    r.ratio_constant = r.ratio_spread < kBesselRatioSpreadTol;
    r.fourth_matches = std::abs(r.normalized_fourth - 12 * kPi) <= kBesselFourthRelTol * 12 * kPi;
    return r;
}

}  // namespace biharm
