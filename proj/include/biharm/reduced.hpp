#pragma once

#include <array>
#include <optional>
#include <vector>

#include "biharm/exact_int.hpp"
#include "biharm/smooth_function.hpp"

namespace biharm {

// Equivariant maps S¹ × S^{n−1}(R) → S^n, or into the ellipsoid with parameter b.
// The radius enters only through R², which must be rational for an exact decision.
struct ReducedProblem {
    long n{2};
    ExactRational radius_squared{1};
    std::optional<ExactRational> b;
};

// Same problem with floating inputs; integrality near threshold is refused.
struct ReducedProblemReal {
    long n{2};
    double radius{1.0};
    std::optional<double> b;
};

struct IndexNullity {
    long index{0};
    long nullity{0};

    friend bool operator==(const IndexNullity&, const IndexNullity&) = default;
};

struct ReducedSpectrumEntry {
    long m{0};
    ExactRational eigenvalue;
    int multiplicity{1};
};

// Y with λ_m = m⁴ − Y: (n−1)²/R⁴, or 4(n−1)²/(b(b+1)²R⁴).
ExactRational reduced_threshold(const ReducedProblem& problem);

// 1 + 2·#{m ≥ 1 : m⁴ < Y}; nullity 2 when Y is the fourth power of a positive integer.
IndexNullity reduced_index_nullity(const ReducedProblem& problem);
// Throws DegenerateThreshold when Y^{1/4} is within 1e-9 of a positive integer.
IndexNullity reduced_index_nullity(const ReducedProblemReal& problem);

std::vector<ReducedSpectrumEntry> reduced_spectrum(const ReducedProblem& problem, long m_max);
// Counts λ_m < 0 and λ_m = 0 directly, walking m until λ_m > 0.
IndexNullity reduced_index_by_counting(const ReducedProblem& problem);

// (1 + 2(k−1), 2)
IndexNullity reduced_index_torus(long k);

// ½·arccos((b−1)/(b+1)), the equator of the ellipsoid profile.
double alpha_star(double b);

// ∫ (v″)² + 4(v′)² over the support of v.
double conformal_hessian(const SmoothFunction& v);

// Power series; |x| ≤ 10.
double j1(double x);

// E(t) = ½∫₀^{2π} [−t sinϑ − ½cos(2t sinϑ)]² dϑ and its t-derivative.
double bessel_energy(double t);
double bessel_energy_derivative(double t);
// πt − ½πJ₁(4t)
double bessel_model_derivative(double t);

constexpr double kBesselVanishTol = 1e-6;
constexpr double kBesselRatioSpreadTol = 1e-4;
constexpr double kBesselFourthRelTol = 1e-2;

struct BesselReport {
    // E′(0), E″(0), E‴(0), E⁗(0) from Richardson-extrapolated central differences.
    std::array<double, 4> derivatives_at_zero{};
    std::vector<double> t_grid;
    std::vector<double> ratios;  // E′(t) / (πt − ½πJ₁(4t))
    double ratio_mean{0.0};
    double ratio_spread{0.0};    // (max − min) / |mean|
    double normalized_fourth{0.0};
    bool derivatives_vanish{false};
    bool ratio_constant{false};
    bool fourth_matches{false};

    bool passed() const { return derivatives_vanish && ratio_constant && fourth_matches; }
};

BesselReport bessel_nullity_check();

}  // namespace biharm
