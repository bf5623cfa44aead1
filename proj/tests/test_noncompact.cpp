#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "biharm/errors.hpp"
#include "biharm/noncompact.hpp"

using namespace biharm;

namespace {

ExactRational random_rational(std::mt19937_64& rng, long span)
{
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, 6);
    ExactRational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

CubicPhase random_stable_phase(std::mt19937_64& rng)
{
    for (;;) {
        CubicPhase p{random_rational(rng, 3), random_rational(rng, 3), random_rational(rng, 3),
                     random_rational(rng, 3)};
        if (sgn(p.a) == 0 && sgn(p.b) == 0) continue;
        if (is_strictly_stable(p) == Stability::Stable) return p;
    }
}

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

}  // namespace

TEST(NoncompactStability, Examples)
{
    EXPECT_EQ(is_strictly_stable({0, 1, 0, 0}), Stability::Stable);
    EXPECT_EQ(is_strictly_stable({1, 0, 1, 0}), Stability::Stable);
    EXPECT_EQ(is_strictly_stable({1, 0, -2, 0}), Stability::NotCertified);
    EXPECT_THROW(is_strictly_stable({0, 0, 5, 1}), NotProper);
    EXPECT_EQ(integrand_min({1, 0, -2, 0}), -24);
    EXPECT_EQ(integrand_min({0, ExactRational(3, 2), 7, 1}), 9);
    EXPECT_EQ(integrand_min({1, 0, 1, 0}), 12);
}

TEST(NoncompactStability, ConditionMatchesIntegrandSign)
{
    std::mt19937_64 rng(11);
    int checked = 0;
    while (checked < 10000) {
        const CubicPhase p{random_rational(rng, 4), random_rational(rng, 4), random_rational(rng, 4), 0};
        if (sgn(p.a) == 0 && sgn(p.b) == 0) continue;
        ++checked;
        EXPECT_EQ(is_strictly_stable(p) == Stability::Stable, sgn(integrand_min(p)) >= 0);
    }
}

TEST(NoncompactStability, MinimumAgreesWithSampling)
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        const CubicPhase p{random_rational(rng, 4), random_rational(rng, 4), random_rational(rng, 4), 0};
        if (sgn(p.a) == 0 && sgn(p.b) == 0) continue;
        const ExactRational lo = integrand_min(p);
        ExactRational sampled = stability_integrand(p, -100);
        for (long i = -20000; i <= 20000; ++i) {
            const ExactRational v = stability_integrand(p, ExactRational(i, 200));
            EXPECT_GE(v, lo);
            if (v < sampled) sampled = v;
        }
        // The grid step is 1/200; the parabola's curvature bounds the gap.
        EXPECT_LE(ExactRational(sampled - lo).get_d(), 72 * p.a.get_d() * p.a.get_d() * 1e-5 + 1e-12);
        if (sgn(p.a) != 0) EXPECT_EQ(stability_integrand(p, -p.b / (3 * p.a)), lo);
    }
}

TEST(NoncompactHessian, Counterexample)
{
    EXPECT_NEAR(counterexample_value(), -3.5370641409743477, 1e-9);
    EXPECT_EQ(hessian_form(counterexample_phase(), SectionPair{}), 0.0);
}

TEST(NoncompactHessian, TangentialPartIsPositive)
{
    const SectionPair v{SmoothFunction{Bump::polynomial(4)}, SmoothFunction{}};
    // ∫ (((1−u²)⁴)″)² = 196608/5005, independent of the phase.
    EXPECT_NEAR(hessian_form(counterexample_phase(), v), 196608.0 / 5005.0, 1e-10);
    EXPECT_NEAR(hessian_form({0, 1, 0, 0}, v), 196608.0 / 5005.0, 1e-10);
}

TEST(NoncompactHessian, PositiveForStablePhases)
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const CubicPhase p = random_stable_phase(rng);
        const SectionPair v{random_bump_sum(rng), random_bump_sum(rng)};
        EXPECT_GT(hessian_form(p, v), 0.0) << trial;
    }
}

TEST(NoncompactHessian, Polarization)
{
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 30; ++trial) {
        const CubicPhase p = random_stable_phase(rng);
        const SectionPair v{random_bump_sum(rng), random_bump_sum(rng)};
        const SectionPair w{random_bump_sum(rng), random_bump_sum(rng)};
        const double lhs = hessian_form(p, {v.f1 + w.f1, v.f2 + w.f2}) + hessian_form(p, {v.f1 - w.f1, v.f2 - w.f2});
        const double rhs = 2 * hessian_form(p, v) + 2 * hessian_form(p, w);
        EXPECT_LT(rel_diff(lhs, rhs), 1e-8);
    }
}

TEST(NoncompactI2, ImageComponents)
{
    const SectionPair v{SmoothFunction{Bump::cosine(6, 0.0, 1.0)}, SmoothFunction{}};
    const CubicPhase p{1, 0, -2, 0};
    for (double x : {-0.5, 0.0, 0.3}) {
        const I2Value img = i2_sections(p, v, x);
        EXPECT_EQ(img.y, v.f1.derivative(4, x));
        EXPECT_EQ(img.eta, 0.0);
    }
    EXPECT_EQ(i2_sections(p, v, std::vector<double>{0.0, 0.1, 0.2}).size(), 3u);
    EXPECT_THROW(i2_sections({0, 0, 1, 0}, v, 0.0), NotProper);
}

TEST(NoncompactI2, PairingEqualsHessian)
{
    std::mt19937_64 rng(15);
    std::uniform_int_distribution<int> pick(0, 1);
    for (int trial = 0; trial < 50; ++trial) {
        CubicPhase p{random_rational(rng, 2), random_rational(rng, 2), random_rational(rng, 2), 0};
        if (sgn(p.a) == 0 && sgn(p.b) == 0) p.a = 1;
        const SectionPair v{random_bump_sum(rng), random_bump_sum(rng)};
        EXPECT_LT(rel_diff(i2_pairing(p, v), hessian_form(p, v)), 1e-6) << trial;
    }
    EXPECT_LT(rel_diff(i2_pairing(counterexample_phase(), counterexample_section()), counterexample_value()), 1e-6);
}

TEST(NoncompactWitness, FindsCounterexampleRegion)
{
    const auto w = find_instability_witness(counterexample_phase());
    ASSERT_TRUE(w.has_value());
    EXPECT_LT(w->hessian, counterexample_value() + 1e-12);
    EXPECT_EQ(is_strictly_stable(counterexample_phase()), Stability::NotCertified);
    EXPECT_FALSE(find_instability_witness({0, 1, 0, 0}).has_value());
}
