#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "biharm/errors.hpp"
#include "biharm/quadrature.hpp"
#include "biharm/smooth_function.hpp"

using namespace biharm;

namespace {

constexpr double kPi = std::numbers::pi;

// Fourth-order central difference of the (order−1)-th derivative.
double numeric_derivative(const Bump& b, int order, double x)
{
    const double h = 1e-3;
    const auto f = [&](double t) { return b.derivative(order - 1, t); };
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

}  // namespace

TEST(Quadrature, KnownIntegrals)
{
    EXPECT_NEAR(integrate([](double x) { return std::sin(x); }, 0, kPi).value, 2.0, 1e-14);
    EXPECT_NEAR(integrate([](double x) { return std::exp(x); }, 0, 3).value, std::exp(3.0) - 1, 1e-12);
    EXPECT_NEAR(integrate([](double x) { return std::pow(std::cos(x), 6); }, -kPi / 2, kPi / 2).value,
                5 * kPi / 16, 1e-14);
    EXPECT_EQ(integrate([](double) { return 0.0; }, 0, 1).value, 0.0);
}

TEST(Quadrature, RefusesNonConvergence)
{
    QuadratureOptions o;
    o.max_halvings = 3;
    EXPECT_THROW(integrate([](double x) { return std::sin(1.0 / (x + 1e-3)); }, 0, 1, o), QuadratureNotConverged);
}

TEST(Quadrature, PiecewiseRespectsKinks)
{
    const auto f = [](double x) { return std::abs(x); };
    EXPECT_NEAR(integrate_piecewise(f, {1.0, -1.0, 0.0, 0.0}), 1.0, 1e-15);
}

TEST(Bump, ClosedFormValues)
{
    const Bump c = Bump::cosine(6, 0.0, kPi / 2);
    const double x = 0.3;
    EXPECT_NEAR(c(x), std::pow(std::cos(x), 6), 1e-15);
    EXPECT_NEAR(c.derivative(1, x), -6 * std::pow(std::cos(x), 5) * std::sin(x), 1e-14);
    EXPECT_EQ(c(2.0), 0.0);
    const Bump p = Bump::polynomial(4);
    EXPECT_NEAR(p.derivative(2, 0.0), -8.0, 1e-14);
    EXPECT_NEAR(p(0.5), std::pow(0.75, 4), 1e-15);
    EXPECT_EQ(p.smoothness(), 3);
}

TEST(Bump, DerivativesMatchFiniteDifferences)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> pick(-0.95, 0.95);
    for (int power : {5, 6, 9}) {
        for (const Bump& b : {Bump::cosine(power, 0.4, 1.3, -1.5), Bump::polynomial(power, -0.2, 0.8, 2.0)}) {
            for (int trial = 0; trial < 20; ++trial) {
                const double x = b.center() + pick(rng) * b.half_width();
                for (int order = 1; order <= kMaxDerivative; ++order) {
                    const double scale = 1.0 + std::abs(b.derivative(order, x));
                    EXPECT_NEAR(b.derivative(order, x), numeric_derivative(b, order, x), 1e-6 * scale * 100)
                        << power << " order " << order;
                }
            }
        }
    }
}

TEST(Bump, ContinuousAtSupportEdge)
{
    const Bump b = Bump::cosine(6, 1.0, 0.5);
    for (int order = 0; order <= kMaxDerivative; ++order)
        EXPECT_NEAR(b.derivative(order, 1.5 - 1e-9), 0.0, 1e-6) << order;
}

TEST(SmoothFunction, SumsAndSupport)
{
    const SmoothFunction f{Bump::polynomial(5, -1.0, 0.5), Bump::cosine(6, 2.0, 1.0)};
    EXPECT_EQ(f.support(), std::make_pair(-1.5, 3.0));
    EXPECT_EQ(f.breakpoints().size(), 4u);
    const SmoothFunction g = f - f;
    EXPECT_NEAR(g(2.1), 0.0, 1e-15);
    EXPECT_NEAR(f.scaled(3.0)(2.1), 3.0 * f(2.1), 1e-14);
    EXPECT_TRUE(SmoothFunction{}.is_zero());
}
