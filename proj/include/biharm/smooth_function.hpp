#pragma once

#include <array>
#include <random>
#include <utility>
#include <vector>

namespace biharm {

// Derivatives are available up to this order.
constexpr int kMaxDerivative = 4;

// A compactly supported bump with closed-form derivatives:
//   cosine:     A·cosᵖ(π(x−c)/(2w)) on |x−c| ≤ w
//   polynomial: A·(1−((x−c)/w)²)ᵖ   on |x−c| ≤ w
// Both are C^{p−1} across the endpoints, so p ≥ 5 keeps the fourth derivative continuous.
class Bump {
public:
    enum class Kind { cosine, polynomial };

    static Bump cosine(int power, double center = 0.0, double half_width = 1.0, double amplitude = 1.0);
    static Bump polynomial(int power, double center = 0.0, double half_width = 1.0, double amplitude = 1.0);

    double derivative(int order, double x) const;
    double operator()(double x) const { return derivative(0, x); }

    Kind kind() const { return kind_; }
    int power() const { return power_; }
    double center() const { return center_; }
    double half_width() const { return half_width_; }
    double amplitude() const { return amplitude_; }
    // Highest derivative order that is continuous on ℝ.
    int smoothness() const { return power_ - 1; }
    Bump scaled(double factor) const;

private:
    // c·Pᵃ·Qᵇ with (P, Q) = (cosθ, sinθ) or (1−u², u)
    struct Term {
        double coefficient;
        int p_exp;
        int q_exp;
    };

    Bump(Kind kind, int power, double center, double half_width, double amplitude);

    Kind kind_;
    int power_;
    double center_;
    double half_width_;
    double amplitude_;
    // j-th derivative of Pᵖ in the reference variable
    std::array<std::vector<Term>, kMaxDerivative + 1> terms_;
};

// Finite sum of bumps.
class SmoothFunction {
public:
    SmoothFunction() = default;
    SmoothFunction(std::initializer_list<Bump> bumps) : bumps_(bumps) {}
    explicit SmoothFunction(std::vector<Bump> bumps) : bumps_(std::move(bumps)) {}

    double derivative(int order, double x) const;
    double operator()(double x) const { return derivative(0, x); }

    bool is_zero() const;
    const std::vector<Bump>& bumps() const { return bumps_; }
    // Convex hull of the supports; {0, 0} for the zero function.
    std::pair<double, double> support() const;
    // Sorted support endpoints; quadrature panels never straddle them.
    std::vector<double> breakpoints() const;
    SmoothFunction scaled(double factor) const;

    friend SmoothFunction operator+(const SmoothFunction& a, const SmoothFunction& b);
    friend SmoothFunction operator-(const SmoothFunction& a, const SmoothFunction& b);

private:
    std::vector<Bump> bumps_;
};

// One to three bumps with powers in [min_power, 10], centers in [−3, 3],
// half-widths in [0.3, 2] and amplitudes in ±[0.2, 2].
SmoothFunction random_bump_sum(std::mt19937_64& rng, int min_power = 5);

}  // namespace biharm
