#include "biharm/smooth_function.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "biharm/errors.hpp"

namespace biharm {

Bump::Bump(Kind kind, int power, double center, double half_width, double amplitude)
    : kind_(kind), power_(power), center_(center), half_width_(half_width), amplitude_(amplitude)
{
    if (power < 1) throw Error("bump power must be at least 1");
    if (!(half_width > 0.0)) throw Error("bump half-width must be positive");

    terms_[0] = {{1.0, power, 0}};
    for (int j = 1; j <= kMaxDerivative; ++j) {
        std::map<std::pair<int, int>, double> acc;
        for (const auto& t : terms_[j - 1]) {
            if (kind == Kind::cosine) {
                // (cosᵃ sinᵇ)′ = −a cosᵃ⁻¹ sinᵇ⁺¹ + b cosᵃ⁺¹ sinᵇ⁻¹
                if (t.p_exp > 0) acc[{t.p_exp - 1, t.q_exp + 1}] -= t.coefficient * t.p_exp;
                if (t.q_exp > 0) acc[{t.p_exp + 1, t.q_exp - 1}] += t.coefficient * t.q_exp;
            } else {
                // (sᵃ uᵇ)′ = −2a sᵃ⁻¹ uᵇ⁺¹ + b sᵃ uᵇ⁻¹ with s = 1 − u²
                if (t.p_exp > 0) acc[{t.p_exp - 1, t.q_exp + 1}] -= 2.0 * t.coefficient * t.p_exp;
                if (t.q_exp > 0) acc[{t.p_exp, t.q_exp - 1}] += t.coefficient * t.q_exp;
            }
        }
        for (const auto& [e, c] : acc)
            if (c != 0.0) terms_[j].push_back({c, e.first, e.second});
    }
}

Bump Bump::cosine(int power, double center, double half_width, double amplitude)
{
    return Bump(Kind::cosine, power, center, half_width, amplitude);
}

Bump Bump::polynomial(int power, double center, double half_width, double amplitude)
{
    return Bump(Kind::polynomial, power, center, half_width, amplitude);
}

double Bump::derivative(int order, double x) const
{
    if (order < 0 || order > kMaxDerivative) throw Error("derivative order out of range");
    const double d = x - center_;
    const double u = d / half_width_;
    if (std::abs(u) >= 1.0) return 0.0;
    double p;
    double q;
    double chain;
    if (kind_ == Kind::cosine) {
        // Measure θ from the nearer zero of cos so P stays accurate near the edge.
        const double omega = std::numbers::pi / (2.0 * half_width_);
        const double gap = omega * (half_width_ - std::abs(d));
        p = std::sin(gap);
        q = (d < 0 ? -1.0 : 1.0) * std::cos(gap);
        chain = std::pow(omega, order);
    } else {
        p = (1.0 - u) * (1.0 + u);
        q = u;
        chain = std::pow(1.0 / half_width_, order);
    }
    double v = 0.0;
    for (const auto& t : terms_[order]) v += t.coefficient * std::pow(p, t.p_exp) * std::pow(q, t.q_exp);
    return amplitude_ * chain * v;
}

Bump Bump::scaled(double factor) const
{
    Bump b = *this;
    b.amplitude_ *= factor;
    return b;
}

double SmoothFunction::derivative(int order, double x) const
{
    double v = 0.0;
    for (const auto& b : bumps_) v += b.derivative(order, x);
    return v;
}

bool SmoothFunction::is_zero() const
{
    return std::all_of(bumps_.begin(), bumps_.end(), [](const Bump& b) { return b.amplitude() == 0.0; });
}

std::pair<double, double> SmoothFunction::support() const
{
    if (bumps_.empty()) return {0.0, 0.0};
    double lo = bumps_.front().center() - bumps_.front().half_width();
    double hi = bumps_.front().center() + bumps_.front().half_width();
    for (const auto& b : bumps_) {
        lo = std::min(lo, b.center() - b.half_width());
        hi = std::max(hi, b.center() + b.half_width());
    }
    return {lo, hi};
}

std::vector<double> SmoothFunction::breakpoints() const
{
    std::vector<double> pts;
    for (const auto& b : bumps_) {
        pts.push_back(b.center() - b.half_width());
        pts.push_back(b.center() + b.half_width());
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

SmoothFunction SmoothFunction::scaled(double factor) const
{
    std::vector<Bump> out;
    out.reserve(bumps_.size());
    for (const auto& b : bumps_) out.push_back(b.scaled(factor));
    return SmoothFunction(std::move(out));
}

SmoothFunction operator+(const SmoothFunction& a, const SmoothFunction& b)
{
    std::vector<Bump> out = a.bumps_;
    out.insert(out.end(), b.bumps_.begin(), b.bumps_.end());
    return SmoothFunction(std::move(out));
}

SmoothFunction operator-(const SmoothFunction& a, const SmoothFunction& b)
{
    return a + b.scaled(-1.0);
}

SmoothFunction random_bump_sum(std::mt19937_64& rng, int min_power)
{
    std::uniform_int_distribution<int> count(1, 3);
    std::uniform_int_distribution<int> power(min_power, 10);
    std::uniform_int_distribution<int> kind(0, 1);
    std::uniform_real_distribution<double> center(-3.0, 3.0);
    std::uniform_real_distribution<double> width(0.3, 2.0);
    std::uniform_real_distribution<double> amp(0.2, 2.0);
    std::bernoulli_distribution negative(0.5);
    std::vector<Bump> bumps;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        const int p = power(rng);
        const double c = center(rng);
        const double w = width(rng);
        const double a = negative(rng) ? -amp(rng) : amp(rng);
        bumps.push_back(kind(rng) == 0 ? Bump::cosine(p, c, w, a) : Bump::polynomial(p, c, w, a));
    }
    return SmoothFunction(std::move(bumps));
}

}  // namespace biharm
