#include "biharm/noncompact.hpp"

#include <algorithm>
#include <numbers>

#include "biharm/errors.hpp"
#include "biharm/quadrature.hpp"

namespace biharm {

void CubicPhase::validate() const
{
    if (sgn(a) == 0 && sgn(b) == 0) throw NotProper("phase needs a^2 + b^2 > 0");
}

double CubicPhase::d1(double x) const
{
    return (3 * a.get_d() * x + 2 * b.get_d()) * x + c.get_d();
}

double CubicPhase::d2(double x) const
{
    return 6 * a.get_d() * x + 2 * b.get_d();
}

double CubicPhase::d3(double) const
{
    return 6 * a.get_d();
}

std::string to_string(Stability s)
{
    return s == Stability::Stable ? "Stable" : "NotCertified";
}

Stability is_strictly_stable(const CubicPhase& p)
{
    p.validate();
    if (sgn(p.a) == 0) return Stability::Stable;
    return sgn(p.b * p.b - 3 * p.a * p.c) <= 0 ? Stability::Stable : Stability::NotCertified;
}

ExactRational stability_integrand(const CubicPhase& p, const ExactRational& g)
{
    ExactRational v = 72 * p.a * p.a * g * g + 48 * p.a * p.b * g + 4 * p.b * p.b + 12 * p.a * p.c;
    v.canonicalize();
    return v;
}

ExactRational integrand_min(const CubicPhase& p)
{
    p.validate();
    ExactRational v = sgn(p.a) == 0 ? ExactRational(4 * p.b * p.b) : ExactRational(-4 * (p.b * p.b - 3 * p.a * p.c));
    v.canonicalize();
    return v;
}

std::vector<double> SectionPair::breakpoints() const
{
    std::vector<double> pts = f1.breakpoints();
    const std::vector<double> more = f2.breakpoints();
    pts.insert(pts.end(), more.begin(), more.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

double hessian_form(const CubicPhase& p, const SectionPair& v)
{
    p.validate();
    if (v.f1.is_zero() && v.f2.is_zero()) return 0.0;
    const auto integrand = [&](double x) {
        const double a1 = p.d1(x);
        const double a2 = p.d2(x);
        const double f1pp = v.f1.derivative(2, x);
        const double f2 = v.f2(x);
        const double w = v.f2.derivative(2, x) + a1 * a1 * f2;
        return f1pp * f1pp + w * w + (a2 * a2 + 2 * p.d3(x) * a1) * f2 * f2;
    };
    return integrate_piecewise(integrand, v.breakpoints());
}

I2Value i2_sections(const CubicPhase& p, const SectionPair& v, double x)
{
    p.validate();
    const double a1 = p.d1(x);
    const double a2 = p.d2(x);
    const double a3 = p.d3(x);
    I2Value out;
    out.y = v.f1.derivative(4, x);
    out.eta = v.f2.derivative(4, x) + 2 * a1 * a1 * v.f2.derivative(2, x) + 4 * a2 * a1 * v.f2.derivative(1, x) +
              (4 * a3 * a1 + 3 * a2 * a2 + a1 * a1 * a1 * a1) * v.f2(x);
    return out;
}

std::vector<I2Value> i2_sections(const CubicPhase& p, const SectionPair& v, const std::vector<double>& grid)
{
    std::vector<I2Value> out;
    out.reserve(grid.size());
    for (double x : grid) out.push_back(i2_sections(p, v, x));
    return out;
}

double i2_pairing(const CubicPhase& p, const SectionPair& v)
{
    p.validate();
    if (v.f1.is_zero() && v.f2.is_zero()) return 0.0;
    const auto integrand = [&](double x) {
        const I2Value img = i2_sections(p, v, x);
        return img.y * v.f1(x) + img.eta * v.f2(x);
    };
    return integrate_piecewise(integrand, v.breakpoints());
}

CubicPhase counterexample_phase()
{
    return {1, 0, -2, 0};
}

SectionPair counterexample_section()
{
    return {SmoothFunction{}, SmoothFunction{Bump::cosine(6, 0.0, std::numbers::pi / 2)}};
}

double counterexample_value()
{
    return hessian_form(counterexample_phase(), counterexample_section());
}

std::optional<InstabilityWitness> find_instability_witness(const CubicPhase& p)
{
    p.validate();
    const double center0 = sgn(p.a) == 0 ? 0.0 : -p.b.get_d() / (3 * p.a.get_d());
    std::optional<InstabilityWitness> best;
    for (int ci = -8; ci <= 8; ++ci) {
        const double c = center0 + 0.25 * ci;
        for (int wi = 1; wi <= 12; ++wi) {
            const double w = 0.25 * wi;
            SectionPair v{SmoothFunction{}, SmoothFunction{Bump::cosine(6, c, w)}};
            const double h = hessian_form(p, v);
            if (h < 0.0 && (!best || h < best->hessian)) best = InstabilityWitness{v, h, c, w};
        }
    }
    return best;
}

}  // namespace biharm
