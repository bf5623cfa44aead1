#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "biharm/errors.hpp"
#include "biharm/exact_int.hpp"
#include "biharm/quad_ext.hpp"

namespace biharm {

// Univariate polynomial over an exact ring, coefficients lowest degree first.
// The leading coefficient is nonzero unless the polynomial is zero.
template <class R>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<R> coefficients) : c_(std::move(coefficients)) { trim(); }
    Polynomial(std::initializer_list<R> coefficients) : c_(coefficients) { trim(); }

    static Polynomial constant(R v) { return Polynomial(std::vector<R>{std::move(v)}); }
    static Polynomial monomial(R v, std::size_t degree)
    {
        std::vector<R> c(degree + 1, R(0));
        c[degree] = std::move(v);
        return Polynomial(std::move(c));
    }
    // x − root
    static Polynomial linear_factor(const R& root) { return Polynomial({R(-root), R(1)}); }

    bool is_zero() const { return c_.empty(); }
    // −1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<R>& coefficients() const { return c_; }
    R coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : R(0); }
    const R& leading() const { return c_.back(); }

    Polynomial operator-() const
    {
        Polynomial r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const R& v)
    {
        for (auto& x : c_) x *= v;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial x, const Polynomial& y) { return x += y; }
    friend Polynomial operator-(Polynomial x, const Polynomial& y) { return x -= y; }
    friend Polynomial operator*(Polynomial x, const R& v) { return x *= v; }
    friend Polynomial operator*(const Polynomial& x, const Polynomial& y)
    {
        if (x.is_zero() || y.is_zero()) return {};
        std::vector<R> r(x.c_.size() + y.c_.size() - 1, R(0));
        for (std::size_t i = 0; i < x.c_.size(); ++i) {
            if (x.c_[i] == R(0)) continue;
            for (std::size_t j = 0; j < y.c_.size(); ++j) r[i + j] += x.c_[i] * y.c_[j];
        }
        return Polynomial(std::move(r));
    }
    friend bool operator==(const Polynomial& x, const Polynomial& y) { return x.c_ == y.c_; }

    Polynomial pow(unsigned e) const
    {
        Polynomial r = constant(R(1));
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    Polynomial derivative() const
    {
        if (c_.size() <= 1) return {};
        std::vector<R> r(c_.size() - 1, R(0));
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * R(static_cast<long>(i));
        return Polynomial(std::move(r));
    }

    R evaluate(const R& x) const
    {
        R acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // Multiplicity of the root x = 0 (index of the lowest nonzero coefficient).
    std::size_t valuation() const
    {
        std::size_t v = 0;
        while (v < c_.size() && c_[v] == R(0)) ++v;
        return v;
    }

    // Divides out x^v where v is the valuation.
    Polynomial without_zero_root() const
    {
        const std::size_t v = valuation();
        return Polynomial(std::vector<R>(c_.begin() + static_cast<long>(v), c_.end()));
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == R(0)) c_.pop_back();
    }

    std::vector<R> c_;
};

// Exact quotient num / den; throws InexactDivision when den does not divide num.
template <class R>
Polynomial<R> exact_divide(const Polynomial<R>& num, const Polynomial<R>& den)
{
    if (den.is_zero()) throw InexactDivision("polynomial division by zero");
    if (num.is_zero()) return {};
    if (num.degree() < den.degree()) throw InexactDivision("polynomial division is not exact");
    std::vector<R> rem = num.coefficients();
    const auto dd = static_cast<std::size_t>(den.degree());
    std::vector<R> quo(rem.size() - dd, R(0));
    for (std::size_t i = quo.size(); i-- > 0;) {
        const R& top = rem[i + dd];
        if (top == R(0)) continue;
        R q = exact_quotient(top, den.leading());
        for (std::size_t j = 0; j <= dd; ++j) rem[i + j] -= q * den.coefficients()[j];
        quo[i] = std::move(q);
    }
    for (const auto& r : rem) {
        if (!(r == R(0))) throw InexactDivision("polynomial division is not exact");
    }
    return Polynomial<R>(std::move(quo));
}

using IntPolynomial = Polynomial<ExactInt>;
using QuadPolynomial = Polynomial<QuadExt>;

std::string to_string(const IntPolynomial& p, const std::string& var = "x");

// --- Integer polynomial algorithms -----------------------------------------

// Positive gcd of the coefficients (0 for the zero polynomial).
ExactInt content(const IntPolynomial& p);
// p / content(p), normalized to a positive leading coefficient.
IntPolynomial primitive_part(const IntPolynomial& p);
// A positive multiple of the remainder of a by b over ℚ.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);
// Primitive gcd with positive leading coefficient.
IntPolynomial polynomial_gcd(const IntPolynomial& a, const IntPolynomial& b);

// Yun decomposition: p = c · ∏ f_i^i with each f_i squarefree and pairwise coprime.
// Entry i−1 holds f_i (a constant 1 when no factor of that multiplicity exists).
std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p);

// Sturm chain P, P', −rem, … with positive rescalings (sign pattern preserved).
std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p);

enum class RootRegion { negative, zero, positive };

// Distinct real roots in the region; for RootRegion::zero, the multiplicity of x = 0.
long count_roots(const IntPolynomial& p, RootRegion region);
// Real roots in the region counted with multiplicity.
long count_roots_with_multiplicity(const IntPolynomial& p, RootRegion region);

// Sign changes in the coefficient sequence (zeros skipped).
long coefficient_sign_changes(const IntPolynomial& p);

}  // namespace biharm
