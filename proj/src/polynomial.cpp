#include "biharm/polynomial.hpp"

namespace biharm {

std::string to_string(const IntPolynomial& p, const std::string& var)
{
    if (p.is_zero()) return "0";
    std::string out;
    const auto& c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (sgn(c[i]) == 0) continue;
        const bool neg = sgn(c[i]) < 0;
        const ExactInt mag = abs(c[i]);
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        const bool unit = mag == 1 && i > 0;
        if (!unit) out += mag.get_str();
        if (i >= 1) out += var;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

ExactInt content(const IntPolynomial& p)
{
    ExactInt g = 0;
    for (const auto& c : p.coefficients()) {
        g = exact_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

IntPolynomial primitive_part(const IntPolynomial& p)
{
    if (p.is_zero()) return p;
    ExactInt g = content(p);
    if (sgn(p.leading()) < 0) g = -g;
    std::vector<ExactInt> c = p.coefficients();
    for (auto& v : c) v = exact_quotient(v, g);
    return IntPolynomial(std::move(c));
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b)
{
    if (b.is_zero()) throw InexactDivision("pseudo-remainder by zero polynomial");
    IntPolynomial r = a;
    const ExactInt& lb = b.leading();
    long steps = 0;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
        const IntPolynomial t = IntPolynomial::monomial(r.leading(), shift);
        r = r * lb - t * b;
        ++steps;
    }
    if (sgn(lb) < 0 && steps % 2 == 1) r = -r;
    return r;
}

IntPolynomial polynomial_gcd(const IntPolynomial& a, const IntPolynomial& b)
{
    IntPolynomial x = primitive_part(a);
    IntPolynomial y = primitive_part(b);
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPolynomial r = pseudo_remainder(x, y);
        x = std::move(y);
        y = primitive_part(r);
    }
    return primitive_part(x);
}

std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p)
{
    std::vector<IntPolynomial> factors;
    const IntPolynomial prim = primitive_part(p);
    if (prim.degree() <= 0) return factors;

    const IntPolynomial one = IntPolynomial::constant(1);
    const IntPolynomial dp = prim.derivative();
    const IntPolynomial a0 = polynomial_gcd(prim, dp);
    IntPolynomial b = exact_divide(prim, a0);
    IntPolynomial c = exact_divide(dp, a0);
    IntPolynomial d = c - b.derivative();
    while (b.degree() > 0) {
        const IntPolynomial a = d.is_zero() ? b : polynomial_gcd(b, d);
        factors.push_back(a.degree() > 0 ? a : one);
        const IntPolynomial nb = exact_divide(b, a);
        c = d.is_zero() ? IntPolynomial{} : exact_divide(d, a);
        b = nb;
        d = c - b.derivative();
    }
    while (!factors.empty() && factors.back().degree() <= 0) factors.pop_back();
    return factors;
}

std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p)
{
    std::vector<IntPolynomial> seq;
    if (p.is_zero()) return seq;
    seq.push_back(p);
    IntPolynomial dp = p.derivative();
    if (dp.is_zero()) return seq;
    seq.push_back(dp);
    for (;;) {
        IntPolynomial r = -pseudo_remainder(seq[seq.size() - 2], seq.back());
        if (r.is_zero()) break;
        const ExactInt g = content(r);
        std::vector<ExactInt> c = r.coefficients();
        for (auto& v : c) v = exact_quotient(v, g);
        seq.emplace_back(std::move(c));
    }
    return seq;
}

namespace {

enum class Point { minus_infinity, zero, plus_infinity };

int sign_at(const IntPolynomial& p, Point at)
{
    if (p.is_zero()) return 0;
    switch (at) {
    case Point::zero:
        return sgn(p.coefficient(0));
    case Point::plus_infinity:
        return sgn(p.leading());
    case Point::minus_infinity:
        return (p.degree() % 2 == 0) ? sgn(p.leading()) : -sgn(p.leading());
    }
    return 0;
}

long variations(const std::vector<IntPolynomial>& seq, Point at)
{
    long count = 0;
    int last = 0;
    for (const auto& p : seq) {
        const int s = sign_at(p, at);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

}  // namespace

long count_roots(const IntPolynomial& p, RootRegion region)
{
    if (p.is_zero()) throw Error("count_roots: zero polynomial");
    if (region == RootRegion::zero) return static_cast<long>(p.valuation());
    const IntPolynomial q = p.without_zero_root();
    if (q.degree() <= 0) return 0;
    const auto seq = sturm_sequence(q);
    if (region == RootRegion::negative) return variations(seq, Point::minus_infinity) - variations(seq, Point::zero);
    return variations(seq, Point::zero) - variations(seq, Point::plus_infinity);
}

long count_roots_with_multiplicity(const IntPolynomial& p, RootRegion region)
{
    if (p.is_zero()) throw Error("count_roots: zero polynomial");
    if (region == RootRegion::zero) return static_cast<long>(p.valuation());
    const auto factors = squarefree_decomposition(p.without_zero_root());
    long total = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].degree() <= 0) continue;
        total += static_cast<long>(i + 1) * count_roots(factors[i], region);
    }
    return total;
}

long coefficient_sign_changes(const IntPolynomial& p)
{
    long changes = 0;
    int last = 0;
    for (const auto& c : p.coefficients()) {
        const int s = sgn(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace biharm
