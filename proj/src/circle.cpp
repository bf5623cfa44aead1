#include "biharm/circle.hpp"

#include "biharm/errors.hpp"
#include "biharm/polynomial.hpp"

namespace biharm {

namespace {

void require_circle(long k, long m)
{
    if (k < 1) throw InvalidLabel("k must be a positive integer");
    if (m < 0) throw InvalidLabel("m must be nonnegative");
}

}  // namespace

ExactMatrix circle_block(long k, long m)
{
    require_circle(k, m);
    const ExactInt K(k), M(m);
    const ExactInt k2 = K * K;
    if (m == 0) return ExactMatrix::diagonal({QuadExt(0), QuadExt(ExactInt(-k2 * k2))});
    // I₂(f V_Y) = λ(λ+3k²) f V_Y + 2√2kλ f' V_η
    // I₂(f V_η) = (λ² − k⁴ + 2k²λ) f V_η − 2√2kλ f' V_Y,  λ = m²
    const ExactInt lambda = M * M;
    const QuadExt a(ExactInt(lambda * (lambda + 3 * k2)));
    const QuadExt b(ExactInt(lambda * lambda - k2 * k2 + 2 * k2 * lambda));
    const QuadExt c(0, ExactInt(2 * K * lambda * M));
    // basis: cos·V_Y, sin·V_Y, cos·V_η, sin·V_η; (cos)' = −m sin, (sin)' = m cos
    ExactMatrix out = ExactMatrix::diagonal({a, a, b, b});
    out.at(3, 0) = -c;  // I₂(cos V_Y) ∋ −C sin V_η
    out.at(2, 1) = c;   // I₂(sin V_Y) ∋ C cos V_η
    out.at(1, 2) = c;   // I₂(cos V_η) ∋ C sin V_Y
    out.at(0, 3) = -c;  // I₂(sin V_η) ∋ −C cos V_Y
    require_symmetric(out, "circle block");
    return out;
}

Surd circle_eigenvalue(long k, long m, Branch branch)
{
    require_circle(k, m);
    if (m == 0 || branch == Branch::mu0 || branch == Branch::mu1) {
        if (m != 0 || branch == Branch::plus || branch == Branch::minus) {
            throw InvalidLabel("circle: mu branches belong to m = 0, lambda branches to m >= 1");
        }
        return eigenvalue(TorusLabel{k, 0, 0}, branch);
    }
    const ExactInt K(k), M(m);
    const ExactInt k2 = K * K, m2 = M * M;
    const ExactInt p = -k2 * k2 + 2 * m2 * m2 + 5 * k2 * m2;
    const ExactInt s = k2 * k2 * k2 * k2 + 2 * k2 * k2 * k2 * m2 + k2 * k2 * m2 * m2 + 32 * k2 * m2 * m2 * m2;
    return Surd(p, s, 2, branch == Branch::plus ? 1 : -1).reduced();
}

CircleReport circle_index_nullity(long k)
{
    require_circle(k, 0);
    CircleReport r{k, 1, 1};  // μ₁ = −k⁴ and μ₀ = 0
    for (long m = 1; static_cast<long long>(m) * m < enumeration_bound(k); ++m) {
        if (circle_eigenvalue(k, m, Branch::plus).sign() <= 0) throw Error("circle: nonpositive lambda+");
        const int sg = sign_lambda_minus_axis(k, m);
        if (sg != circle_eigenvalue(k, m, Branch::minus).sign()) throw Error("circle: sign test mismatch");
        if (sg < 0) r.index += 2;
        if (sg == 0) r.nullity += 2;
    }
    return r;
}

CircleReport circle_index_nullity_by_matrix(long k)
{
    require_circle(k, 0);
    CircleReport r{k, 0, 0};
    for (long m = 0; static_cast<long long>(m) * m < enumeration_bound(k); ++m) {
        const IntPolynomial cp = charpoly_exact(circle_block(k, m));
        r.index += count_roots_with_multiplicity(cp, RootRegion::negative);
        r.nullity += count_roots(cp, RootRegion::zero);
    }
    return r;
}

}  // namespace biharm
