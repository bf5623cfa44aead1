#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "biharm/errors.hpp"
#include "biharm/exact_matrix.hpp"
#include "biharm/polynomial.hpp"
#include "biharm/quad_ext.hpp"
#include "biharm/surd.hpp"

using namespace biharm;

namespace {

IntPolynomial from_roots(const std::vector<long>& roots)
{
    IntPolynomial p = IntPolynomial::constant(1);
    for (long r : roots) p = p * IntPolynomial::linear_factor(ExactInt(r));
    return p;
}

// Faddeev–LeVerrier over ℚ: an independent characteristic polynomial.
IntPolynomial leverrier(const std::vector<std::vector<long>>& a)
{
    const std::size_t n = a.size();
    using Mat = std::vector<std::vector<ExactRational>>;
    Mat m(n, std::vector<ExactRational>(n, 0));
    Mat am(n, std::vector<ExactRational>(n, 0));
    std::vector<ExactRational> c(n + 1, 0);
    c[n] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I
        Mat next(n, std::vector<ExactRational>(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                ExactRational s = 0;
                for (std::size_t l = 0; l < n; ++l) s += ExactRational(a[i][l]) * am[l][j];
                next[i][j] = s;
            }
            next[i][i] += c[n - k + 1];
        }
        m = next;
        ExactRational tr = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t l = 0; l < n; ++l) tr += ExactRational(a[i][l]) * m[l][i];
        }
        c[n - k] = -tr / ExactRational(static_cast<long>(k));
        am = m;
    }
    std::vector<ExactInt> out;
    for (auto& v : c) {
        v.canonicalize();
        EXPECT_EQ(v.get_den(), 1);
        out.push_back(v.get_num());
    }
    return IntPolynomial(out);
}

}  // namespace

TEST(QuadExt, Multiplication)
{
    EXPECT_EQ(quad_mul(QuadExt(1, 1), QuadExt(1, -1)), QuadExt(-1, 0));
    EXPECT_EQ(quad_mul(QuadExt(0, 2), QuadExt(0, 3)), QuadExt(12, 0));
    EXPECT_EQ(quad_mul(QuadExt(3, 2), QuadExt(1, 1)), QuadExt(7, 5));
}

TEST(QuadExt, SignAndQuotient)
{
    EXPECT_EQ(QuadExt(3, -2).sign(), 1);   // 3 − 2.828
    EXPECT_EQ(QuadExt(-3, 2).sign(), -1);
    EXPECT_EQ(QuadExt(0, 0).sign(), 0);
    EXPECT_EQ(QuadExt(-1, 1).sign(), 1);
    EXPECT_EQ(exact_quotient(QuadExt(7, 5), QuadExt(1, 1)), QuadExt(3, 2));
    EXPECT_THROW(exact_quotient(QuadExt(1, 0), QuadExt(2, 0)), InexactDivision);
    EXPECT_EQ(QuadExt(3, -2).to_string(), "3 - 2√2");
}

TEST(Surd, Signs)
{
    EXPECT_EQ(Surd(-1, 1, 2, 1).sign(), 0);
    EXPECT_EQ(Surd(16, 1088, 2, -1).sign(), -1);
    EXPECT_EQ(Surd(0, 0, 2, 1).sign(), 0);
    EXPECT_EQ(Surd(-6, 33, 1, 1).sign(), -1);
    EXPECT_EQ(Surd(-5, 33, 1, 1).sign(), 1);
}

TEST(Surd, ReducedForm)
{
    EXPECT_EQ(Surd(-10, 132, 8, 1).to_string(), "(-5 + √33)/4");
    EXPECT_EQ(Surd(4, 9, 7, 1).to_string(), "1");
    EXPECT_EQ(Surd(0, 8, 1, -1).to_string(), "-2√2");
    EXPECT_THROW(Surd(1, -1, 1, 1), Error);
    EXPECT_THROW(Surd(1, 1, 0, 1), Error);
}

TEST(Surd, OrderingMatchesLongDouble)
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> pd(-200, 200);
    std::uniform_int_distribution<long> sd(0, 4000);
    std::uniform_int_distribution<long> qd(1, 40);
    std::uniform_int_distribution<int> bd(0, 1);
    int checked = 0;
    for (int t = 0; t < 4000; ++t) {
        const Surd x(pd(rng), sd(rng), qd(rng), bd(rng) ? 1 : -1);
        const Surd y(pd(rng), sd(rng), qd(rng), bd(rng) ? 1 : -1);
        auto value = [](const Surd& v) {
            return (static_cast<long double>(v.p().get_si()) +
                    v.branch() * std::sqrt(static_cast<long double>(v.s().get_si()))) /
                   static_cast<long double>(v.q().get_si());
        };
        const long double d = value(x) - value(y);
        if (std::fabs(d) < 1e-9L) continue;
        ++checked;
        EXPECT_EQ(x < y, d < 0) << x.to_string() << " vs " << y.to_string();
        EXPECT_NEAR(x.to_double(), static_cast<double>(value(x)), 1e-9);
    }
    EXPECT_GT(checked, 3500);
}

TEST(Polynomial, CountRoots)
{
    const IntPolynomial x2m1({ExactInt(-1), ExactInt(0), ExactInt(1)});
    EXPECT_EQ(count_roots(x2m1, RootRegion::negative), 1);
    EXPECT_EQ(count_roots(x2m1, RootRegion::positive), 1);
    EXPECT_EQ(count_roots(x2m1, RootRegion::zero), 0);

    const IntPolynomial p = from_roots({-3, -3, 0, 0, 0, 2, 5, 5, 5}) * IntPolynomial({ExactInt(1), ExactInt(0), ExactInt(1)});
    EXPECT_EQ(count_roots(p, RootRegion::negative), 1);
    EXPECT_EQ(count_roots(p, RootRegion::zero), 3);
    EXPECT_EQ(count_roots(p, RootRegion::positive), 2);
    EXPECT_EQ(count_roots_with_multiplicity(p, RootRegion::negative), 2);
    EXPECT_EQ(count_roots_with_multiplicity(p, RootRegion::positive), 4);
}

TEST(Polynomial, SquarefreeDecomposition)
{
    const IntPolynomial p = from_roots({1, 2, 2, 3, 3, 3});
    const auto f = squarefree_decomposition(p);
    ASSERT_EQ(f.size(), 3u);
    EXPECT_EQ(f[0], from_roots({1}));
    EXPECT_EQ(f[1], from_roots({2}));
    EXPECT_EQ(f[2], from_roots({3}));
}

TEST(Polynomial, GcdAndRemainder)
{
    const IntPolynomial a = from_roots({1, 4, -2});
    const IntPolynomial b = from_roots({4, 7}) * ExactInt(6);
    EXPECT_EQ(polynomial_gcd(a, b), from_roots({4}));
    EXPECT_EQ(to_string(from_roots({1, -1})), "x^2 - 1");
    EXPECT_EQ(coefficient_sign_changes(from_roots({1, 2, -3})), 2);
}

// Random integer-root polynomials times a positive-definite quadratic; the
// construction fixes the answer.
TEST(Polynomial, SturmMatchesConstruction)
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> rd(-9, 9);
    std::uniform_int_distribution<int> nd(1, 8);
    for (int t = 0; t < 300; ++t) {
        std::vector<long> roots;
        const int n = nd(rng);
        for (int i = 0; i < n; ++i) roots.push_back(rd(rng));
        const long r = rd(rng);
        // x² + bx + c with b² ≤ 81 < 4c has no real roots
        IntPolynomial p = from_roots(roots) * IntPolynomial({ExactInt(21 + r * r), ExactInt(rd(rng)), ExactInt(1)});
        p = p * ExactInt(rd(rng) >= 0 ? 3 : -2);
        std::set<long> neg, pos;
        long negm = 0, posm = 0, zero = 0;
        for (long r : roots) {
            if (r < 0) { neg.insert(r); ++negm; }
            if (r > 0) { pos.insert(r); ++posm; }
            if (r == 0) ++zero;
        }
        EXPECT_EQ(count_roots(p, RootRegion::negative), static_cast<long>(neg.size()));
        EXPECT_EQ(count_roots(p, RootRegion::positive), static_cast<long>(pos.size()));
        EXPECT_EQ(count_roots(p, RootRegion::zero), zero);
        EXPECT_EQ(count_roots_with_multiplicity(p, RootRegion::negative), negm);
        EXPECT_EQ(count_roots_with_multiplicity(p, RootRegion::positive), posm);
    }
}

TEST(ExactMatrix, CharpolySmall)
{
    ExactMatrix id = ExactMatrix::diagonal({QuadExt(1), QuadExt(1)});
    EXPECT_EQ(charpoly_exact(id), IntPolynomial({ExactInt(1), ExactInt(-2), ExactInt(1)}));
    ExactMatrix d = ExactMatrix::diagonal({QuadExt(0), QuadExt(-1)});
    EXPECT_EQ(charpoly_exact(d), IntPolynomial({ExactInt(0), ExactInt(1), ExactInt(1)}));

    ExactMatrix s(2);
    s.at(0, 1) = QuadExt::sqrt2();
    s.at(1, 0) = QuadExt::sqrt2();
    EXPECT_EQ(charpoly_exact(s), IntPolynomial({ExactInt(-2), ExactInt(0), ExactInt(1)}));

    ExactMatrix irr = ExactMatrix::diagonal({QuadExt::sqrt2(), QuadExt(0)});
    EXPECT_THROW(charpoly_exact(irr), IrrationalCoefficient);

    ExactMatrix asym(2);
    asym.at(0, 1) = QuadExt(1);
    EXPECT_THROW(require_symmetric(asym, "test"), AsymmetricBlock);
}

TEST(ExactMatrix, CharpolyMatchesLeverrier)
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> ed(-6, 6);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + t % 7;
        std::vector<std::vector<long>> a(n, std::vector<long>(n));
        ExactMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                // sparse entries exercise zero pivots in the determinant
                a[i][j] = (ed(rng) % 3 == 0) ? ed(rng) : 0;
                m.at(i, j) = QuadExt(a[i][j]);
            }
        }
        const IntPolynomial cp = charpoly_exact(m);
        EXPECT_EQ(cp, leverrier(a));
        const ExactInt c0 = cp.coefficient(0);
        const ExactInt det = (n % 2 == 0) ? c0 : ExactInt(-c0);
        EXPECT_EQ(determinant(m), QuadExt(det));
    }
}

TEST(ExactMatrix, NumericEigenvaluesAgreeWithCharpoly)
{
    ExactMatrix m(3);
    m.at(0, 0) = 2;
    m.at(1, 1) = 2;
    m.at(2, 2) = 2;
    m.at(0, 1) = m.at(1, 0) = QuadExt(0, 1);
    m.at(1, 2) = m.at(2, 1) = QuadExt(0, 1);
    const auto ev = m.numeric_eigenvalues();
    ASSERT_EQ(ev.size(), 3u);
    EXPECT_NEAR(ev[0], 0.0, 1e-12);
    EXPECT_NEAR(ev[1], 2.0, 1e-12);
    EXPECT_NEAR(ev[2], 4.0, 1e-12);
    const IntPolynomial cp = charpoly_exact(m);
    EXPECT_EQ(count_roots(cp, RootRegion::zero), 1);
    EXPECT_EQ(count_roots(cp, RootRegion::positive), 2);
}
