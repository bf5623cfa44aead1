#include <gtest/gtest.h>

#include <cmath>
#include <array>
#include <map>
#include <tuple>

#include "biharm/errors.hpp"
#include "biharm/polynomial.hpp"
#include "biharm/torus.hpp"

using namespace biharm;

namespace {

// Basis section f·V with f = trig(mγ)·trig(nϑ); parity 0 = cos, 1 = sin.
struct Section {
    int pg;
    int pt;
    int field;  // 0 = V_Y, 1 = V_η
    bool operator<(const Section& o) const
    {
        return std::tie(field, pg, pt) < std::tie(o.field, o.pg, o.pt);
    }
};

// I₂(f V_Y) = λ(λ+k²) f V_Y − 2k² f_γγ V_Y + 2√2 k λ f_γ V_η
// I₂(f V_η) = (λ²−k⁴) f V_η − 2k² f_γγ V_η − 2√2 k λ f_γ V_Y
std::map<Section, QuadExt> apply_operator(long k, long m, long n, const Section& in)
{
    const ExactInt K(k), M(m);
    const ExactInt lambda = ExactInt(m) * m + ExactInt(n) * n;
    std::map<Section, QuadExt> out;
    // f_γγ = −m² f
    const ExactInt diag = in.field == 0 ? ExactInt(lambda * (lambda + K * K) + 2 * K * K * M * M)
                                        : ExactInt(lambda * lambda - K * K * K * K + 2 * K * K * M * M);
    out[in] += QuadExt(diag);
    // f_γ: cos → −m sin, sin → m cos
    const Section d{1 - in.pg, in.pt, 1 - in.field};
    const ExactInt sign_d = in.pg == 0 ? ExactInt(-M) : M;
    const ExactInt coeff = (in.field == 0 ? 2 : -2) * K * lambda * sign_d;
    if (m != 0) out[d] += QuadExt(0, coeff);
    return out;
}

ExactMatrix oracle_block(long k, long m, long n)
{
    std::vector<Section> basis;
    for (int field = 0; field < 2; ++field) {
        if (m == 0 && n == 0) {
            basis.push_back({0, 0, field});
        } else if (n == 0) {
            for (int pg = 0; pg < 2; ++pg) basis.push_back({pg, 0, field});
        } else if (m == 0) {
            for (int pt = 0; pt < 2; ++pt) basis.push_back({0, pt, field});
        } else {
            for (int pg = 0; pg < 2; ++pg)
                for (int pt = 0; pt < 2; ++pt) basis.push_back({pg, pt, field});
        }
    }
    ExactMatrix out(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        for (const auto& [sec, c] : apply_operator(k, m, n, basis[j])) {
            const auto it = std::find_if(basis.begin(), basis.end(), [&](const Section& b) {
                return b.pg == sec.pg && b.pt == sec.pt && b.field == sec.field;
            });
            EXPECT_NE(it, basis.end()) << "block not preserved";
            out.at(static_cast<std::size_t>(it - basis.begin()), j) += c;
        }
    }
    return out;
}

double surd_value(const Surd& s) { return s.to_double(); }

}  // namespace

TEST(TorusEigenvalue, Examples)
{
    EXPECT_EQ(eigenvalue({1, 0, 0}, Branch::mu1), Surd::rational(-1));
    EXPECT_EQ(eigenvalue({1, 0, 1}, Branch::minus), Surd::rational(0));
    EXPECT_EQ(eigenvalue({2, 1, 1}, Branch::minus), Surd(16, 1088, 2, -1));
    EXPECT_EQ(eigenvalue({2, 1, 1}, Branch::minus).sign(), -1);
    EXPECT_EQ(eigenvalue({3, 0, 2}, Branch::plus), Surd::rational(4 * 13));
    EXPECT_EQ(eigenvalue({3, 0, 2}, Branch::minus), Surd::rational(16 - 81));
    EXPECT_THROW(eigenvalue({1, 0, 0}, Branch::plus), InvalidLabel);
    EXPECT_THROW(eigenvalue({1, 1, 0}, Branch::mu0), InvalidLabel);
    EXPECT_THROW(eigenvalue({0, 1, 0}, Branch::plus), InvalidLabel);
    // μ₀ = λ⁻ₖ,₀ = λ⁻₀,ₖ
    for (long k = 1; k <= 12; ++k) {
        EXPECT_EQ(eigenvalue({k, k, 0}, Branch::minus).sign(), 0);
        EXPECT_EQ(eigenvalue({k, 0, k}, Branch::minus).sign(), 0);
    }
}

TEST(TorusSign, Examples)
{
    EXPECT_EQ(sign_lambda_minus(2, 1, 1), -1);
    EXPECT_EQ(sign_lambda_minus(2, 2, 1), -1);
    EXPECT_EQ(sign_lambda_minus(2, 1, 2), 1);
    EXPECT_EQ(lambda_minus_discriminant(2, 1, 2), 101);
    for (long m = 1; m <= 5; ++m)
        for (long n = 1; n <= 5; ++n) EXPECT_EQ(sign_lambda_minus(1, m, n), 1);
    EXPECT_EQ(sign_lambda_minus_axis(5, 3), -1);
    EXPECT_EQ(sign_lambda_minus_axis(5, 5), 0);
    EXPECT_EQ(sign_lambda_minus_axis(5, 6), 1);
}

TEST(TorusSign, SurdAgreesWithIntegerTest)
{
    for (long k = 1; k <= 20; ++k) {
        const long long bound = enumeration_bound(k);
        for (long m = 1; m * m < bound; ++m) {
            for (long n = 1; m * m + n * n < bound; ++n) {
                const int fast = sign_lambda_minus(k, m, n);
                ASSERT_EQ(fast, eigenvalue({k, m, n}, Branch::minus).sign()) << k << " " << m << " " << n;
                ASSERT_EQ(fast, sign_lambda_minus_exact(k, m, n));
            }
        }
    }
}

TEST(TorusSign, LambdaPlusPositive)
{
    for (long k = 1; k <= 20; ++k) {
        const long long bound = enumeration_bound(k);
        for (long m = 0; m * m < bound; ++m) {
            for (long n = 0; m * m + n * n < bound; ++n) {
                if (m == 0 && n == 0) continue;
                ASSERT_EQ(eigenvalue({k, m, n}, Branch::plus).sign(), 1) << k << " " << m << " " << n;
            }
        }
    }
}

TEST(TorusBound, ValuesAndShell)
{
    EXPECT_EQ(enumeration_bound(1), 9);
    EXPECT_EQ(enumeration_bound(2), 36);
    for (long m = 1; m <= 10; ++m)
        for (long n = 1; n <= 10; ++n)
            if (m * m + n * n >= 9) EXPECT_GT(lambda_minus_discriminant(1, m, n), 0);
    for (long k = 1; k <= 30; ++k) {
        for (long m = 0; m * m <= 10 * k * k; ++m) {
            for (long n = 0; m * m + n * n <= 10 * k * k; ++n) {
                if (m * m + n * n < 9 * k * k) continue;
                ASSERT_GT(lambda_minus_discriminant(k, m, n), 0) << k << " " << m << " " << n;
            }
        }
    }
}

TEST(TorusIndex, SmallK)
{
    const IndexReport r1 = index_nullity(1);
    EXPECT_EQ(r1.index, 1);
    EXPECT_EQ(r1.nullity, 5);
    const IndexReport r2 = index_nullity(2);
    EXPECT_EQ(r2.index, 13);
    EXPECT_EQ(r2.nullity, 5);
    const std::vector<LatticePair> want{{1, 1}, {2, 1}};
    EXPECT_EQ(r2.negative_pairs, want);
}

TEST(TorusIndex, TableRowsAndFrozenOracle)
{
    const std::vector<std::array<long, 3>> rows{{1, 1, 5},   {2, 13, 5},  {3, 29, 5},  {4, 57, 5},
                                                {5, 89, 5},  {6, 129, 5}, {7, 181, 5}, {8, 233, 5},
                                                {9, 297, 5}, {10, 365, 5}, {17, 1065, 5}};
    for (const auto& [k, index, nullity] : rows) {
        const IndexReport r = index_nullity(k, false);
        EXPECT_EQ(r.index, index) << "k=" << k;
        EXPECT_EQ(r.nullity, nullity) << "k=" << k;
        EXPECT_LE(r.f, k * k);
    }
    // Frozen from an independent brute-force enumeration of D over m²+n² < 9k².
    EXPECT_EQ(index_nullity(10, false).f, 82);
    EXPECT_EQ(index_nullity(20, false).f, 348);
    const IndexReport r50 = index_nullity(50, false);
    EXPECT_EQ(r50.f, 2268);
    EXPECT_EQ(r50.f_box, 2254);
    const IndexReport r155 = index_nullity(155, false);
    EXPECT_EQ(r155.f, 22176);
    EXPECT_EQ(r155.index, 89321);
    EXPECT_EQ(r155.nullity, 5);
    EXPECT_EQ(r155.f_box, 21954);
}

TEST(TorusIndex, NegativePairsBeyondBoxAreGenuine)
{
    // λ⁻ < 0 at (156, 19) for k = 155, confirmed by the block eigenvalues.
    EXPECT_EQ(sign_lambda_minus(155, 156, 19), -1);
    const auto ev = block_matrix(155, 156, 19).numeric_eigenvalues();
    EXPECT_LT(ev.front(), 0.0);
}

TEST(TorusScan, OrderedAndWorkerIndependent)
{
    const auto one = conjecture_scan(40, 1);
    const auto many = conjecture_scan(40, 4);
    ASSERT_EQ(one.size(), 40u);
    EXPECT_EQ(one, many);
    for (std::size_t i = 0; i < one.size(); ++i) {
        EXPECT_EQ(one[i].k, static_cast<long>(i) + 1);
        EXPECT_EQ(one[i].g, 0);
        const IndexReport r = index_nullity(one[i].k);
        EXPECT_EQ(one[i].negative_pairs_digest, r.negative_pairs_digest);
        EXPECT_EQ(static_cast<std::size_t>(one[i].f), r.negative_pairs.size());
    }
}

TEST(TorusScan, NearMissAt192)
{
    const auto misses = near_miss_probe(192, 100);
    const auto it = std::find_if(misses.begin(), misses.end(), [](const NearMiss& x) { return x.n_below == 184; });
    ASSERT_NE(it, misses.end());
    EXPECT_EQ(it->n_above, 185);
    EXPECT_EQ(it->d_below, ExactInt("-104487720751923200"));
    EXPECT_EQ(it->d_above, ExactInt("193615494292225"));
    EXPECT_NEAR(it->root, 184.998, 1e-3);
    EXPECT_EQ(index_nullity(192, false).g, 0);
}

TEST(TorusBlock, MatchesOperatorOracle)
{
    for (long k = 1; k <= 6; ++k)
        for (long m = 0; m <= 6; ++m)
            for (long n = 0; n <= 6; ++n) EXPECT_EQ(block_matrix(k, m, n), oracle_block(k, m, n)) << k << m << n;
}

TEST(TorusBlock, PrintedShapes)
{
    EXPECT_EQ(block_matrix(3, 0, 0), ExactMatrix::diagonal({QuadExt(0), QuadExt(-81)}));
    const ExactMatrix b = block_matrix(2, 3, 0);
    ASSERT_EQ(b.order(), 4u);
    EXPECT_EQ(b.at(0, 0), QuadExt(9 * (9 + 12)));
    EXPECT_EQ(b.at(0, 3), QuadExt(0, -2 * 2 * 27));
    EXPECT_EQ(b.at(1, 2), QuadExt(0, 2 * 2 * 27));
    EXPECT_EQ(b.at(2, 2), QuadExt(81 + 2 * 4 * 9 - 16));
}

TEST(TorusBlock, TraceDeterminantAndCharpoly)
{
    for (long k = 1; k <= 4; ++k) {
        for (long m = 1; m <= 4; ++m) {
            for (long n = 1; n <= 4; ++n) {
                const auto c = torus_block_coefficients(k, m, n);
                const ExactMatrix b = block_matrix(k, m, n);
                EXPECT_EQ(b.trace(), QuadExt(ExactInt(4 * (c.a + c.b))));
                const ExactInt d = c.a * c.b - c.c_squared;
                EXPECT_EQ(determinant(b), QuadExt(ExactInt(d * d * d * d)));
                // det(xI − M) = (x² − (A+B)x + AB − C²)⁴
                const IntPolynomial q({d, ExactInt(-(c.a + c.b)), ExactInt(1)});
                EXPECT_EQ(charpoly_exact(b), q.pow(4));
            }
        }
    }
}

// Criterion-3 style cross-check at a reduced range; the acceptance suite runs k,m,n ≤ 10.
TEST(TorusBlock, NumericEigenvaluesMatchClosedForms)
{
    for (long k = 1; k <= 5; ++k) {
        for (long m = 0; m <= 5; ++m) {
            for (long n = 0; n <= 5; ++n) {
                const auto ev = block_matrix(k, m, n).numeric_eigenvalues();
                std::vector<double> want;
                if (m == 0 && n == 0) {
                    want = {surd_value(eigenvalue({k, 0, 0}, Branch::mu1)), 0.0};
                } else {
                    const TorusLabel l{k, m, n};
                    const int mult = branch_multiplicity(l, Branch::plus);
                    for (int i = 0; i < mult; ++i) want.push_back(surd_value(eigenvalue(l, Branch::minus)));
                    for (int i = 0; i < mult; ++i) want.push_back(surd_value(eigenvalue(l, Branch::plus)));
                }
                std::sort(want.begin(), want.end());
                ASSERT_EQ(ev.size(), want.size());
                for (std::size_t i = 0; i < ev.size(); ++i) {
                    EXPECT_NEAR(ev[i], want[i], 1e-9 * std::max(1.0, std::fabs(want[i])));
                }
            }
        }
    }
}

TEST(TorusEigenvector, Coefficients)
{
    EXPECT_EQ(negative_eigenvector_coefficient(2, 1, 0), Surd(-5, 33, 4, 1));
    EXPECT_EQ(negative_eigenvector_coefficient(2, 1, 1), Surd(-3, 17, 4, 1));
    EXPECT_EQ(negative_eigenvector_coefficient(2, 2, 1), Surd(-9, 881, 80, 1));
    EXPECT_EQ(negative_eigenvector_coefficient(2, 1, 0).to_string(), "(-5 + √33)/4");
    // (1231 + 41√881)/(80(59 + 2√881)) evaluated in double precision
    const double printed = (1231 + 41 * std::sqrt(881.0)) / (80 * (59 + 2 * std::sqrt(881.0)));
    EXPECT_NEAR(negative_eigenvector_coefficient(2, 2, 1).to_double(), printed, 1e-14);
    EXPECT_THROW(negative_eigenvector_coefficient(2, 1, 2), NotNegative);
    EXPECT_THROW(negative_eigenvector_coefficient(2, 2, 0), NotNegative);
}

TEST(TorusEigenvector, SolvesBlockEquation)
{
    // (A − λ⁻)·c = 4s from the first row of the reduced 2×2 system
    for (long k = 2; k <= 6; ++k) {
        const IndexReport r = index_nullity(k);
        for (const auto& [m, n] : r.negative_pairs) {
            const auto c = torus_block_coefficients(k, m, n);
            const double lm = eigenvalue({k, m, n}, Branch::minus).to_double();
            const double coeff = negative_eigenvector_coefficient(k, m, n).to_double();
            const double s = static_cast<double>(m * m + n * n);
            EXPECT_NEAR((c.a.get_d() - lm) * coeff, 4 * s, 1e-8 * 4 * s);
        }
    }
}

TEST(TorusSpectrum, MergedTies)
{
    const auto merged = merged_spectrum(spectrum_entries(2, 2, 2));
    for (std::size_t i = 1; i < merged.size(); ++i) EXPECT_LT(merged[i - 1].value, merged[i].value);
    const auto zero = std::find_if(merged.begin(), merged.end(), [](const SpectralValue& v) { return v.value.sign() == 0; });
    ASSERT_NE(zero, merged.end());
    EXPECT_EQ(zero->multiplicity, 5);
    long total = 0;
    for (const auto& v : merged) total += v.multiplicity;
    // 2 + 2·2·2 branches·mult 2 on axes + 4 interior labels · 2 branches · 4
    EXPECT_EQ(total, 2 + 4 * 2 * 2 + 4 * 2 * 4);
}
