#include <gtest/gtest.h>

#include "biharm/circle.hpp"
#include "biharm/errors.hpp"
#include "biharm/torus.hpp"

using namespace biharm;

TEST(CircleBlock, Shapes)
{
    EXPECT_EQ(circle_block(3, 0), ExactMatrix::diagonal({QuadExt(0), QuadExt(-81)}));
    const ExactMatrix b = circle_block(2, 3);
    EXPECT_EQ(b.at(0, 3), QuadExt(0, -2 * 2 * 27));
    EXPECT_EQ(b.at(2, 1), QuadExt(0, 2 * 2 * 27));
    EXPECT_TRUE(b.is_symmetric());
}

TEST(CircleBlock, EqualsTorusAxisBlock)
{
    for (long k = 1; k <= 50; ++k)
        for (long m = 0; m <= 50; ++m) ASSERT_EQ(circle_block(k, m), block_matrix(k, m, 0)) << k << " " << m;
}

TEST(CircleEigenvalue, MatchesTorusAxis)
{
    for (long k = 1; k <= 50; ++k) {
        for (long m = 1; m <= 50; ++m) {
            for (Branch b : {Branch::plus, Branch::minus}) {
                ASSERT_EQ(circle_eigenvalue(k, m, b), eigenvalue({k, m, 0}, b)) << k << " " << m;
            }
        }
    }
    EXPECT_THROW(circle_eigenvalue(1, 0, Branch::plus), InvalidLabel);
    EXPECT_EQ(circle_eigenvalue(2, 0, Branch::mu1), Surd::rational(-16));
}

TEST(CircleIndex, Examples)
{
    const auto r1 = circle_index_nullity(1);
    EXPECT_EQ(r1.index, 1);
    EXPECT_EQ(r1.nullity, 3);
    const auto r3 = circle_index_nullity(3);
    EXPECT_EQ(r3.index, 5);
    EXPECT_EQ(r3.nullity, 3);
    const auto r50 = circle_index_nullity(50);
    EXPECT_EQ(r50.index, 99);
    EXPECT_EQ(r50.nullity, 3);
}

TEST(CircleIndex, FormulaAndMatrixAgree)
{
    for (long k = 1; k <= 20; ++k) {
        const auto f = circle_index_nullity(k);
        const auto m = circle_index_nullity_by_matrix(k);
        EXPECT_EQ(f.index, 1 + 2 * (k - 1));
        EXPECT_EQ(f.nullity, 3);
        EXPECT_EQ(m.index, f.index);
        EXPECT_EQ(m.nullity, f.nullity);
    }
}
