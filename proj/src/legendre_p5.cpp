#include "biharm/legendre.hpp"

namespace biharm {

namespace {

// Terms c·mᵖ·nᵠ of the printed coefficients a₀ … a₅, in printed order.
constexpr MonomialTerm kA0[] = {
    {1, 20, 0}, {20, 18, 2}, {-12, 18, 0}, {180, 16, 4},
    {-232, 16, 2}, {44, 16, 0}, {960, 14, 6}, {-1984, 14, 4},
    {656, 14, 2}, {-112, 14, 0}, {3360, 12, 8}, {-9856, 12, 6},
    {4832, 12, 4}, {576, 12, 2}, {304, 12, 0}, {8064, 10, 10},
    {-31360, 10, 8}, {22592, 10, 6}, {11456, 10, 4}, {-5056, 10, 2},
    {-320, 10, 0}, {13440, 8, 12}, {-66304, 8, 10}, {70400, 8, 8},
    {44544, 8, 6}, {-41152, 8, 4}, {-1920, 8, 2}, {576, 8, 0},
    {15360, 6, 14}, {-93184, 6, 12}, {144128, 6, 10}, {52992, 6, 8},
    {-116224, 6, 6}, {-21504, 6, 4}, {3328, 6, 2}, {-256, 6, 0},
    {11520, 4, 16}, {-83968, 4, 14}, {184832, 4, 12}, {-48128, 4, 10},
    {-121600, 4, 8}, {-22528, 4, 6}, {11264, 4, 4}, {1024, 4, 2},
    {5120, 2, 18}, {-44032, 2, 16}, {134144, 2, 14}, {-158720, 2, 12},
    {54272, 2, 10}, {-31744, 2, 8}, {44032, 2, 6}, {-3072, 2, 4},
    {1024, 0, 20}, {-10240, 0, 18}, {41984, 0, 16}, {-98304, 0, 14},
    {142336, 0, 12}, {-124928, 0, 10}, {60416, 0, 8}, {-12288, 0, 6},
};

constexpr MonomialTerm kA1[] = {
    {-5, 16, 0}, {-80, 14, 2}, {16, 14, 0}, {-560, 12, 4},
    {256, 12, 2}, {64, 12, 0}, {-2240, 10, 6}, {1728, 10, 4},
    {-560, 10, 2}, {48, 10, 0}, {-5600, 8, 8}, {6400, 8, 6},
    {-7072, 8, 4}, {1536, 8, 2}, {272, 8, 0}, {-8960, 6, 10},
    {14080, 6, 8}, {-23936, 6, 6}, {6272, 6, 4}, {6080, 6, 2},
    {-64, 6, 0}, {-8960, 4, 12}, {18432, 4, 10}, {-34048, 4, 8},
    {4608, 4, 6}, {12800, 4, 4}, {-256, 4, 0}, {-5120, 2, 14},
    {13312, 2, 12}, {-18176, 2, 10}, {-11520, 2, 8}, {45312, 2, 6},
    {-5888, 2, 4}, {512, 2, 2}, {-1280, 0, 16}, {4096, 0, 14},
    {-512, 0, 12}, {-14336, 0, 10}, {18176, 0, 8}, {-4096, 0, 6},
    {-2048, 0, 4},
};

constexpr MonomialTerm kA2[] = {
    {10, 12, 0}, {120, 10, 2}, {24, 10, 0}, {600, 8, 4},
    {240, 8, 2}, {-8, 8, 0}, {1600, 6, 6}, {960, 6, 4},
    {1200, 6, 2}, {-16, 6, 0}, {2400, 4, 8}, {1920, 4, 6},
    {5024, 4, 4}, {-320, 4, 2}, {-320, 4, 0}, {1920, 2, 10},
    {1920, 2, 8}, {5440, 2, 6}, {-2368, 2, 4}, {-832, 2, 2},
    {64, 2, 0}, {640, 0, 12}, {768, 0, 10}, {512, 0, 8},
    {512, 0, 6}, {-2688, 0, 4}, {256, 0, 2},
};

constexpr MonomialTerm kA3[] = {
    {-10, 8, 0}, {-80, 6, 2}, {-48, 6, 0}, {-240, 4, 4},
    {-320, 4, 2}, {-96, 4, 0}, {-320, 2, 6}, {-704, 2, 4},
    {-272, 2, 2}, {80, 2, 0}, {-160, 0, 8}, {-512, 0, 6},
    {-736, 0, 4}, {256, 0, 2},
};

constexpr MonomialTerm kA4[] = {
    {5, 4, 0}, {20, 2, 2}, {20, 2, 0}, {20, 0, 4},
    {56, 0, 2}, {-4, 0, 0},
};

constexpr MonomialTerm kA5[] = {
    {-1, 0, 0},
};

}  // namespace

std::span<const MonomialTerm> printed_p5_terms(int i)
{
    switch (i) {
    case 0: return kA0;
    case 1: return kA1;
    case 2: return kA2;
    case 3: return kA3;
    case 4: return kA4;
    case 5: return kA5;
    default: throw InvalidLabel("P5 coefficient index must be 0..5");
    }
}

}  // namespace biharm
