#pragma once

#include <cstdint>

#include "biharm/exact_matrix.hpp"
#include "biharm/surd.hpp"
#include "biharm/torus.hpp"

namespace biharm {

// I₂ restricted to span{cos mγ, sin mγ}·{V_Y, V_η} at φ_k: S¹ → S².
// 2×2 for m = 0, 4×4 otherwise.
ExactMatrix circle_block(long k, long m);

// λ±ₘ = ½(−k⁴ + 2m⁴ + 5k²m² ± √(k⁸ + 2k⁶m² + k⁴m⁴ + 32k²m⁶)), m ≥ 1.
Surd circle_eigenvalue(long k, long m, Branch branch);

struct CircleReport {
    long k{1};
    std::int64_t index{0};
    std::int64_t nullity{0};
};

// Counts from the closed forms and the axis trichotomy.
CircleReport circle_index_nullity(long k);
// Counts from exact root counting of each block's characteristic polynomial.
CircleReport circle_index_nullity_by_matrix(long k);

}  // namespace biharm
