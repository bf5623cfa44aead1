#pragma once

#include <cstddef>
#include <vector>

#include "biharm/polynomial.hpp"
#include "biharm/quad_ext.hpp"

namespace biharm {

// Dense square matrix over ℤ[√2]. Every matrix built by this library is an
// I₂ restriction and therefore symmetric; use make_symmetric() to assert that.
class ExactMatrix {
public:
    ExactMatrix() = default;
    explicit ExactMatrix(std::size_t order) : order_(order), entries_(order * order, QuadExt(0)) {}

    static ExactMatrix diagonal(const std::vector<QuadExt>& diag);

    std::size_t order() const { return order_; }

    QuadExt& at(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }
    const QuadExt& at(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }

    bool is_symmetric() const;
    // Returns the first (row, col) where M ≠ Mᵀ, or {order, order} when symmetric.
    std::pair<std::size_t, std::size_t> first_asymmetry() const;

    QuadExt trace() const;
    // Double-precision eigenvalues, ascending (symmetric matrices only).
    std::vector<double> numeric_eigenvalues() const;

    friend bool operator==(const ExactMatrix& x, const ExactMatrix& y)
    {
        return x.order_ == y.order_ && x.entries_ == y.entries_;
    }

private:
    std::size_t order_{0};
    std::vector<QuadExt> entries_;
};

// Throws AsymmetricBlock (with the offending entry) unless m is symmetric.
void require_symmetric(const ExactMatrix& m, const char* what);

// det(xI − M) over ℤ[√2][x] by fraction-free Bareiss elimination.
QuadPolynomial charpoly_over_quad(const ExactMatrix& m);

// Monic det(xI − M) with integer coefficients. Throws IrrationalCoefficient
// if any coefficient keeps a √2 part.
IntPolynomial charpoly_exact(const ExactMatrix& m);

// det(M) by fraction-free Bareiss elimination over ℤ[√2].
QuadExt determinant(const ExactMatrix& m);

}  // namespace biharm
