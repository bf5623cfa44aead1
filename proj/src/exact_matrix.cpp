#include "biharm/exact_matrix.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <string>

#include "biharm/errors.hpp"

namespace biharm {

ExactMatrix ExactMatrix::diagonal(const std::vector<QuadExt>& diag)
{
    ExactMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m.at(i, i) = diag[i];
    return m;
}

std::pair<std::size_t, std::size_t> ExactMatrix::first_asymmetry() const
{
    for (std::size_t i = 0; i < order_; ++i) {
        for (std::size_t j = i + 1; j < order_; ++j) {
            if (!(at(i, j) == at(j, i))) return {i, j};
        }
    }
    return {order_, order_};
}

bool ExactMatrix::is_symmetric() const { return first_asymmetry().first == order_; }

QuadExt ExactMatrix::trace() const
{
    QuadExt t(0);
    for (std::size_t i = 0; i < order_; ++i) t += at(i, i);
    return t;
}

std::vector<double> ExactMatrix::numeric_eigenvalues() const
{
    const auto n = static_cast<Eigen::Index>(order_);
    Eigen::MatrixXd a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            a(i, j) = at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).to_double();
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    std::vector<double> out(order_);
    for (Eigen::Index i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    std::sort(out.begin(), out.end());
    return out;
}

void require_symmetric(const ExactMatrix& m, const char* what)
{
    const auto [i, j] = m.first_asymmetry();
    if (i == m.order()) return;
    throw AsymmetricBlock(std::string(what) + ": entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                          ") = " + m.at(i, j).to_string() + " but (" + std::to_string(j + 1) + "," +
                          std::to_string(i + 1) + ") = " + m.at(j, i).to_string());
}

QuadPolynomial charpoly_over_quad(const ExactMatrix& m)
{
    const std::size_t n = m.order();
    if (n == 0) return QuadPolynomial::constant(QuadExt(1));
    std::vector<QuadPolynomial> a(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            QuadPolynomial e = QuadPolynomial::constant(-m.at(i, j));
            if (i == j) e += QuadPolynomial::monomial(QuadExt(1), 1);
            a[i * n + j] = std::move(e);
        }
    }
    // Pivots are leading principal minors of xI − M: monic, hence never zero.
    QuadPolynomial prev = QuadPolynomial::constant(QuadExt(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const QuadPolynomial& pivot = a[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const QuadPolynomial& aik = a[i * n + k];
            for (std::size_t j = k + 1; j < n; ++j) {
                QuadPolynomial v = a[i * n + j] * pivot;
                if (!aik.is_zero() && !a[k * n + j].is_zero()) v -= aik * a[k * n + j];
                a[i * n + j] = exact_divide(v, prev);
            }
        }
        prev = pivot;
    }
    return a[n * n - 1];
}

IntPolynomial charpoly_exact(const ExactMatrix& m)
{
    const QuadPolynomial q = charpoly_over_quad(m);
    std::vector<ExactInt> c;
    c.reserve(q.coefficients().size());
    for (std::size_t i = 0; i < q.coefficients().size(); ++i) {
        const QuadExt& v = q.coefficients()[i];
        if (!v.is_rational()) {
            throw IrrationalCoefficient("characteristic polynomial coefficient of x^" + std::to_string(i) + " is " +
                                        v.to_string());
        }
        c.push_back(v.rational_part());
    }
    return IntPolynomial(std::move(c));
}

QuadExt determinant(const ExactMatrix& m)
{
    const std::size_t n = m.order();
    if (n == 0) return QuadExt(1);
    std::vector<QuadExt> a(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m.at(i, j);
    }
    int sign = 1;
    QuadExt prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && a[r * n + k].is_zero()) ++r;
            if (r == n) return QuadExt(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[r * n + j]);
            sign = -sign;
        }
        const QuadExt pivot = a[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i * n + j] = exact_quotient(a[i * n + j] * pivot - a[i * n + k] * a[k * n + j], prev);
            }
        }
        prev = pivot;
    }
    const QuadExt& d = a[n * n - 1];
    return sign > 0 ? d : -d;
}

}  // namespace biharm
