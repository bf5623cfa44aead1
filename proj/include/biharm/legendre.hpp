#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "biharm/exact_matrix.hpp"
#include "biharm/polynomial.hpp"

namespace biharm {

// Parallelizing frame along the Legendre torus in S⁵.
enum class Frame { U1 = 0, U2 = 1, phiU1 = 2, phiU2 = 3, xi = 4 };
constexpr int kFrameCount = 5;

std::string to_string(Frame f);

// Differential monomials acting on f: f, X₁f, X₂f, X₁X₂f, X₂X₂f.
enum class DiffOp { id, x1, x2, x1x2, x2x2 };

// One term coeff(λ)·op(f)·target of I₂(f·source), coeff = c0 + c1·λ + c2·λ².
struct OperatorRule {
    Frame target;
    DiffOp op;
    std::array<long, 3> coeff;
};

struct OperatorTable {
    std::array<std::vector<OperatorRule>, kFrameCount> rules;

    // The five I₂ images for f ∈ W_λ on 𝕋² = S¹ × S¹(1/√2).
    static OperatorTable legendre();
};

// cos/sin(mγ)·cos/sin(√2 nϑ); parity 0 is cos, 1 is sin.
struct TrigBasisFunction {
    long m{0};
    long n{0};
    int gamma_parity{0};
    int theta_parity{0};

    friend bool operator==(const TrigBasisFunction&, const TrigBasisFunction&) = default;
};

// Laplacian eigenvalue m² + 2n².
inline long laplace_eigenvalue(const TrigBasisFunction& g) { return g.m * g.m + 2 * g.n * g.n; }

// op(g) = coefficient·g' for a single trig function g'.
struct DiffImage {
    QuadExt coefficient;
    TrigBasisFunction function;
};

DiffImage apply(DiffOp op, const TrigBasisFunction& g);

struct FrameSection {
    TrigBasisFunction function;
    Frame frame;

    friend bool operator==(const FrameSection&, const FrameSection&) = default;
};

// Frame-major basis of S^{m,n}: U₁ rows by g₁…g₄, then U₂, φ(U₁), φ(U₂), ξ.
std::vector<FrameSection> legendre_basis(long m, long n);

// Coefficients of I₂(section) on basis sections; throws if the image leaves the block.
std::vector<std::pair<std::size_t, QuadExt>> apply_operator(const OperatorTable& table,
                                                            const std::vector<FrameSection>& basis,
                                                            const FrameSection& section);

// 5×5 at (0,0), 10×10 on the axes, 20×20 for m, n ≥ 1.
ExactMatrix build_legendre_block(long m, long n);

// The printed 20×20 matrix, transcribed verbatim (including its known erratum).
ExactMatrix printed_legendre_matrix(long m, long n);

struct MatrixEntry {
    std::size_t row;  // 1-based
    std::size_t col;  // 1-based
    QuadExt built;
    QuadExt printed;
};

// Entries where the built block differs from the printed matrix.
std::vector<MatrixEntry> compare_with_printed(long m, long n);

// Entries of the printed matrix that are known transcription slips: (5,10)
// reads −4√2·n where symmetry and the operator give −4√2·n·λ.
std::vector<std::pair<std::size_t, std::size_t>> known_printed_errata();

// c·mᵖ·nᵠ
struct MonomialTerm {
    long coefficient;
    int m_exp;
    int n_exp;
};

std::span<const MonomialTerm> printed_p5_terms(int i);
ExactInt printed_p5_coefficient(int i, long m, long n);
// P₅(x) = a₅x⁵ + … + a₀ from the printed coefficient formulas (a₅ = −1).
IntPolynomial printed_p5(long m, long n);

struct P5Report {
    long m{0};
    long n{0};
    bool symmetric{false};
    bool matches{false};
    IntPolynomial charpoly;
    IntPolynomial expected;  // (−P₅)⁴
    // First differing coefficient when the identity fails.
    std::optional<std::size_t> mismatch_degree;
};

P5Report verify_p5_factorization(long m, long n);

// [2,1] < [m,n] or [1,2] ≤ [m,n], with the componentwise order on ℕ².
bool descartes_hypothesis(long m, long n);

struct DescartesEntry {
    long m{0};
    long n{0};
    bool hypothesis{false};
    // a₅ < 0, a₄ ≥ 0, a₃ ≤ 0, a₂ ≥ 0, a₁ ≤ 0, a₀ > 0
    std::array<bool, 6> conditions{};
    long negative_roots{0};
    long zero_roots{0};
};

struct DescartesReport {
    std::vector<DescartesEntry> entries;
    // Hypothesis holds but a condition fails or Sturm finds a root ≤ 0.
    std::vector<DescartesEntry> violations;
};

DescartesReport descartes_lemma_check(long m_max, long n_max);

struct BlockCount {
    long m{0};
    long n{0};
    long index{0};
    long nullity{0};
};

struct LegendreLedgerItem {
    std::string subspace;
    long index{0};
    long nullity{0};
    std::vector<BlockCount> blocks;
};

struct LegendreReport {
    long index{0};
    long nullity{0};
    // S^{λ₀}, S^{m,0}, S^{0,n}, S^{1,1}, S^{2,1}
    std::vector<LegendreLedgerItem> ledger;
    // Differences from the split 1+6+0+4+0 / 4+2+8+0+4 (totals may still agree).
    std::vector<std::string> ledger_flags;
    // Interior window certified free of nonpositive roots.
    long certified_window{0};
};

// Axis blocks are scanned until `positive_run` consecutive blocks are positive definite.
LegendreReport legendre_index_nullity(int positive_run = 3, long interior_window = 6);

}  // namespace biharm
