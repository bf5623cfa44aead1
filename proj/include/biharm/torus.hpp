#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "biharm/exact_int.hpp"
#include "biharm/exact_matrix.hpp"
#include "biharm/surd.hpp"

namespace biharm {

// Fourier label of an eigenspace of I₂ at φ_k: 𝕋² → S². The Laplacian
// eigenvalue is s = m² + n².
struct TorusLabel {
    long k{1};
    long m{0};
    long n{0};

    friend bool operator==(const TorusLabel&, const TorusLabel&) = default;
};

enum class Branch { mu0, mu1, plus, minus };

std::string to_string(Branch b);

struct SpectrumEntry {
    TorusLabel label;
    Branch branch{Branch::plus};
    Surd eigenvalue;
    int multiplicity{1};
};

// One distinct eigenvalue with its spectral multiplicity (sum over the
// branches that share the value).
struct SpectralValue {
    Surd value;
    long multiplicity{0};
    std::vector<SpectrumEntry> branches;
};

using LatticePair = std::pair<long, long>;

struct IndexReport {
    long k{1};
    std::int64_t index{0};
    std::int64_t nullity{0};
    std::int64_t f{0};
    std::int64_t g{0};
    // f restricted to 1 ≤ m, n ≤ k; diagnostic only.
    std::int64_t f_box{0};
    std::vector<LatticePair> negative_pairs;
    std::vector<LatticePair> zero_pairs;
    // FNV-1a over the negative pairs in (m, n) lexicographic order.
    std::uint64_t negative_pairs_digest{0};
};

// Block entries A, B and C² of the (m, n) eigenspace. C itself is
// 2√2·k·m·s, so only its square is an integer.
struct TorusBlockCoefficients {
    ExactInt a;
    ExactInt b;
    ExactInt c_squared;
};

TorusBlockCoefficients torus_block_coefficients(long k, long m, long n);

// λ± = (p ± √S)/2 with p = A + B and S = (A − B)² + 4C².
Surd eigenvalue(const TorusLabel& label, Branch branch);
int branch_multiplicity(const TorusLabel& label, Branch branch);

// Exact sign of λ⁻ for m, n ≥ 1 from D = AB − C² (and p when p ≤ 0).
int sign_lambda_minus(long k, long m, long n);
// Same test carried out in GMP regardless of size.
int sign_lambda_minus_exact(long k, long m, long n);
ExactInt lambda_minus_discriminant(long k, long m, long n);

// Sign of λ⁻ₘ,₀; the D-test is cross-checked against sign(m − k).
int sign_lambda_minus_axis(long k, long m);

// D > 0 whenever m² + n² ≥ 9k².
long long enumeration_bound(long k);

// Largest k for which the machine-integer scan path is width-safe.
constexpr long kMachineScanLimit = 16384;

IndexReport index_nullity(long k, bool collect_pairs = true);

struct ScanRecord {
    long k{0};
    std::int64_t f{0};
    std::int64_t g{0};
    std::int64_t index{0};
    std::int64_t nullity{0};
    std::uint64_t negative_pairs_digest{0};

    friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

ScanRecord scan_record(long k);
// Records for k = k_min..k_max, ordered by k.
std::vector<ScanRecord> conjecture_scan(long k_max, unsigned workers, long k_min = 1);

ExactMatrix block_matrix(long k, long m, long n);

// Coefficient c with c·dφ_k(∇f) + f·V_η spanning the λ⁻ eigenspace.
Surd negative_eigenvector_coefficient(long k, long m, long n);

// Every label with 0 ≤ m ≤ m_max, 0 ≤ n ≤ n_max, including μ₀, μ₁.
std::vector<SpectrumEntry> spectrum_entries(long k, long m_max, long n_max);
// Sorted ascending, exact ties merged.
std::vector<SpectralValue> merged_spectrum(std::vector<SpectrumEntry> entries);

// Sign changes of D(k, m, ·) along n for fixed m.
struct NearMiss {
    long k{0};
    long m{0};
    long n_below{0};
    ExactInt d_below;
    long n_above{0};
    ExactInt d_above;
    // Real root of D(k, m, x) = 0 between n_below and n_above.
    double root{0};
};

std::vector<NearMiss> near_miss_probe(long k, long m);

}  // namespace biharm
