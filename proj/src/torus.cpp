#include "biharm/torus.hpp"

#include <algorithm>
#include <cmath>

#include "biharm/errors.hpp"
#include "biharm/parallel.hpp"

namespace biharm {

std::string to_string(Branch b)
{
    switch (b) {
    case Branch::mu0: return "mu0";
    case Branch::mu1: return "mu1";
    case Branch::plus: return "lambda+";
    case Branch::minus: return "lambda-";
    }
    return "?";
}

TorusBlockCoefficients torus_block_coefficients(long k, long m, long n)
{
    const ExactInt K(k), M(m), N(n);
    const ExactInt k2 = K * K;
    const ExactInt m2 = M * M;
    const ExactInt s = m2 + N * N;
    TorusBlockCoefficients c;
    c.a = (3 * m2 + N * N) * k2 + s * s;
    c.b = -k2 * k2 + 2 * m2 * k2 + s * s;
    c.c_squared = 8 * k2 * m2 * s * s;
    return c;
}

namespace {

void require_k(long k)
{
    if (k < 1) throw InvalidLabel("k must be a positive integer");
}

void require_label(const TorusLabel& l)
{
    require_k(l.k);
    if (l.m < 0 || l.n < 0) throw InvalidLabel("m and n must be nonnegative");
}

int sign_of(const ExactInt& v) { return sgn(v); }

int fold_sign(int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Sign of λ⁻ from p = A + B and D = AB − C²: λ⁻ = (p − √(p² − 4D))/2.
int lambda_minus_sign(const TorusBlockCoefficients& c)
{
    if (sgn(ExactInt(c.a + c.b)) <= 0) return -1;
    return sign_of(ExactInt(c.a * c.b - c.c_squared));
}

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

inline void digest_pair(std::uint64_t& h, std::int64_t m, std::int64_t n)
{
    h ^= static_cast<std::uint64_t>(m);
    h *= kFnvPrime;
    h ^= static_cast<std::uint64_t>(n);
    h *= kFnvPrime;
}

// Calls visit(m, n, sign) for every interior pair with λ⁻ₘ,ₙ ≤ 0, in
// lexicographic order.
template <class Visit>
void for_each_nonpositive_pair(long k, Visit&& visit)
{
    const long long bound = enumeration_bound(k);
    if (k <= kMachineScanLimit) {
        // |A|, |B| < 108k⁴ < 2⁶³ and |AB|, C² < 2¹²⁷ for k ≤ 16384.
        const std::int64_t k2 = static_cast<std::int64_t>(k) * k;
        const std::int64_t k4 = k2 * k2;
        for (std::int64_t m = 1; m * m < bound; ++m) {
            const std::int64_t m2 = m * m;
            const std::int64_t a_base = 3 * m2 * k2;
            const std::int64_t b_base = 2 * m2 * k2 - k4;
            const std::int64_t c_base = 8 * k2 * m2;
            for (std::int64_t n = 1; m2 + n * n < bound; ++n) {
                const std::int64_t n2 = n * n;
                const std::int64_t s = m2 + n2;
                const std::int64_t s2 = s * s;
                const std::int64_t a = a_base + n2 * k2 + s2;
                const std::int64_t b = b_base + s2;
                int sg;
                if (static_cast<int128>(a) + b <= 0) {
                    sg = -1;
                } else {
                    sg = fold_sign(static_cast<int128>(a) * b - static_cast<int128>(c_base) * s2);
                }
                if (sg <= 0) visit(m, n, sg);
            }
        }
        return;
    }
    for (long m = 1; static_cast<long long>(m) * m < bound; ++m) {
        for (long n = 1; static_cast<long long>(m) * m + static_cast<long long>(n) * n < bound; ++n) {
            const int sg = lambda_minus_sign(torus_block_coefficients(k, m, n));
            if (sg <= 0) visit(m, n, sg);
        }
    }
}

}  // namespace

Surd eigenvalue(const TorusLabel& label, Branch branch)
{
    require_label(label);
    const bool origin = label.m == 0 && label.n == 0;
    if (branch == Branch::mu0 || branch == Branch::mu1) {
        if (!origin) throw InvalidLabel("mu branches exist only for (m,n) = (0,0)");
        if (branch == Branch::mu0) return Surd::rational(0);
        const ExactInt k2 = ExactInt(label.k) * label.k;
        return Surd::rational(-k2 * k2);
    }
    if (origin) throw InvalidLabel("lambda branches need (m,n) != (0,0)");
    const auto c = torus_block_coefficients(label.k, label.m, label.n);
    const ExactInt p = c.a + c.b;
    const ExactInt diff = c.a - c.b;
    const ExactInt radicand = diff * diff + 4 * c.c_squared;
    return Surd(p, radicand, 2, branch == Branch::plus ? 1 : -1).reduced();
}

int branch_multiplicity(const TorusLabel& label, Branch branch)
{
    if (branch == Branch::mu0 || branch == Branch::mu1) return 1;
    if (label.m == 0 || label.n == 0) return 2;
    return 4;
}

ExactInt lambda_minus_discriminant(long k, long m, long n)
{
    const auto c = torus_block_coefficients(k, m, n);
    return c.a * c.b - c.c_squared;
}

int sign_lambda_minus_exact(long k, long m, long n)
{
    require_k(k);
    return lambda_minus_sign(torus_block_coefficients(k, m, n));
}

int sign_lambda_minus(long k, long m, long n)
{
    require_k(k);
    if (m < 1 || n < 1) throw InvalidLabel("sign_lambda_minus needs m, n >= 1");
    const long long bound = enumeration_bound(k);
    if (k > kMachineScanLimit || static_cast<long long>(m) * m + static_cast<long long>(n) * n >= bound) {
        return sign_lambda_minus_exact(k, m, n);
    }
    const std::int64_t k2 = static_cast<std::int64_t>(k) * k;
    const std::int64_t m2 = static_cast<std::int64_t>(m) * m;
    const std::int64_t n2 = static_cast<std::int64_t>(n) * n;
    const std::int64_t s = m2 + n2;
    const std::int64_t a = (3 * m2 + n2) * k2 + s * s;
    const std::int64_t b = 2 * m2 * k2 - k2 * k2 + s * s;
    if (static_cast<int128>(a) + b <= 0) return -1;
    return fold_sign(static_cast<int128>(a) * b - static_cast<int128>(8 * k2 * m2) * (s * s));
}

int sign_lambda_minus_axis(long k, long m)
{
    require_k(k);
    if (m < 1) throw InvalidLabel("sign_lambda_minus_axis needs m >= 1");
    const int by_test = lambda_minus_sign(torus_block_coefficients(k, m, 0));
    const int by_lemma = m < k ? -1 : (m == k ? 0 : 1);
    if (by_test != by_lemma) {
        throw Error("axis sign test disagrees with the trichotomy at k=" + std::to_string(k) +
                    ", m=" + std::to_string(m));
    }
    return by_test;
}

long long enumeration_bound(long k)
{
    require_k(k);
    return 9LL * k * k;
}

IndexReport index_nullity(long k, bool collect_pairs)
{
    require_k(k);
    IndexReport r;
    r.k = k;
    std::uint64_t h = kFnvOffset;
    for_each_nonpositive_pair(k, [&](std::int64_t m, std::int64_t n, int sg) {
        if (sg < 0) {
            ++r.f;
            if (m <= k && n <= k) ++r.f_box;
            digest_pair(h, m, n);
            if (collect_pairs) r.negative_pairs.emplace_back(m, n);
        } else {
            ++r.g;
            if (collect_pairs) r.zero_pairs.emplace_back(m, n);
        }
    });
    r.negative_pairs_digest = h;

    // Axis blocks: λ⁻ₘ,₀ by the D-test, λ⁻₀,ₙ = n⁴ − k⁴, both with multiplicity 2.
    const long long bound = enumeration_bound(k);
    std::int64_t axis_negative = 0;
    std::int64_t axis_zero = 0;
    for (long m = 1; static_cast<long long>(m) * m < bound; ++m) {
        const int sm = sign_lambda_minus_axis(k, m);
        const int sn = m < k ? -1 : (m == k ? 0 : 1);  // n⁴ − k⁴ with n = m
        axis_negative += (sm < 0) + (sn < 0);
        axis_zero += (sm == 0) + (sn == 0);
    }
    r.index = 1 + 2 * axis_negative + 4 * r.f;
    r.nullity = 1 + 2 * axis_zero + 4 * r.g;
    if (r.index != 1 + 4 * (static_cast<std::int64_t>(k) - 1) + 4 * r.f || r.nullity != 5 + 4 * r.g) {
        throw Error("axis contribution mismatch at k=" + std::to_string(k));
    }
    return r;
}

ScanRecord scan_record(long k)
{
    const IndexReport r = index_nullity(k, false);
    return ScanRecord{k, r.f, r.g, r.index, r.nullity, r.negative_pairs_digest};
}

std::vector<ScanRecord> conjecture_scan(long k_max, unsigned workers, long k_min)
{
    require_k(k_min);
    if (k_max < k_min) return {};
    const auto count = static_cast<std::size_t>(k_max - k_min + 1);
    // Cost grows like k³, so hand out the largest k first.
    std::vector<std::size_t> order(count);
    for (std::size_t i = 0; i < count; ++i) order[i] = count - 1 - i;
    return parallel_ordered_map<ScanRecord>(
        count, workers, [k_min](std::size_t i) { return scan_record(k_min + static_cast<long>(i)); }, order);
}

ExactMatrix block_matrix(long k, long m, long n)
{
    require_label(TorusLabel{k, m, n});
    const ExactInt K(k), M(m), N(n);
    const ExactInt k2 = K * K;
    if (m == 0 && n == 0) return ExactMatrix::diagonal({QuadExt(0), QuadExt(ExactInt(-k2 * k2))});
    if (m == 0) {
        const ExactInt n2 = N * N;
        const QuadExt plus(ExactInt(n2 * (n2 + k2)));
        const QuadExt minus(ExactInt(n2 * n2 - k2 * k2));
        return ExactMatrix::diagonal({plus, plus, minus, minus});
    }
    const auto c = torus_block_coefficients(k, m, n);
    // C = 2√2·k·m·s
    const QuadExt cc(0, ExactInt(2 * K * M * (M * M + N * N)));
    const QuadExt a(c.a), b(c.b);
    if (n == 0) {
        ExactMatrix out = ExactMatrix::diagonal({a, a, b, b});
        out.at(0, 3) = out.at(3, 0) = -cc;
        out.at(1, 2) = out.at(2, 1) = cc;
        require_symmetric(out, "torus axis block");
        return out;
    }
    ExactMatrix out = ExactMatrix::diagonal({a, a, a, a, b, b, b, b});
    out.at(0, 6) = out.at(6, 0) = -cc;
    out.at(1, 7) = out.at(7, 1) = -cc;
    out.at(2, 4) = out.at(4, 2) = cc;
    out.at(3, 5) = out.at(5, 3) = cc;
    require_symmetric(out, "torus interior block");
    return out;
}

Surd negative_eigenvector_coefficient(long k, long m, long n)
{
    require_label(TorusLabel{k, m, n});
    if (m == 0 && n == 0) throw InvalidLabel("no lambda branch at (0,0)");
    const Surd lm = eigenvalue(TorusLabel{k, m, n}, Branch::minus);
    if (lm.sign() >= 0) {
        throw NotNegative("lambda- is not negative at k=" + std::to_string(k) + ", (m,n)=(" + std::to_string(m) +
                          "," + std::to_string(n) + ")");
    }
    if (m == 0) return Surd::rational(0);
    // c = 4s/(A − λ⁻) = (√S − (A − B))/(4k²m²s)
    const auto c = torus_block_coefficients(k, m, n);
    const ExactInt diff = c.a - c.b;
    const ExactInt radicand = diff * diff + 4 * c.c_squared;
    const ExactInt K(k), M(m), N(n);
    const ExactInt den = 4 * K * K * M * M * (M * M + N * N);
    return Surd(ExactInt(-diff), radicand, den, 1).reduced();
}

std::vector<SpectrumEntry> spectrum_entries(long k, long m_max, long n_max)
{
    require_k(k);
    std::vector<SpectrumEntry> out;
    for (long m = 0; m <= m_max; ++m) {
        for (long n = 0; n <= n_max; ++n) {
            const TorusLabel l{k, m, n};
            if (m == 0 && n == 0) {
                for (Branch b : {Branch::mu0, Branch::mu1}) out.push_back({l, b, eigenvalue(l, b), 1});
                continue;
            }
            for (Branch b : {Branch::minus, Branch::plus}) {
                out.push_back({l, b, eigenvalue(l, b), branch_multiplicity(l, b)});
            }
        }
    }
    return out;
}

std::vector<SpectralValue> merged_spectrum(std::vector<SpectrumEntry> entries)
{
    std::stable_sort(entries.begin(), entries.end(),
                     [](const SpectrumEntry& x, const SpectrumEntry& y) { return x.eigenvalue < y.eigenvalue; });
    std::vector<SpectralValue> out;
    for (auto& e : entries) {
        if (out.empty() || !(out.back().value == e.eigenvalue)) {
            out.push_back(SpectralValue{e.eigenvalue, 0, {}});
        }
        out.back().multiplicity += e.multiplicity;
        out.back().branches.push_back(std::move(e));
    }
    return out;
}

std::vector<NearMiss> near_miss_probe(long k, long m)
{
    require_k(k);
    if (m < 1) throw InvalidLabel("near_miss_probe needs m >= 1");
    std::vector<NearMiss> out;
    const long long bound = enumeration_bound(k);
    auto d_at = [&](long n) { return lambda_minus_discriminant(k, m, n); };
    auto d_real = [&](long double x) {
        const long double kk = static_cast<long double>(k) * k;
        const long double m2 = static_cast<long double>(m) * m;
        const long double n2 = x * x;
        const long double s = m2 + n2;
        const long double a = (3 * m2 + n2) * kk + s * s;
        const long double b = -kk * kk + 2 * m2 * kk + s * s;
        return a * b - 8 * kk * m2 * s * s;
    };
    long last_n = 1;
    ExactInt last = d_at(1);
    for (long n = 2; static_cast<long long>(m) * m + static_cast<long long>(n) * n < bound + 1; ++n) {
        ExactInt cur = d_at(n);
        if (sgn(cur) == 0) continue;
        if (sgn(last) != 0 && sgn(cur) != sgn(last)) {
            long double lo = static_cast<long double>(last_n);
            long double hi = static_cast<long double>(n);
            const bool rising = sgn(last) < 0;
            for (int it = 0; it < 200; ++it) {
                const long double mid = (lo + hi) / 2;
                if ((d_real(mid) < 0) == rising) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            out.push_back(NearMiss{k, m, last_n, last, n, cur, static_cast<double>((lo + hi) / 2)});
        }
        last_n = n;
        last = std::move(cur);
    }
    return out;
}

}  // namespace biharm
