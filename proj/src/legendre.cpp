#include "biharm/legendre.hpp"

#include <sstream>

#include "biharm/errors.hpp"

namespace biharm {

std::string to_string(Frame f)
{
    switch (f) {
    case Frame::U1: return "U1";
    case Frame::U2: return "U2";
    case Frame::phiU1: return "phi(U1)";
    case Frame::phiU2: return "phi(U2)";
    case Frame::xi: return "xi";
    }
    return "?";
}

OperatorTable OperatorTable::legendre()
{
    using F = Frame;
    using D = DiffOp;
    OperatorTable t;
    t.rules[static_cast<int>(F::U1)] = {
        {F::U1, D::id, {0, 0, 1}},    {F::U1, D::x2x2, {-4, 0, 0}}, {F::U2, D::x1x2, {-4, 0, 0}},
        {F::phiU2, D::x2, {4, 4, 0}}, {F::xi, D::id, {0, 2, 0}},    {F::xi, D::x2x2, {-4, 0, 0}},
    };
    t.rules[static_cast<int>(F::U2)] = {
        {F::U1, D::x1x2, {-4, 0, 0}}, {F::U2, D::id, {0, 6, 1}},    {F::phiU1, D::x2, {0, 4, 0}},
        {F::phiU2, D::x1, {4, 4, 0}}, {F::xi, D::x1x2, {-8, 0, 0}},
    };
    t.rules[static_cast<int>(F::phiU1)] = {
        {F::U2, D::x2, {0, -4, 0}},
        {F::phiU1, D::id, {-4, 4, 1}},
        {F::phiU2, D::x1x2, {-8, 0, 0}},
        {F::xi, D::x1, {0, -4, 0}},
    };
    t.rules[static_cast<int>(F::phiU2)] = {
        {F::U1, D::x2, {-4, -4, 0}},     {F::U2, D::x1, {-4, -4, 0}},    {F::phiU1, D::x1x2, {-8, 0, 0}},
        {F::phiU2, D::id, {0, 6, 1}},    {F::phiU2, D::x2x2, {-4, 0, 0}}, {F::xi, D::x2, {-4, -4, 0}},
    };
    t.rules[static_cast<int>(F::xi)] = {
        {F::U1, D::id, {0, 2, 0}},    {F::U1, D::x2x2, {-4, 0, 0}}, {F::U2, D::x1x2, {-8, 0, 0}},
        {F::phiU1, D::x1, {0, 4, 0}}, {F::phiU2, D::x2, {4, 4, 0}}, {F::xi, D::id, {0, 4, 1}},
    };
    return t;
}

namespace {

DiffImage apply_x1(const DiffImage& v)
{
    const auto& g = v.function;
    if (g.m == 0) return {QuadExt(0), g};
    TrigBasisFunction out = g;
    out.gamma_parity = 1 - g.gamma_parity;
    // cos → −m sin, sin → m cos
    const ExactInt c = g.gamma_parity == 0 ? ExactInt(-g.m) : ExactInt(g.m);
    return {v.coefficient * QuadExt(c), out};
}

DiffImage apply_x2(const DiffImage& v)
{
    const auto& g = v.function;
    if (g.n == 0) return {QuadExt(0), g};
    TrigBasisFunction out = g;
    out.theta_parity = 1 - g.theta_parity;
    // cos(√2nϑ) → −√2n sin, sin → √2n cos
    const ExactInt c = g.theta_parity == 0 ? ExactInt(-g.n) : ExactInt(g.n);
    return {v.coefficient * QuadExt(0, c), out};
}

}  // namespace

DiffImage apply(DiffOp op, const TrigBasisFunction& g)
{
    const DiffImage start{QuadExt(1), g};
    switch (op) {
    case DiffOp::id: return start;
    case DiffOp::x1: return apply_x1(start);
    case DiffOp::x2: return apply_x2(start);
    case DiffOp::x1x2: return apply_x1(apply_x2(start));
    case DiffOp::x2x2: return apply_x2(apply_x2(start));
    }
    return start;
}

std::vector<FrameSection> legendre_basis(long m, long n)
{
    if (m < 0 || n < 0) throw InvalidLabel("Legendre block needs m, n >= 0");
    std::vector<std::pair<int, int>> parities;
    if (m == 0 && n == 0) {
        parities = {{0, 0}};
    } else if (n == 0) {
        parities = {{0, 0}, {1, 0}};
    } else if (m == 0) {
        parities = {{0, 0}, {0, 1}};
    } else {
        parities = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    }
    std::vector<FrameSection> basis;
    for (int fr = 0; fr < kFrameCount; ++fr) {
        for (const auto& [pg, pt] : parities) basis.push_back({{m, n, pg, pt}, static_cast<Frame>(fr)});
    }
    return basis;
}

std::vector<std::pair<std::size_t, QuadExt>> apply_operator(const OperatorTable& table,
                                                            const std::vector<FrameSection>& basis,
                                                            const FrameSection& section)
{
    const long lambda = laplace_eigenvalue(section.function);
    std::vector<std::pair<std::size_t, QuadExt>> out;
    for (const auto& rule : table.rules[static_cast<int>(section.frame)]) {
        const ExactInt l(lambda);
        const ExactInt coeff = rule.coeff[0] + rule.coeff[1] * l + rule.coeff[2] * l * l;
        if (sgn(coeff) == 0) continue;
        const DiffImage img = apply(rule.op, section.function);
        if (img.coefficient.is_zero()) continue;
        const FrameSection target{img.function, rule.target};
        std::size_t idx = 0;
        while (idx < basis.size() && !(basis[idx] == target)) ++idx;
        if (idx == basis.size()) throw Error("operator image leaves the (m,n) block");
        out.emplace_back(idx, img.coefficient * QuadExt(coeff));
    }
    return out;
}

ExactMatrix build_legendre_block(long m, long n)
{
    const auto basis = legendre_basis(m, n);
    const OperatorTable table = OperatorTable::legendre();
    ExactMatrix out(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        for (const auto& [i, c] : apply_operator(table, basis, basis[j])) out.at(i, j) += c;
    }
    require_symmetric(out, "Legendre block");
    return out;
}

namespace {

// Row-by-row transcription of the printed matrix, one code per entry.
constexpr const char* kPrintedRows[20] = {
    "a 0 0 0 0 0 0 -p 0 0 0 0 0 -r 0 0 u 0 0 0",
    "0 a 0 0 0 0 p 0 0 0 0 0 r 0 0 0 0 u 0 0",
    "0 0 a 0 0 p 0 0 0 0 0 0 0 0 0 -r 0 0 u 0",
    "0 0 0 a -p 0 0 0 0 0 0 0 0 0 r 0 0 0 0 u",
    "0 0 0 -p b 0 0 0 0 -w 0 0 0 0 -s 0 0 0 0 -t",
    "0 0 p 0 0 b 0 0 q 0 0 0 0 0 0 -s 0 0 t 0",
    "0 p 0 0 0 0 b 0 0 0 0 -q s 0 0 0 0 t 0 0",
    "-p 0 0 0 0 0 0 b 0 0 q 0 0 s 0 0 -t 0 0 0",
    "0 0 0 0 0 q 0 0 c 0 0 0 0 0 0 -t 0 0 v 0",
    "0 0 0 0 -q 0 0 0 0 c 0 0 0 0 t 0 0 0 0 v",
    "0 0 0 0 0 0 0 q 0 0 c 0 0 t 0 0 -v 0 0 0",
    "0 0 0 0 0 0 -q 0 0 0 0 c -t 0 0 0 0 -v 0 0",
    "0 r 0 0 0 0 s 0 0 0 0 -t d 0 0 0 0 r 0 0",
    "-r 0 0 0 0 0 0 s 0 0 t 0 0 d 0 0 -r 0 0 0",
    "0 0 0 r -s 0 0 0 0 t 0 0 0 0 d 0 0 0 0 r",
    "0 0 -r 0 0 -s 0 0 -t 0 0 0 0 0 0 d 0 0 -r 0",
    "u 0 0 0 0 0 0 -t 0 0 -v 0 0 -r 0 0 e 0 0 0",
    "0 u 0 0 0 0 t 0 0 0 0 -v r 0 0 0 0 e 0 0",
    "0 0 u 0 0 t 0 0 v 0 0 0 0 0 0 -r 0 0 e 0",
    "0 0 0 u -t 0 0 0 0 v 0 0 0 0 r 0 0 0 0 e",
};

QuadExt printed_code(char code, long m, long n)
{
    const ExactInt M(m), N(n);
    const ExactInt l = M * M + 2 * N * N;
    switch (code) {
    case '0': return QuadExt(0);
    case 'a': return QuadExt(ExactInt(8 * N * N + l * l));
    case 'b': return QuadExt(ExactInt(l * (l + 6)));
    case 'c': return QuadExt(ExactInt(l * l + 4 * l - 4));
    case 'd': return QuadExt(ExactInt(8 * N * N + l * (l + 6)));
    case 'e': return QuadExt(ExactInt(l * (l + 4)));
    case 'p': return QuadExt(0, ExactInt(4 * M * N));
    case 'q': return QuadExt(0, ExactInt(4 * N * l));
    case 'r': return QuadExt(0, ExactInt(4 * N * (l + 1)));
    case 's': return QuadExt(ExactInt(4 * M * (l + 1)));
    case 't': return QuadExt(0, ExactInt(8 * M * N));
    case 'u': return QuadExt(ExactInt(2 * (4 * N * N + l)));
    case 'v': return QuadExt(ExactInt(4 * M * l));
    case 'w': return QuadExt(0, ExactInt(4 * N));
    default: throw Error(std::string("bad printed-matrix code ") + code);
    }
}

}  // namespace

ExactMatrix printed_legendre_matrix(long m, long n)
{
    if (m < 1 || n < 1) throw InvalidLabel("the printed matrix covers m, n >= 1");
    ExactMatrix out(20);
    for (std::size_t i = 0; i < 20; ++i) {
        std::istringstream row(kPrintedRows[i]);
        std::string tok;
        std::size_t j = 0;
        while (row >> tok) {
            const bool neg = tok[0] == '-';
            const QuadExt v = printed_code(tok.back(), m, n);
            out.at(i, j++) = neg ? -v : v;
        }
        if (j != 20) throw Error("printed matrix row has wrong length");
    }
    return out;
}

std::vector<MatrixEntry> compare_with_printed(long m, long n)
{
    const ExactMatrix built = build_legendre_block(m, n);
    const ExactMatrix printed = printed_legendre_matrix(m, n);
    std::vector<MatrixEntry> diff;
    for (std::size_t i = 0; i < 20; ++i) {
        for (std::size_t j = 0; j < 20; ++j) {
            if (!(built.at(i, j) == printed.at(i, j))) diff.push_back({i + 1, j + 1, built.at(i, j), printed.at(i, j)});
        }
    }
    return diff;
}

std::vector<std::pair<std::size_t, std::size_t>> known_printed_errata() { return {{5, 10}}; }

ExactInt printed_p5_coefficient(int i, long m, long n)
{
    ExactInt sum = 0;
    for (const auto& t : printed_p5_terms(i)) {
        sum += ExactInt(t.coefficient) * pow_int(ExactInt(m), static_cast<unsigned long>(t.m_exp)) *
               pow_int(ExactInt(n), static_cast<unsigned long>(t.n_exp));
    }
    return sum;
}

IntPolynomial printed_p5(long m, long n)
{
    std::vector<ExactInt> c(6);
    for (int i = 0; i < 6; ++i) c[static_cast<std::size_t>(i)] = printed_p5_coefficient(i, m, n);
    return IntPolynomial(std::move(c));
}

P5Report verify_p5_factorization(long m, long n)
{
    if (m < 1 || n < 1) throw InvalidLabel("verify_p5_factorization needs m, n >= 1");
    P5Report r;
    r.m = m;
    r.n = n;
    const ExactMatrix block = build_legendre_block(m, n);
    r.symmetric = block.is_symmetric();
    r.charpoly = charpoly_exact(block);
    // det(xI − M) is monic while the printed a₅ is −1.
    r.expected = (-printed_p5(m, n)).pow(4);
    r.matches = r.charpoly == r.expected;
    if (!r.matches) {
        const auto top = static_cast<std::size_t>(std::max(r.charpoly.degree(), r.expected.degree()));
        for (std::size_t d = top + 1; d-- > 0;) {
            if (!(r.charpoly.coefficient(d) == r.expected.coefficient(d))) {
                r.mismatch_degree = d;
                break;
            }
        }
    }
    return r;
}

bool descartes_hypothesis(long m, long n)
{
    const bool above_21 = m >= 2 && n >= 1 && (m > 2 || n > 1);
    const bool above_12 = m >= 1 && n >= 2;
    return above_21 || above_12;
}

DescartesReport descartes_lemma_check(long m_max, long n_max)
{
    DescartesReport r;
    for (long m = 1; m <= m_max; ++m) {
        for (long n = 1; n <= n_max; ++n) {
            DescartesEntry e;
            e.m = m;
            e.n = n;
            e.hypothesis = descartes_hypothesis(m, n);
            const IntPolynomial p = printed_p5(m, n);
            const int s5 = sgn(p.coefficient(5)), s4 = sgn(p.coefficient(4)), s3 = sgn(p.coefficient(3));
            const int s2 = sgn(p.coefficient(2)), s1 = sgn(p.coefficient(1)), s0 = sgn(p.coefficient(0));
            e.conditions = {s5 < 0, s4 >= 0, s3 <= 0, s2 >= 0, s1 <= 0, s0 > 0};
            e.negative_roots = count_roots(p, RootRegion::negative);
            e.zero_roots = count_roots(p, RootRegion::zero);
            bool ok = e.negative_roots == 0 && e.zero_roots == 0;
            for (bool c : e.conditions) ok = ok && c;
            if (e.hypothesis && !ok) r.violations.push_back(e);
            r.entries.push_back(e);
        }
    }
    return r;
}

namespace {

BlockCount count_block(long m, long n)
{
    const IntPolynomial cp = charpoly_exact(build_legendre_block(m, n));
    return BlockCount{m, n, count_roots_with_multiplicity(cp, RootRegion::negative), count_roots(cp, RootRegion::zero)};
}

LegendreLedgerItem scan_axis(const std::string& name, bool along_m, int positive_run)
{
    LegendreLedgerItem item{name, 0, 0, {}};
    int run = 0;
    for (long j = 1; run < positive_run; ++j) {
        const BlockCount b = along_m ? count_block(j, 0) : count_block(0, j);
        item.index += b.index;
        item.nullity += b.nullity;
        item.blocks.push_back(b);
        run = (b.index == 0 && b.nullity == 0) ? run + 1 : 0;
    }
    return item;
}

LegendreLedgerItem single(const std::string& name, long m, long n)
{
    const BlockCount b = count_block(m, n);
    return LegendreLedgerItem{name, b.index, b.nullity, {b}};
}

}  // namespace

LegendreReport legendre_index_nullity(int positive_run, long interior_window)
{
    if (positive_run < 1) throw UsageError("positive_run must be >= 1");
    LegendreReport r;
    r.ledger.push_back(single("S^{lambda_0}", 0, 0));
    r.ledger.push_back(scan_axis("S^{m,0}", true, positive_run));
    r.ledger.push_back(scan_axis("S^{0,n}", false, positive_run));
    r.ledger.push_back(single("S^{1,1}", 1, 1));
    r.ledger.push_back(single("S^{2,1}", 2, 1));

    // Blocks covered by the Descartes hypothesis: confirm directly in a window.
    for (long m = 1; m <= interior_window; ++m) {
        for (long n = 1; n <= interior_window; ++n) {
            if (!descartes_hypothesis(m, n)) continue;
            const BlockCount b = count_block(m, n);
            if (b.index != 0 || b.nullity != 0) {
                r.ledger_flags.push_back("block (" + std::to_string(m) + "," + std::to_string(n) +
                                         ") contributes despite the lemma");
                r.index += b.index;
                r.nullity += b.nullity;
            }
        }
    }
    r.certified_window = interior_window;

    const long want_index[5] = {1, 6, 0, 4, 0};
    const long want_nullity[5] = {4, 2, 8, 0, 4};
    for (std::size_t i = 0; i < r.ledger.size(); ++i) {
        const auto& item = r.ledger[i];
        r.index += item.index;
        r.nullity += item.nullity;
        if (item.index != want_index[i] || item.nullity != want_nullity[i]) {
            r.ledger_flags.push_back(item.subspace + " contributes (" + std::to_string(item.index) + "," +
                                     std::to_string(item.nullity) + "), expected (" +
                                     std::to_string(want_index[i]) + "," + std::to_string(want_nullity[i]) + ")");
        }
    }
    return r;
}

}  // namespace biharm
