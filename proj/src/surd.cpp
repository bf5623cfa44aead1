#include "biharm/surd.hpp"

#include <cmath>

#include "biharm/errors.hpp"

namespace biharm {

int sign_of_sum(const ExactInt& x, const ExactInt& y, const ExactInt& a)
{
    const int sy = sgn(a) == 0 ? 0 : sgn(y);
    const int sx = sgn(x);
    if (sy == 0) return sx;
    if (sx == 0 || sx == sy) return sy;
    const int c = sgn(ExactInt(x * x - y * y * a));
    if (c > 0) return sx;
    if (c < 0) return sy;
    return 0;
}

int sign_of_sum(const ExactInt& x, const ExactInt& y, const ExactInt& a, const ExactInt& z,
                const ExactInt& b)
{
    // sign of w = y√a + z√b
    const int ty = sgn(a) == 0 ? 0 : sgn(y);
    const int tz = sgn(b) == 0 ? 0 : sgn(z);
    int sw = 0;
    if (ty == 0) {
        sw = tz;
    } else if (tz == 0 || ty == tz) {
        sw = ty;
    } else {
        const int c = sgn(ExactInt(y * y * a - z * z * b));
        sw = c > 0 ? ty : (c < 0 ? tz : 0);
    }

    const int sx = sgn(x);
    if (sw == 0) return sx;
    if (sx == 0 || sx == sw) return sw;
    // opposite signs: compare x² with w² = y²a + z²b + 2yz√(ab)
    const int d = sign_of_sum(ExactInt(x * x - y * y * a - z * z * b), ExactInt(-2 * y * z), ExactInt(a * b));
    if (d > 0) return sx;
    if (d < 0) return sw;
    return 0;
}

Surd::Surd(ExactInt p, ExactInt s, ExactInt q, int branch)
    : p_(std::move(p)), s_(std::move(s)), q_(std::move(q)), branch_(branch >= 0 ? 1 : -1)
{
    if (sgn(s_) < 0) throw Error("Surd radicand must be nonnegative");
    if (sgn(q_) <= 0) throw Error("Surd denominator must be positive");
}

double Surd::to_double() const
{
    if (sgn(s_) == 0) return ExactRational(p_, q_).get_d();
    const double root = std::sqrt(s_.get_d());
    if (sgn(p_) * branch_ < 0) {
        // p and branch·√s cancel: use (p² − s) / (q (p − branch·√s)) instead
        const double num = ExactInt(p_ * p_ - s_).get_d();
        const double den = q_.get_d() * (p_.get_d() - branch_ * root);
        return num / den;
    }
    return (p_.get_d() + branch_ * root) / q_.get_d();
}

namespace {

// s = r² · core, with core free of square factors below the trial bound.
void split_square(const ExactInt& s, ExactInt& r, ExactInt& core)
{
    r = 1;
    core = s;
    if (sgn(core) == 0) return;
    if (is_perfect_square(core)) {
        r = isqrt(core);
        core = 1;
        return;
    }
    for (unsigned long d = 2; d <= 100000; ++d) {
        const ExactInt d2 = ExactInt(d) * d;
        if (d2 > core) break;
        while (mpz_divisible_p(core.get_mpz_t(), d2.get_mpz_t())) {
            core /= d2;
            r *= d;
        }
    }
    if (is_perfect_square(core)) {
        r *= isqrt(core);
        core = 1;
    }
}

}  // namespace

Surd Surd::reduced() const
{
    ExactInt p = p_;
    ExactInt s = s_;
    ExactInt q = q_;
    if (sgn(s) != 0 && is_perfect_square(s)) {
        p += branch_ * isqrt(s);
        s = 0;
    }
    if (sgn(s) == 0) {
        const ExactInt g = exact_gcd(p, q);
        if (g > 1) {
            p /= g;
            q /= g;
        }
        return Surd(p, 0, q, 1);
    }
    // Largest g | gcd(p, q) with g² | s, by trial factorization of gcd(p, q).
    ExactInt h = exact_gcd(p, q);
    ExactInt g = 1;
    ExactInt rest = s;
    for (ExactInt d = 2; d * d <= h; ++d) {
        while (mpz_divisible_p(h.get_mpz_t(), d.get_mpz_t())) {
            h /= d;
            const ExactInt d2 = d * d;
            if (mpz_divisible_p(rest.get_mpz_t(), d2.get_mpz_t())) {
                rest /= d2;
                g *= d;
            }
        }
    }
    if (h > 1) {
        const ExactInt h2 = h * h;
        if (mpz_divisible_p(rest.get_mpz_t(), h2.get_mpz_t())) g *= h;
    }
    if (g > 1) {
        p /= g;
        q /= g;
        s /= g * g;
    }
    return Surd(p, s, q, branch_);
}

bool operator==(const Surd& x, const Surd& y) { return (x <=> y) == std::strong_ordering::equal; }

std::strong_ordering operator<=>(const Surd& x, const Surd& y)
{
    const int sg = sign_of_sum(ExactInt(x.p_ * y.q_ - y.p_ * x.q_), ExactInt(x.branch_ * y.q_), x.s_,
                               ExactInt(-y.branch_ * x.q_), y.s_);
    if (sg < 0) return std::strong_ordering::less;
    if (sg > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Surd::to_string() const
{
    const Surd v = reduced();
    if (sgn(v.s_) == 0) {
        if (v.q_ == 1) return v.p_.get_str();
        return v.p_.get_str() + "/" + v.q_.get_str();
    }
    ExactInt r;
    ExactInt core;
    split_square(v.s_, r, core);
    std::string root = (r == 1 ? std::string() : r.get_str()) + "√" + core.get_str();
    std::string body;
    if (sgn(v.p_) == 0) {
        body = (v.branch_ < 0 ? "-" : "") + root;
    } else {
        body = v.p_.get_str() + (v.branch_ < 0 ? " - " : " + ") + root;
    }
    if (v.q_ == 1) return body;
    return "(" + body + ")/" + v.q_.get_str();
}

int surd_sign(const Surd& v) { return v.sign(); }

}  // namespace biharm
