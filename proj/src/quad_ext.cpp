#include "biharm/quad_ext.hpp"

#include <cmath>

#include "biharm/errors.hpp"
#include "biharm/surd.hpp"

namespace biharm {

QuadExt& QuadExt::operator+=(const QuadExt& o)
{
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o)
{
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o)
{
    ExactInt a = a_ * o.a_ + 2 * b_ * o.b_;
    ExactInt b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

double QuadExt::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(2.0); }

int QuadExt::sign() const { return sign_of_sum(a_, b_, ExactInt(2)); }

std::string QuadExt::to_string() const
{
    if (sgn(b_) == 0) return a_.get_str();
    std::string coeff;
    if (b_ == 1) {
        coeff = "√2";
    } else if (b_ == -1) {
        coeff = "-√2";
    } else {
        coeff = b_.get_str() + "√2";
    }
    if (sgn(a_) == 0) return coeff;
    if (sgn(b_) > 0) return a_.get_str() + " + " + coeff;
    return a_.get_str() + " - " + coeff.substr(1);
}

QuadExt quad_mul(const QuadExt& x, const QuadExt& y) { return x * y; }

ExactInt exact_quotient(const ExactInt& x, const ExactInt& y)
{
    if (sgn(y) == 0) throw InexactDivision("division by zero");
    if (!mpz_divisible_p(x.get_mpz_t(), y.get_mpz_t())) throw InexactDivision("integer division is not exact");
    ExactInt q;
    mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return q;
}

QuadExt exact_quotient(const QuadExt& x, const QuadExt& y)
{
    if (y.is_zero()) throw InexactDivision("division by zero in Z[sqrt2]");
    if (y.is_rational()) {
        return QuadExt(exact_quotient(x.rational_part(), y.rational_part()),
                       exact_quotient(x.sqrt2_part(), y.rational_part()));
    }
    // x / y = x·ȳ / N(y)
    const QuadExt num = x * y.conjugate();
    const ExactInt n = y.norm();
    return QuadExt(exact_quotient(num.rational_part(), n), exact_quotient(num.sqrt2_part(), n));
}

}  // namespace biharm
