#pragma once

#include <string>

#include "biharm/exact_int.hpp"

namespace biharm {

// Element a + b√2 of the ring ℤ[√2].
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(long a) : a_(a) {}  // NOLINT: integers embed implicitly
    QuadExt(ExactInt a) : a_(std::move(a)) {}  // NOLINT
    QuadExt(ExactInt a, ExactInt b) : a_(std::move(a)), b_(std::move(b)) {}

    static QuadExt sqrt2() { return QuadExt(0, 1); }

    const ExactInt& rational_part() const { return a_; }
    const ExactInt& sqrt2_part() const { return b_; }

    bool is_rational() const { return sgn(b_) == 0; }
    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

    QuadExt conjugate() const { return QuadExt(a_, -b_); }
    // a² − 2b²
    ExactInt norm() const { return a_ * a_ - 2 * b_ * b_; }

    double to_double() const;
    // Exact sign of the real number a + b√2.
    int sign() const;

    QuadExt operator-() const { return QuadExt(-a_, -b_); }
    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend bool operator==(const QuadExt& x, const QuadExt& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

    std::string to_string() const;

private:
    ExactInt a_{0};
    ExactInt b_{0};
};

QuadExt quad_mul(const QuadExt& x, const QuadExt& y);

// x / y when the quotient lies in ℤ[√2]; throws InexactDivision otherwise.
QuadExt exact_quotient(const QuadExt& x, const QuadExt& y);
ExactInt exact_quotient(const ExactInt& x, const ExactInt& y);

}  // namespace biharm
