#pragma once

#include <compare>
#include <string>

#include "biharm/exact_int.hpp"

namespace biharm {

// Exact sign of x + y·√a with a ≥ 0.
int sign_of_sum(const ExactInt& x, const ExactInt& y, const ExactInt& a);
// Exact sign of x + y·√a + z·√b with a, b ≥ 0.
int sign_of_sum(const ExactInt& x, const ExactInt& y, const ExactInt& a, const ExactInt& z,
                const ExactInt& b);

// The real number (p + branch·√s)/q with s ≥ 0, q > 0 and branch ∈ {−1, +1}.
class Surd {
public:
    Surd() = default;
    Surd(ExactInt p, ExactInt s, ExactInt q, int branch);

    static Surd rational(ExactInt p, ExactInt q = 1) { return Surd(std::move(p), 0, std::move(q), 1); }

    const ExactInt& p() const { return p_; }
    const ExactInt& s() const { return s_; }
    const ExactInt& q() const { return q_; }
    int branch() const { return branch_; }

    bool is_rational() const { return sgn(s_) == 0; }
    int sign() const { return sign_of_sum(p_, ExactInt(branch_), s_); }
    double to_double() const;

    // Folds a perfect-square radicand into p and divides out the common content.
    Surd reduced() const;

    friend bool operator==(const Surd& x, const Surd& y);
    friend std::strong_ordering operator<=>(const Surd& x, const Surd& y);

    // Human-readable form with square factors of the radicand pulled out,
    // e.g. "(-5 + √33)/4".
    std::string to_string() const;

private:
    ExactInt p_{0};
    ExactInt s_{0};
    ExactInt q_{1};
    int branch_{1};
};

int surd_sign(const Surd& v);

}  // namespace biharm
