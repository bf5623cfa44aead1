#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace biharm {

// Arbitrary-precision signed integer. All exact computations run on GMP.
using ExactInt = mpz_class;
using ExactRational = mpq_class;

using int128 = __int128;

inline int sign(const ExactInt& v) { return sgn(v); }
inline int sign(const ExactRational& v) { return sgn(v); }

inline ExactInt isqrt(const ExactInt& v)
{
    ExactInt r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const ExactInt& v)
{
    return sgn(v) >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

inline ExactInt exact_gcd(const ExactInt& a, const ExactInt& b)
{
    ExactInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline ExactInt pow_int(const ExactInt& base, unsigned long e)
{
    ExactInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline ExactInt from_int128(int128 v)
{
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    ExactInt hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
    ExactInt lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
    ExactInt r = (hi << 64) + lo;
    return neg ? ExactInt(-r) : r;
}

inline ExactInt from_int64(std::int64_t v) { return ExactInt(static_cast<long>(v)); }

inline std::string to_string(const ExactInt& v) { return v.get_str(); }

// Parses "p/q", an integer, or a finite decimal such as "-1.25" or "2.5e-3" exactly.
ExactRational parse_rational(const std::string& text);

std::string to_string(const ExactRational& v);

}  // namespace biharm
