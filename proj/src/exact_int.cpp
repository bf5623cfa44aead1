#include "biharm/exact_int.hpp"

#include <cctype>

#include "biharm/errors.hpp"

namespace biharm {

namespace {

bool all_digits(const std::string& s)
{
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

ExactRational parse_rational(const std::string& text)
{
    if (text.empty()) throw UsageError("empty number");
    if (auto slash = text.find('/'); slash != std::string::npos) {
        ExactRational num = parse_rational(text.substr(0, slash));
        ExactRational den = parse_rational(text.substr(slash + 1));
        if (sgn(den) == 0) throw UsageError("zero denominator in '" + text + "'");
        ExactRational r = num / den;
        r.canonicalize();
        return r;
    }

    std::string body = text;
    bool negative = false;
    if (body[0] == '+' || body[0] == '-') {
        negative = body[0] == '-';
        body = body.substr(1);
    }

    long exponent = 0;
    if (auto e = body.find_first_of("eE"); e != std::string::npos) {
        std::string exp_text = body.substr(e + 1);
        bool exp_negative = false;
        if (!exp_text.empty() && (exp_text[0] == '+' || exp_text[0] == '-')) {
            exp_negative = exp_text[0] == '-';
            exp_text = exp_text.substr(1);
        }
        if (!all_digits(exp_text) || exp_text.size() > 6) throw UsageError("bad exponent in '" + text + "'");
        exponent = std::stol(exp_text) * (exp_negative ? -1 : 1);
        body = body.substr(0, e);
    }

    std::string int_part = body;
    std::string frac_part;
    if (auto dot = body.find('.'); dot != std::string::npos) {
        int_part = body.substr(0, dot);
        frac_part = body.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) throw UsageError("not a number: '" + text + "'");
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) {
        throw UsageError("not a number: '" + text + "'");
    }

    ExactInt digits(int_part + frac_part, 10);
    exponent -= static_cast<long>(frac_part.size());
    ExactRational r(digits);
    if (exponent > 0) {
        r *= ExactRational(pow_int(10, static_cast<unsigned long>(exponent)));
    } else if (exponent < 0) {
        r /= ExactRational(pow_int(10, static_cast<unsigned long>(-exponent)));
    }
    r.canonicalize();
    return negative ? ExactRational(-r) : r;
}

std::string to_string(const ExactRational& v)
{
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace biharm
