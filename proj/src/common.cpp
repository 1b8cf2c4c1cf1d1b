#include "tsmlab/common.hpp"

#include <cctype>
#include <cmath>

namespace tsmlab {

std::string to_string(const Rational& value) {
    Rational v = value;
    v.canonicalize();
    if (v.get_den() == 1)
        return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.pop_back();
    std::size_t start = 0;
    while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start])))
        ++start;
    s = s.substr(start);
    if (s.empty())
        fail(ErrorCode::Parse, "empty rational literal");

    auto dot = s.find('.');
    if (dot != std::string::npos) {
        if (s.find('/') != std::string::npos)
            fail(ErrorCode::Parse, "malformed rational literal '" + s + "'");
        bool negative = s[0] == '-';
        std::string digits = s.substr(negative || s[0] == '+' ? 1 : 0);
        dot = digits.find('.');
        std::string integral = digits.substr(0, dot);
        std::string fraction = digits.substr(dot + 1);
        if (integral.empty())
            integral = "0";
        for (char c : integral + fraction)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                fail(ErrorCode::Parse, "malformed rational literal '" + s + "'");
        mpz_class num(integral + fraction);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, fraction.size());
        Rational r(num, den);
        r.canonicalize();
        return negative ? Rational(-r) : r;
    }

    Rational r;
    if (r.set_str(s, 10) != 0)
        fail(ErrorCode::Parse, "malformed rational literal '" + s + "'");
    if (r.get_den() == 0)
        fail(ErrorCode::Parse, "zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

Rational binomial(const Rational& top, unsigned m) {
    Rational result = 1;
    for (unsigned i = 1; i <= m; ++i)
        result *= (top - m + i) / Rational(i);
    return result;
}

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

double log_factorial(unsigned n) {
    return std::lgamma(static_cast<double>(n) + 1.0);
}

} // namespace tsmlab
