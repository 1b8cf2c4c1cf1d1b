#ifndef TSMLAB_COMMON_HPP
#define TSMLAB_COMMON_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tsmlab {

using Complex = std::complex<double>;
using Rational = mpq_class;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

enum class ErrorCode {
    InvalidArgument,
    Parse,
    NonConvergence,
    Unsupported,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

/// Accepts "p", "-p", "p/q" and plain decimals such as "0.5".
Rational parse_rational(std::string_view text);

/// Generalised binomial coefficient binom(top, m) for rational top.
Rational binomial(const Rational& top, unsigned m);

Rational factorial(unsigned n);

double log_factorial(unsigned n);

} // namespace tsmlab

#endif
