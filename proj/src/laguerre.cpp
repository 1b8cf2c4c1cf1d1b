#include "tsmlab/laguerre.hpp"

#include "tsmlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tsmlab {

LaguerrePolynomial::LaguerrePolynomial(unsigned degree, Rational order)
    : degree_(degree), order_(std::move(order)) {
    order_.canonicalize();
    coeffs_.reserve(degree_ + 1);
    const Rational top = Rational(degree_) + order_;
    for (unsigned j = 0; j <= degree_; ++j) {
        Rational c = binomial(top, degree_ - j) / factorial(j);
        if (j % 2 == 1)
            c = -c;
        coeffs_.push_back(c);
    }
}

double LaguerrePolynomial::operator()(double x) const {
    return laguerre_eval(degree_, order_.get_d(), x);
}

Rational LaguerrePolynomial::eval_exact(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

double LaguerrePolynomial::eval_horner(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + it->get_d();
    return acc;
}

std::vector<Rational> LaguerrePolynomial::derivative_coefficients() const {
    std::vector<Rational> d;
    for (unsigned j = 1; j <= degree_; ++j)
        d.push_back(coeffs_[j] * j);
    return d;
}

LaguerrePolynomial laguerre_coefficients(unsigned k, const Rational& alpha) {
    return LaguerrePolynomial(k, alpha);
}

double laguerre_eval(const LaguerrePolynomial& poly, double x) {
    return poly(x);
}

double laguerre_eval(unsigned k, double alpha, double x) {
    if (k == 0)
        return 1.0;
    double prev = 1.0;
    double cur = 1.0 + alpha - x;
    for (unsigned j = 1; j < k; ++j) {
        double next = ((2.0 * j + 1.0 + alpha - x) * cur - (j + alpha) * prev) / (j + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

void laguerre_eval_all(unsigned k_max, double alpha, double x, std::vector<double>& out) {
    out.resize(k_max + 1);
    out[0] = 1.0;
    if (k_max == 0)
        return;
    out[1] = 1.0 + alpha - x;
    for (unsigned j = 1; j < k_max; ++j)
        out[j + 1] = ((2.0 * j + 1.0 + alpha - x) * out[j] - (j + alpha) * out[j - 1]) / (j + 1.0);
}

Rational value_at_zero(long k, long n) {
    if (k < 0)
        return 0;
    return binomial(Rational(k + n), static_cast<unsigned>(k));
}

Rational derivative_at_zero(unsigned k, const Rational& alpha) {
    if (k == 0)
        return 0;
    return -binomial(Rational(k) + alpha, k - 1);
}

std::vector<double> laguerre_real_zeros(unsigned k, const Rational& alpha) {
    const double a = alpha.get_d();
    if (!(a > -1.0))
        fail(ErrorCode::InvalidArgument, "laguerre_real_zeros: order must exceed -1");
    if (k == 0)
        return {};
    std::vector<double> diag(k), sub(k - 1);
    for (unsigned j = 0; j < k; ++j)
        diag[j] = 2.0 * j + a + 1.0;
    for (unsigned j = 1; j < k; ++j)
        sub[j - 1] = std::sqrt(j * (j + a));
    auto zeros = symmetric_tridiagonal_eigen(diag, sub, false).values;
    std::sort(zeros.begin(), zeros.end());
    return zeros;
}

double common_zero_report(unsigned k1, unsigned k2, const Rational& alpha) {
    if (k1 == 0 || k2 == 0)
        fail(ErrorCode::InvalidArgument, "common_zero_report: degrees must be positive");
    const auto xs = laguerre_real_zeros(k1, alpha);
    const auto ys = laguerre_real_zeros(k2, alpha);
    double best = std::numeric_limits<double>::infinity();
    for (double x : xs)
        for (double y : ys)
            best = std::min(best, std::abs(x - y));
    return best;
}

double laguerre_function(unsigned k, unsigned order, double r) {
    const double r2 = r * r;
    return laguerre_eval(k, static_cast<double>(order), 0.5 * r2) * std::exp(-0.25 * r2);
}

} // namespace tsmlab
