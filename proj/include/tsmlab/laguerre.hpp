#ifndef TSMLAB_LAGUERRE_HPP
#define TSMLAB_LAGUERRE_HPP

#include "tsmlab/common.hpp"

#include <vector>

namespace tsmlab {

/// L_k^alpha(x) = sum_j (-1)^j binom(k+alpha, k-j) x^j / j!, held with exact
/// rational coefficients. Floating evaluation goes through the three-term
/// recurrence in k, not through the coefficients.
class LaguerrePolynomial {
public:
    LaguerrePolynomial(unsigned degree, Rational order);

    unsigned degree() const { return degree_; }
    const Rational& order() const { return order_; }

    /// coeffs[j] multiplies x^j.
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    double operator()(double x) const;

    Rational eval_exact(const Rational& x) const;
    double eval_horner(double x) const;

    /// Coefficients of the derivative polynomial.
    std::vector<Rational> derivative_coefficients() const;

private:
    unsigned degree_;
    Rational order_;
    std::vector<Rational> coeffs_;
};

LaguerrePolynomial laguerre_coefficients(unsigned k, const Rational& alpha);

double laguerre_eval(const LaguerrePolynomial& poly, double x);

/// Upward recurrence L_{j+1} = ((2j+1+a-x) L_j - (j+a) L_{j-1}) / (j+1).
double laguerre_eval(unsigned k, double alpha, double x);

/// Fills out[j] = L_j^alpha(x) for j = 0..k_max.
void laguerre_eval_all(unsigned k_max, double alpha, double x, std::vector<double>& out);

/// L_k^n(0) = binom(k+n, k). Negative k is read as the zero polynomial.
Rational value_at_zero(long k, long n);

/// (L_k^alpha)'(0) = -binom(k+alpha, k-1); zero for k = 0.
Rational derivative_at_zero(unsigned k, const Rational& alpha);

/// Zeros of L_k^alpha, ascending, from the eigenvalues of the symmetric
/// Jacobi matrix of the Laguerre recurrence. Requires alpha > -1.
std::vector<double> laguerre_real_zeros(unsigned k, const Rational& alpha);

/// min |x_i - y_j| over the zeros of L_{k1}^alpha and L_{k2}^alpha.
double common_zero_report(unsigned k1, unsigned k2, const Rational& alpha);

/// phi_k^order at |z| = r: L_k^order(r^2/2) e^{-r^2/4}.
double laguerre_function(unsigned k, unsigned order, double r);

} // namespace tsmlab

#endif
