#ifndef TSMLAB_HB_SERIES_HPP
#define TSMLAB_HB_SERIES_HPP

#include "tsmlab/common.hpp"
#include "tsmlab/plane_function.hpp"
#include "tsmlab/twisted_ops.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace tsmlab {

/// Q_k(z) = c_rad phi_k^0(z) + sum_p c_hol[p] z^p phi_{k-p}^p(z)
///        + sum_q c_anti[q] conj(z)^q phi_k^q(z),
/// with 1 <= p <= k and 1 <= q <= q_max. Missing map entries are zero.
struct HBLSeries {
    unsigned k = 0;
    unsigned q_max = 0;
    Complex c_rad{};
    std::map<unsigned, Complex> c_hol;
    std::map<unsigned, Complex> c_anti;

    Complex hol(unsigned p) const;
    Complex anti(unsigned q) const;
    Complex operator()(Complex z) const;
    bool is_zero() const;

    nlohmann::ordered_json to_json() const;
    static HBLSeries from_json(const nlohmann::json& j);
};

Complex eval_series(const HBLSeries& s, Complex z);

/// |conj(z)^q phi_k^q|^2 over C = 2 pi 2^q (k+q)!/k!.
double term_l2_norm(unsigned k, unsigned q);
/// |z^p phi_{k-p}^p|^2 over C = 2 pi 2^p k!/(k-p)!.
double hol_term_l2_norm(unsigned k, unsigned p);
/// Sum of |coeff|^2 times the term norms; the terms are mutually orthogonal.
double series_norm_sq(const HBLSeries& s);

/// C (k! / (2^{q+1} (k+q)!))^{1/2}.
double coefficient_bound(unsigned k, unsigned q, double C);

struct Projection {
    HBLSeries series;
    double tail_norm = 0.0;  // L2 norm of the dropped anti terms, q > q_max
    double tail_bound = 0.0; // sum of |c_q| |term_q| over the dropped terms
    std::vector<std::string> near_zero; // labels of present terms with negligible scalar
};

inline unsigned default_q_max(unsigned k) { return 4 * k + 20; }

/// Termwise Hecke-Bochner projection of f onto the k-th spectral component.
Projection project_to_series(const PlaneFunction& f, unsigned k, unsigned q_max);

struct DirectProjectionOptions {
    double radius = 1.0; // circle on which Q_k is sampled
    QuadratureSpec quad;
};

struct DirectProjection {
    HBLSeries series;
    double max_error_estimate = 0.0;
    bool converged = true;
    unsigned samples = 0;
};

/// Extracts the coefficients from quadrature values of Q_k on a circle by an
/// angular DFT, without using the closed form.
DirectProjection project_direct(const PlaneFunction& f, unsigned k, unsigned q_max,
                                const DirectProjectionOptions& opts = {});

/// The one-parameter family solving the real-line equations at k = 1:
/// c_hol[1] = -2c, c_anti[2m+1] = c / (2^{2m} (m+1)!).
HBLSeries recursion_family_Q1(Complex c, unsigned q_max);

/// log b_m with b_m = (2m+2)! / (2^{2m} ((m+1)!)^2).
double raabe_log_term(unsigned m);
/// m (b_m / b_{m+1} - 1) for m = 1..M.
std::vector<double> raabe_sequence(unsigned M);
/// Partial sums b_0 + ... + b_m for m = 0..M.
std::vector<double> raabe_partial_sums(unsigned M);

/// Polynomial in z and conj(z): coeff(a, b) multiplies z^a conj(z)^b.
class ZZbarPolynomial {
public:
    void add(unsigned a, unsigned b, Complex c);
    Complex coeff(unsigned a, unsigned b) const;
    /// d/dz, treating conj(z) as independent.
    ZZbarPolynomial dz() const;
    Complex at_zero() const { return coeff(0, 0); }
    const std::map<std::pair<unsigned, unsigned>, Complex>& terms() const { return terms_; }

private:
    std::map<std::pair<unsigned, unsigned>, Complex> terms_;
};

/// Q_k e^{|z|^2/4} as a polynomial in z, conj(z).
ZZbarPolynomial series_polynomial(const HBLSeries& s);

/// (A~^p Q_k)(0) with A~ = d/dz + conj(z)/4. On P e^{-|z|^2/4} the operator acts
/// as d/dz on P, so this differentiates the polynomial part p times.
Complex coefficient_via_Atilde(const HBLSeries& s, unsigned p);

/// Spectral route f x mu_r(z) = (1/2pi) sum_k phi_k^0(r) Q_k(z). For the
/// supported profiles the sum is finite; the cut-off is chosen automatically.
Complex spectral_twisted_spherical_mean(const PlaneFunction& f, Complex z, double r);
/// Largest k with a possibly nonzero projection.
unsigned spectral_cutoff(const PlaneFunction& f);

} // namespace tsmlab

#endif
