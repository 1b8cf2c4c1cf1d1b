#ifndef TSMLAB_TWISTED_OPS_HPP
#define TSMLAB_TWISTED_OPS_HPP

#include "tsmlab/common.hpp"
#include "tsmlab/grid.hpp"
#include "tsmlab/plane_function.hpp"

#include <vector>

namespace tsmlab {

/// Tensor-product rule: trapezoid in angle, composite Gauss-Legendre in
/// radius on [0, truncation_radius]. A truncation radius of zero selects
/// default_truncation_radius().
struct QuadratureSpec {
    unsigned angular_points = 64;
    unsigned radial_points = 128;
    double truncation_radius = 0.0;
    double tolerance = 1e-10;
    unsigned max_doublings = 5;
};

struct QuadratureResult {
    Complex value;
    double error_estimate = 0.0; // change under the last point doubling
    bool converged = false;
    unsigned angular_points = 0; // of the finest rule used
    unsigned radial_points = 0;
};

/// max(8, |z| + 6 sqrt(2k+1)).
double default_truncation_radius(Complex z, unsigned k);

/// f x mu_r(z) = (1/2pi) int_0^{2pi} f(z - r e^{it}) e^{(i/2) Im(z conj(r e^{it}))} dt,
/// refined by doubling angular_points until successive values differ by at
/// most spec.tolerance.
QuadratureResult twisted_spherical_mean(const PlaneCallable& f, Complex z, double r,
                                        const QuadratureSpec& spec = {});
QuadratureResult twisted_spherical_mean(const PlaneFunction& f, Complex z, double r,
                                        const QuadratureSpec& spec = {});

/// Q_k(z) = int_C f(z - w) phi_k^0(w) e^{(i/2) Im(z conj w)} dA(w) by direct
/// quadrature, truncated to |w| <= R. Both angular and radial point counts are
/// doubled until the value settles.
QuadratureResult twisted_convolve_phi(const PlaneCallable& f, unsigned k, Complex z,
                                      const QuadratureSpec& spec = {});
QuadratureResult twisted_convolve_phi(const PlaneFunction& f, unsigned k, Complex z,
                                      const QuadratureSpec& spec = {});

/// Q_0 .. Q_{k_max} at z from one shared set of integrand samples.
std::vector<QuadratureResult> twisted_convolve_phi_all(const PlaneCallable& f, unsigned k_max,
                                                       Complex z, const QuadratureSpec& spec = {});

// -- Hecke-Bochner closed form ------------------------------------------------

/// The constant in front of the normalised pairing, calibrated once against
/// direct quadrature on the radial Gaussian (p = q = 0, a = phi_0^0, k = 0).
inline constexpr double kHeckeBochnerConstant = 2.0 * kPi;

/// Re-derives kHeckeBochnerConstant from twisted_convolve_phi at the witness
/// point `z`.
double calibrate_hecke_bochner_constant(Complex z = {0.5, 0.25}, const QuadratureSpec& spec = {});

/// int_0^inf phi_j^m(r)^2 r^{2m+1} dr = 2^m (j+m)!/j!.
double laguerre_function_norm_sq(unsigned j, unsigned m);

/// int_0^inf a(r) phi_j^m(r) r^{2m+1} dr, the radial pairing on C^{1+m}.
/// Evaluated by Gauss-Laguerre in u = r^2/2, exact for these profiles.
Complex radial_pairing(const RadialProfile& a, unsigned j, unsigned m);

/// Closed form of (a P) x phi_k^0 for one type term: scalar * P(z) * phi_{k-p}^{p+q}(z).
struct HeckeBochnerTerm {
    Complex scalar;
    unsigned p = 0;
    unsigned q = 0;
    unsigned laguerre_degree = 0; // k - p
    unsigned laguerre_order = 0;  // p + q
    bool below_degree = false;    // k < p, scalar is exactly zero

    Complex operator()(Complex z) const;
};

/// scalar = kHeckeBochnerConstant * <a, phi_{k-p}^{p+q}> / |phi_{k-p}^{p+q}|^2,
/// zero when k < p.
HeckeBochnerTerm hecke_bochner_projection(const TypeTerm& term, unsigned k);

// -- twisted translation and the special Hermite operator ----------------------

/// (tau_eta f)(xi) = f(xi - eta) e^{(i/2) Im(eta conj xi)}.
PlaneCallable twisted_translate(PlaneCallable f, Complex eta);
GridFunction twisted_translate(const PlaneCallable& f, Complex eta, const Grid& grid);

/// -Delta g + |z|^2 g / 4 with the five-point Laplacian. The result lives on
/// the interior (nx-2) x (ny-2) grid.
GridFunction special_hermite_apply(const GridFunction& g);

} // namespace tsmlab

#endif
