#include "tsmlab/twisted_ops.hpp"

#include "tsmlab/laguerre.hpp"
#include "tsmlab/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace tsmlab {

namespace {

// Im(z conj w)
inline double twist_phase(Complex z, Complex w) {
    return z.imag() * w.real() - z.real() * w.imag();
}

Complex ipow(Complex z, unsigned n) {
    Complex acc{1.0, 0.0};
    for (unsigned i = 0; i < n; ++i)
        acc *= z;
    return acc;
}

Complex circle_average(const PlaneCallable& f, Complex z, double r, unsigned m) {
    Complex sum{};
    for (unsigned j = 0; j < m; ++j) {
        const double t = 2.0 * kPi * j / m;
        const Complex w = std::polar(r, t);
        sum += f(z - w) * std::polar(1.0, 0.5 * twist_phase(z, w));
    }
    return sum / static_cast<double>(m);
}

std::vector<Complex> convolve_all_once(const PlaneCallable& f, unsigned k_max, Complex z,
                                       double radius, unsigned angular, unsigned radial) {
    constexpr unsigned kPanelOrder = 16;
    const unsigned panels = std::max(1u, (radial + kPanelOrder - 1) / kPanelOrder);
    const auto rule = composite_gauss_legendre(panels, kPanelOrder, 0.0, radius);

    std::vector<Complex> cis(angular);
    for (unsigned j = 0; j < angular; ++j)
        cis[j] = std::polar(1.0, 2.0 * kPi * j / angular);

    std::vector<Complex> out(k_max + 1, Complex{});
    std::vector<double> lag;
    const double dtheta = 2.0 * kPi / angular;
    for (std::size_t n = 0; n < rule.size(); ++n) {
        const double rho = rule.nodes[n];
        Complex ring{};
        for (unsigned j = 0; j < angular; ++j) {
            const Complex w = rho * cis[j];
            ring += f(z - w) * std::polar(1.0, 0.5 * twist_phase(z, w));
        }
        laguerre_eval_all(k_max, 0.0, 0.5 * rho * rho, lag);
        const double radial_weight = rule.weights[n] * rho * std::exp(-0.25 * rho * rho) * dtheta;
        for (unsigned k = 0; k <= k_max; ++k)
            out[k] += radial_weight * lag[k] * ring;
    }
    return out;
}

} // namespace

double default_truncation_radius(Complex z, unsigned k) {
    return std::max(8.0, std::abs(z) + 6.0 * std::sqrt(2.0 * k + 1.0));
}

QuadratureResult twisted_spherical_mean(const PlaneCallable& f, Complex z, double r,
                                        const QuadratureSpec& spec) {
    if (!(r > 0.0))
        fail(ErrorCode::InvalidArgument, "twisted_spherical_mean: radius must be positive");
    if (spec.angular_points == 0)
        fail(ErrorCode::InvalidArgument, "twisted_spherical_mean: angular_points must be positive");
    QuadratureResult res;
    unsigned m = spec.angular_points;
    Complex prev = circle_average(f, z, r, m);
    for (unsigned d = 0; d <= spec.max_doublings; ++d) {
        const Complex next = circle_average(f, z, r, 2 * m);
        res.error_estimate = std::abs(next - prev);
        res.value = next;
        res.angular_points = 2 * m;
        m *= 2;
        prev = next;
        if (res.error_estimate <= spec.tolerance) {
            res.converged = true;
            break;
        }
    }
    return res;
}

QuadratureResult twisted_spherical_mean(const PlaneFunction& f, Complex z, double r,
                                        const QuadratureSpec& spec) {
    return twisted_spherical_mean([&f](Complex w) { return f(w); }, z, r, spec);
}

std::vector<QuadratureResult> twisted_convolve_phi_all(const PlaneCallable& f, unsigned k_max,
                                                       Complex z, const QuadratureSpec& spec) {
    if (spec.angular_points == 0 || spec.radial_points == 0)
        fail(ErrorCode::InvalidArgument, "twisted_convolve_phi: point counts must be positive");
    const double radius = spec.truncation_radius > 0.0 ? spec.truncation_radius
                                                       : default_truncation_radius(z, k_max);
    unsigned m = spec.angular_points;
    unsigned n = spec.radial_points;
    auto prev = convolve_all_once(f, k_max, z, radius, m, n);
    std::vector<QuadratureResult> res(k_max + 1);
    for (unsigned d = 0; d <= spec.max_doublings; ++d) {
        m *= 2;
        n *= 2;
        auto next = convolve_all_once(f, k_max, z, radius, m, n);
        bool all_converged = true;
        for (unsigned k = 0; k <= k_max; ++k) {
            res[k].value = next[k];
            res[k].error_estimate = std::abs(next[k] - prev[k]);
            res[k].angular_points = m;
            res[k].radial_points = n;
            res[k].converged = res[k].error_estimate <= spec.tolerance;
            all_converged = all_converged && res[k].converged;
        }
        prev = std::move(next);
        if (all_converged)
            break;
    }
    return res;
}

QuadratureResult twisted_convolve_phi(const PlaneCallable& f, unsigned k, Complex z,
                                      const QuadratureSpec& spec) {
    QuadratureSpec local = spec;
    if (local.truncation_radius <= 0.0)
        local.truncation_radius = default_truncation_radius(z, k);
    return twisted_convolve_phi_all(f, k, z, local).back();
}

QuadratureResult twisted_convolve_phi(const PlaneFunction& f, unsigned k, Complex z,
                                      const QuadratureSpec& spec) {
    return twisted_convolve_phi([&f](Complex w) { return f(w); }, k, z, spec);
}

double laguerre_function_norm_sq(unsigned j, unsigned m) {
    return std::exp(m * std::log(2.0) + log_factorial(j + m) - log_factorial(j));
}

Complex radial_pairing(const RadialProfile& a, unsigned j, unsigned m) {
    // u = r^2/2: r^{2m+1} dr = 2^m u^m du, both factors carry e^{-u/2}.
    const unsigned degree = a.polynomial_degree() + j;
    const unsigned nodes = degree / 2 + 2;
    const auto rule = gauss_laguerre(nodes, static_cast<double>(m));
    Complex sum{};
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double u = rule.nodes[i];
        sum += rule.weights[i] * a.polynomial_part(u) * laguerre_eval(j, static_cast<double>(m), u);
    }
    sum *= std::ldexp(1.0, static_cast<int>(m));
    if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag()))
        fail(ErrorCode::InvalidArgument, "radial profile is not integrable against phi_j^m");
    return sum;
}

Complex HeckeBochnerTerm::operator()(Complex z) const {
    if (below_degree || scalar == Complex{})
        return {};
    const Complex mono = q == 0 ? ipow(z, p) : ipow(std::conj(z), q);
    return scalar * mono * laguerre_function(laguerre_degree, laguerre_order, std::abs(z));
}

HeckeBochnerTerm hecke_bochner_projection(const TypeTerm& term, unsigned k) {
    HeckeBochnerTerm out;
    out.p = term.p();
    out.q = term.q();
    out.laguerre_order = term.p() + term.q();
    if (k < term.p()) {
        out.below_degree = true;
        out.scalar = {};
        return out;
    }
    out.laguerre_degree = k - term.p();
    const Complex pairing = radial_pairing(term.radial(), out.laguerre_degree, out.laguerre_order);
    out.scalar = kHeckeBochnerConstant * pairing /
                 laguerre_function_norm_sq(out.laguerre_degree, out.laguerre_order);
    return out;
}

double calibrate_hecke_bochner_constant(Complex z, const QuadratureSpec& spec) {
    const PlaneFunction witness({TypeTerm(0, 0, RadialProfile::laguerre_function(0, 0))});
    const Complex direct = twisted_convolve_phi(witness, 0, z, spec).value;
    const double normalised = (radial_pairing(witness.terms()[0].radial(), 0, 0) /
                               laguerre_function_norm_sq(0, 0))
                                  .real();
    return (direct / (normalised * laguerre_function(0, 0, std::abs(z)))).real();
}

PlaneCallable twisted_translate(PlaneCallable f, Complex eta) {
    return [f = std::move(f), eta](Complex xi) {
        return f(xi - eta) * std::polar(1.0, 0.5 * twist_phase(eta, xi));
    };
}

GridFunction twisted_translate(const PlaneCallable& f, Complex eta, const Grid& grid) {
    return sample_on_grid(twisted_translate(f, eta), grid);
}

GridFunction special_hermite_apply(const GridFunction& g) {
    const auto& in = g.grid;
    if (in.nx < 3 || in.ny < 3)
        fail(ErrorCode::InvalidArgument, "special_hermite_apply: grid must be at least 3x3");
    if (g.values.size() != in.size())
        fail(ErrorCode::InvalidArgument, "special_hermite_apply: value count does not match grid");
    GridFunction out;
    out.grid = in;
    out.grid.nx = in.nx - 2;
    out.grid.ny = in.ny - 2;
    out.values.resize(out.grid.size());
    const double inv_h2 = 1.0 / (in.h * in.h);
    for (std::size_t j = 1; j + 1 < in.ny; ++j) {
        for (std::size_t i = 1; i + 1 < in.nx; ++i) {
            const Complex c = g.at(i, j);
            const Complex lap = (g.at(i + 1, j) + g.at(i - 1, j) + g.at(i, j + 1) + g.at(i, j - 1) - 4.0 * c) * inv_h2;
            const double r2 = std::norm(in.point(i, j));
            out.values[out.grid.index(i - 1, j - 1)] = -lap + 0.25 * r2 * c;
        }
    }
    return out;
}

} // namespace tsmlab
