#ifndef TSMLAB_PLANE_FUNCTION_HPP
#define TSMLAB_PLANE_FUNCTION_HPP

#include "tsmlab/common.hpp"

#include <json.hpp>

#include <functional>
#include <variant>
#include <vector>

namespace tsmlab {

/// Radial profile a(r) on (0, inf). Both variants are a polynomial in
/// u = r^2/2 times e^{-u/2}, so pairings against Laguerre functions reduce to
/// Gauss-Laguerre sums that are exact up to rounding.
class RadialProfile {
public:
    struct LaguerreExpansion {
        unsigned order = 0;
        std::vector<Complex> coeffs; // a(r) = sum_j coeffs[j] phi_j^order(r)
    };
    struct GaussianPoly {
        std::vector<Rational> coeffs; // a(r) = scale * sum_i coeffs[i] r^{2i} e^{-r^2/4}
        Complex scale{1.0, 0.0};
    };

    static RadialProfile laguerre(unsigned order, std::vector<Complex> coeffs);
    static RadialProfile gaussian_poly(std::vector<Rational> coeffs, Complex scale = {1.0, 0.0});

    /// phi_j^order as a profile.
    static RadialProfile laguerre_function(unsigned j, unsigned order);

    Complex operator()(double r) const;

    /// a(r) e^{u/2} with u = r^2/2, i.e. the polynomial part in u.
    Complex polynomial_part(double u) const;
    unsigned polynomial_degree() const;

    RadialProfile scaled(Complex factor) const;

    bool is_zero() const;

    const std::variant<LaguerreExpansion, GaussianPoly>& data() const { return data_; }

    nlohmann::ordered_json to_json() const;
    static RadialProfile from_json(const nlohmann::json& j);

private:
    explicit RadialProfile(std::variant<LaguerreExpansion, GaussianPoly> d) : data_(std::move(d)) {}
    std::variant<LaguerreExpansion, GaussianPoly> data_;
};

/// a(|z|) z^p (q = 0) or a(|z|) conj(z)^q (p = 0).
class TypeTerm {
public:
    TypeTerm(unsigned p, unsigned q, RadialProfile radial);

    unsigned p() const { return p_; }
    unsigned q() const { return q_; }
    const RadialProfile& radial() const { return radial_; }

    Complex operator()(Complex z) const;

private:
    unsigned p_;
    unsigned q_;
    RadialProfile radial_;
};

class PlaneFunction {
public:
    PlaneFunction() = default;
    explicit PlaneFunction(std::vector<TypeTerm> terms);

    /// Throws if a term with the same (p, q) is already present.
    void add_term(TypeTerm term);

    const std::vector<TypeTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    Complex operator()(Complex z) const;

    /// (pi(sigma) f)(z) = f(sigma z) with sigma = e^{i angle}.
    PlaneFunction rotated(double angle) const;

    std::function<Complex(Complex)> as_callable() const;

    nlohmann::ordered_json to_json() const;
    static PlaneFunction from_json(const nlohmann::json& j);
    static PlaneFunction from_json_text(const std::string& text);

private:
    std::vector<TypeTerm> terms_;
};

Complex eval_plane_function(const PlaneFunction& f, Complex z);

nlohmann::ordered_json complex_to_json(Complex c);
Complex complex_from_json(const nlohmann::json& j);

} // namespace tsmlab

#endif
