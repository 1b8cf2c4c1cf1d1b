#ifndef TSMLAB_QUADRATURE_HPP
#define TSMLAB_QUADRATURE_HPP

#include <cstddef>
#include <vector>

namespace tsmlab {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }

    template <class F>
    auto integrate(F&& f) const -> decltype(f(0.0) * 1.0) {
        decltype(f(0.0) * 1.0) sum{};
        for (std::size_t i = 0; i < nodes.size(); ++i)
            sum += weights[i] * f(nodes[i]);
        return sum;
    }
};

/// n-point Gauss-Legendre rule mapped to [a, b]. Nodes by Newton iteration on
/// the Legendre recurrence.
QuadratureRule gauss_legendre(unsigned n, double a, double b);

/// Composite Gauss-Legendre: `panels` equal sub-intervals of [a, b], each with
/// an `order`-point rule.
QuadratureRule composite_gauss_legendre(unsigned panels, unsigned order, double a, double b);

/// Generalised Gauss-Laguerre rule for the weight u^alpha e^{-u} on (0, inf),
/// alpha > -1, computed by Golub-Welsch from the Laguerre Jacobi matrix.
QuadratureRule gauss_laguerre(unsigned n, double alpha);

/// Eigenvalues (ascending) and first eigenvector components of the symmetric
/// tridiagonal matrix with the given diagonal and sub-diagonal.
struct TridiagonalEigen {
    std::vector<double> values;
    std::vector<double> first_components;
};
TridiagonalEigen symmetric_tridiagonal_eigen(const std::vector<double>& diagonal,
                                             const std::vector<double>& subdiagonal,
                                             bool want_vectors);

} // namespace tsmlab

#endif
