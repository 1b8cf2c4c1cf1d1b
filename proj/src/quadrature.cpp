#include "tsmlab/quadrature.hpp"

#include "tsmlab/common.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace tsmlab {

QuadratureRule gauss_legendre(unsigned n, double a, double b) {
    if (n == 0)
        fail(ErrorCode::InvalidArgument, "gauss_legendre: n must be positive");
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (b + a);
    const unsigned m = (n + 1) / 2;
    for (unsigned i = 0; i < m; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (unsigned j = 2; j <= n; ++j) {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        // Recompute the derivative at the converged node.
        double p0 = 1.0, p1 = x;
        for (unsigned j = 2; j <= n; ++j) {
            double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = mid - half * x;
        rule.nodes[n - 1 - i] = mid + half * x;
        rule.weights[i] = half * w;
        rule.weights[n - 1 - i] = half * w;
    }
    if (n % 2 == 1) {
        // Centre node is exactly the midpoint.
        rule.nodes[n / 2] = mid;
    }
    return rule;
}

QuadratureRule composite_gauss_legendre(unsigned panels, unsigned order, double a, double b) {
    if (panels == 0)
        fail(ErrorCode::InvalidArgument, "composite_gauss_legendre: panels must be positive");
    QuadratureRule rule;
    rule.nodes.reserve(static_cast<std::size_t>(panels) * order);
    rule.weights.reserve(static_cast<std::size_t>(panels) * order);
    const double width = (b - a) / panels;
    for (unsigned p = 0; p < panels; ++p) {
        auto panel = gauss_legendre(order, a + p * width, a + (p + 1) * width);
        rule.nodes.insert(rule.nodes.end(), panel.nodes.begin(), panel.nodes.end());
        rule.weights.insert(rule.weights.end(), panel.weights.begin(), panel.weights.end());
    }
    return rule;
}

TridiagonalEigen symmetric_tridiagonal_eigen(const std::vector<double>& diagonal,
                                             const std::vector<double>& subdiagonal,
                                             bool want_vectors) {
    const auto n = static_cast<Eigen::Index>(diagonal.size());
    TridiagonalEigen out;
    if (n == 0)
        return out;
    Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(diagonal.data(), n);
    Eigen::VectorXd e(n > 1 ? n - 1 : 0);
    for (Eigen::Index i = 0; i + 1 < n; ++i)
        e[i] = subdiagonal[static_cast<std::size_t>(i)];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(d, e, want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        fail(ErrorCode::NonConvergence, "tridiagonal eigenvalue solve did not converge");
    out.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    if (want_vectors) {
        out.first_components.resize(static_cast<std::size_t>(n));
        for (Eigen::Index j = 0; j < n; ++j)
            out.first_components[static_cast<std::size_t>(j)] = solver.eigenvectors()(0, j);
    }
    return out;
}

QuadratureRule gauss_laguerre(unsigned n, double alpha) {
    if (n == 0)
        fail(ErrorCode::InvalidArgument, "gauss_laguerre: n must be positive");
    if (!(alpha > -1.0))
        fail(ErrorCode::InvalidArgument, "gauss_laguerre: alpha must exceed -1");
    std::vector<double> diag(n), sub(n > 0 ? n - 1 : 0);
    for (unsigned j = 0; j < n; ++j)
        diag[j] = 2.0 * j + alpha + 1.0;
    for (unsigned j = 1; j < n; ++j)
        sub[j - 1] = std::sqrt(j * (j + alpha));
    auto eig = symmetric_tridiagonal_eigen(diag, sub, true);
    QuadratureRule rule;
    rule.nodes = eig.values;
    rule.weights.resize(n);
    const double mass = std::tgamma(alpha + 1.0);
    for (unsigned j = 0; j < n; ++j)
        rule.weights[j] = mass * eig.first_components[j] * eig.first_components[j];
    return rule;
}

} // namespace tsmlab
