#include "tsmlab/zerosets.hpp"

#include "tsmlab/laguerre.hpp"
#include "tsmlab/parallel.hpp"
#include "tsmlab/twisted_ops.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace tsmlab {

namespace {

constexpr double kContributingRelative = 1e-12;
constexpr double kCommonZeroTol = 1e-9;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string sqrt_string(unsigned n) {
    const auto s = static_cast<unsigned>(std::lround(std::sqrt(static_cast<double>(n))));
    if (s * s == n)
        return std::to_string(s);
    return "sqrt(" + std::to_string(n) + ")";
}

std::string exact_radius(unsigned degree, unsigned order, std::size_t root_index) {
    if (degree == 1)
        return sqrt_string(2 * (order + 1));
    if (degree == 2) {
        const unsigned a = order + 2;
        const auto s = static_cast<unsigned>(std::lround(std::sqrt(static_cast<double>(a))));
        if (s * s == a)
            return sqrt_string(2 * (root_index == 0 ? a - s : a + s));
        const std::string as = std::to_string(a);
        return "sqrt(2*(" + as + (root_index == 0 ? " - " : " + ") + "sqrt(" + as + ")))";
    }
    const std::string idx = std::to_string(root_index + 1);
    return "sqrt(2*u" + idx + "), u" + idx + " = root " + idx + " of L_" + std::to_string(degree) +
           "^" + std::to_string(order);
}

double distance_to_prediction(Complex z, const PredictedZeroSet& p) {
    if (p.everything)
        return 0.0;
    double best = std::numeric_limits<double>::infinity();
    const double r = std::abs(z);
    if (p.origin)
        best = r;
    for (const auto& c : p.circles)
        best = std::min(best, std::abs(r - c.radius));
    return best;
}

} // namespace

ZeroSetReport zero_set_grid(const PlaneFunction& f, unsigned k_max, const Grid& grid, double tol) {
    if (!(tol > 0.0))
        fail(ErrorCode::InvalidArgument, "zero_set_grid: tolerance must be positive");
    if (grid.size() == 0)
        fail(ErrorCode::InvalidArgument, "zero_set_grid: empty grid");
    std::vector<std::vector<HeckeBochnerTerm>> projections(k_max + 1);
    for (unsigned k = 0; k <= k_max; ++k)
        for (const auto& term : f.terms()) {
            auto hb = hecke_bochner_projection(term, k);
            if (!hb.below_degree)
                projections[k].push_back(hb);
        }
    auto Q = [&](unsigned k, Complex z) {
        Complex acc{};
        for (const auto& t : projections[k])
            acc += t(z);
        return acc;
    };

    ZeroSetReport rep;
    rep.grid = grid;
    rep.k_max = k_max;
    rep.tolerance = tol;
    rep.max_abs.assign(grid.size(), 0.0);
    std::vector<char> zero(grid.size(), 0);
    const double h = grid.h;
    parallel_for(grid.ny, [&](std::size_t j) {
        for (std::size_t i = 0; i < grid.nx; ++i) {
            const Complex z = grid.point(i, j);
            bool all_zero = true;
            double worst = 0.0;
            for (unsigned k = 0; k <= k_max; ++k) {
                const Complex v = Q(k, z);
                const double mag = std::abs(v);
                worst = std::max(worst, mag);
                if (!all_zero || mag < tol)
                    continue;
                const Complex gx = (Q(k, z + h) - Q(k, z - h)) / (2.0 * h);
                const Complex gy = (Q(k, z + Complex(0.0, h)) - Q(k, z - Complex(0.0, h))) / (2.0 * h);
                // largest singular value of the real 2x2 Jacobian
                const double fro = std::norm(gx) + std::norm(gy);
                const double det = gx.real() * gy.imag() - gy.real() * gx.imag();
                const double grad = std::sqrt(0.5 * (fro + std::sqrt(std::max(0.0, fro * fro - 4.0 * det * det))));
                if (!(grad > 0.0) || mag / grad > 0.5 * h)
                    all_zero = false;
            }
            rep.max_abs[grid.index(i, j)] = worst;
            zero[grid.index(i, j)] = all_zero;
        }
    });
    rep.is_zero.assign(zero.begin(), zero.end());
    for (std::size_t j = 0; j < grid.ny; ++j)
        for (std::size_t i = 0; i < grid.nx; ++i)
            if (rep.is_zero[grid.index(i, j)])
                rep.zero_points.push_back(grid.point(i, j));
    return rep;
}

PredictedZeroSet type_function_zero_set(const TypeTerm& term, unsigned k_max) {
    PredictedZeroSet out;
    std::vector<Complex> scalars(k_max + 1);
    std::vector<bool> present(k_max + 1, false);
    double largest = 0.0;
    for (unsigned k = 0; k <= k_max; ++k) {
        const auto hb = hecke_bochner_projection(term, k);
        if (hb.below_degree)
            continue;
        present[k] = true;
        scalars[k] = hb.scalar;
        largest = std::max(largest, std::abs(hb.scalar));
    }
    for (unsigned k = 0; k <= k_max; ++k) {
        if (!present[k])
            continue;
        const double mag = std::abs(scalars[k]);
        if (largest > 0.0 && mag > kContributingRelative * largest)
            out.contributing_k.push_back(k);
        else if (mag > 0.0)
            out.near_zero_k.push_back(k);
    }
    if (out.contributing_k.empty()) {
        out.everything = true;
        return out;
    }
    const unsigned order = term.p() + term.q();
    out.origin = order >= 1;

    const unsigned first_degree = out.contributing_k.front() - term.p();
    const auto candidates = laguerre_real_zeros(first_degree, Rational(order));
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        bool common = true;
        for (std::size_t c = 1; c < out.contributing_k.size() && common; ++c) {
            const auto others = laguerre_real_zeros(out.contributing_k[c] - term.p(), Rational(order));
            common = std::any_of(others.begin(), others.end(),
                                 [&](double v) { return std::abs(v - candidates[i]) < kCommonZeroTol; });
        }
        if (common)
            out.circles.push_back({std::sqrt(2.0 * candidates[i]), exact_radius(first_degree, order, i)});
    }
    return out;
}

bool verify_prediction(const ZeroSetReport& report, const PredictedZeroSet& predicted, double& distance) {
    const Grid& g = report.grid;
    const double h = g.h;
    if (predicted.everything) {
        const auto missing = std::count(report.is_zero.begin(), report.is_zero.end(), false);
        distance = missing == 0 ? 0.0 : std::numeric_limits<double>::infinity();
        return missing == 0;
    }
    double forward = 0.0;
    for (const auto& z : report.zero_points)
        forward = std::max(forward, distance_to_prediction(z, predicted));

    double backward = 0.0;
    for (std::size_t j = 0; j < g.ny; ++j) {
        for (std::size_t i = 0; i < g.nx; ++i) {
            const Complex z = g.point(i, j);
            if (distance_to_prediction(z, predicted) > 0.5 * h)
                continue;
            double nearest = std::numeric_limits<double>::infinity();
            for (const auto& w : report.zero_points)
                nearest = std::min(nearest, std::abs(z - w));
            backward = std::max(backward, nearest);
        }
    }
    distance = std::max(forward, backward);
    const double slack = std::sqrt(2.0) * h * (1.0 + 1e-9);
    return forward <= slack && backward <= slack;
}

void attach_prediction(ZeroSetReport& report, const PlaneFunction& f) {
    if (f.terms().size() > 1) {
        report.has_prediction = false;
        return;
    }
    if (f.empty()) {
        report.predicted = PredictedZeroSet{};
        report.predicted.everything = true;
    } else {
        report.predicted = type_function_zero_set(f.terms().front(), report.k_max);
    }
    report.has_prediction = true;
    report.matches = verify_prediction(report, report.predicted, report.distance);
}

nlohmann::ordered_json predicted_to_json(const PredictedZeroSet& p) {
    nlohmann::ordered_json j;
    j["everything"] = p.everything;
    j["origin"] = p.origin;
    nlohmann::ordered_json circles = nlohmann::ordered_json::array();
    for (const auto& c : p.circles)
        circles.push_back({{"radius", c.radius}, {"exact", c.exact}});
    j["circles"] = std::move(circles);
    j["contributing_k"] = p.contributing_k;
    j["near_zero_k"] = p.near_zero_k;
    return j;
}

nlohmann::ordered_json ZeroSetReport::to_json() const {
    nlohmann::ordered_json j;
    j["grid"] = {{"xmin", grid.xmin()}, {"xmax", grid.xmax()}, {"ymin", grid.ymin()},
                 {"ymax", grid.ymax()}, {"h", grid.h},       {"nx", grid.nx},
                 {"ny", grid.ny}};
    j["k_max"] = k_max;
    j["tolerance"] = tolerance;
    j["zero_count"] = zero_points.size();
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (const auto& z : zero_points)
        pts.push_back({z.real(), z.imag()});
    j["zero_points"] = std::move(pts);
    if (has_prediction) {
        j["predicted"] = predicted_to_json(predicted);
        j["distance"] = std::isfinite(distance) ? nlohmann::ordered_json(distance) : nlohmann::ordered_json(nullptr);
        j["matches"] = matches;
    } else {
        j["predicted"] = nullptr;
    }
    return j;
}

std::string ZeroSetReport::to_csv() const {
    std::string out = "x,y,max_abs_Qk\n";
    out.reserve(out.size() + grid.size() * 64);
    for (std::size_t j = 0; j < grid.ny; ++j)
        for (std::size_t i = 0; i < grid.nx; ++i) {
            out += fmt(grid.x(i));
            out += ',';
            out += fmt(grid.y(j));
            out += ',';
            out += fmt(max_abs[grid.index(i, j)]);
            out += '\n';
        }
    return out;
}

} // namespace tsmlab
