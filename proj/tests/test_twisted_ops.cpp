#include <doctest.h>

#include "tsmlab/hb_series.hpp"
#include "tsmlab/laguerre.hpp"
#include "tsmlab/twisted_ops.hpp"

#include <cmath>

using namespace tsmlab;

namespace {
PlaneFunction single(unsigned p, unsigned q, RadialProfile a) { return PlaneFunction({TypeTerm(p, q, std::move(a))}); }

// (1 + r^2/3) e^{-r^2/4}
RadialProfile test_profile() { return RadialProfile::gaussian_poly({Rational(1), Rational(1, 3)}); }

bool near(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }
} // namespace

TEST_CASE("plane function evaluation") {
    CHECK(near(single(0, 0, RadialProfile::laguerre_function(0, 0))(0.0), 1.0, 1e-15));
    CHECK(near(single(1, 0, RadialProfile::laguerre_function(0, 1))(0.0), 0.0, 1e-15));
    const Complex z(1.0, 1.0);
    CHECK(near(single(0, 2, RadialProfile::laguerre_function(0, 2))(z), Complex(0.0, -2.0) * std::exp(-0.5), 1e-14));
}

TEST_CASE("plane function json round trip") {
    const PlaneFunction f({TypeTerm(1, 0, RadialProfile::laguerre(1, {Complex(1, 0), Complex(0.5, -2)})),
                           TypeTerm(0, 3, RadialProfile::gaussian_poly({Rational(1), Rational(-2, 7)}, Complex(0, 1)))});
    const auto g = PlaneFunction::from_json_text(f.to_json().dump());
    for (Complex z : {Complex(0.3, 0.1), Complex(-1.2, 2.0)})
        CHECK(near(f(z), g(z), 1e-15));
    CHECK_THROWS_AS(PlaneFunction::from_json_text("{\"terms\":[{\"p\":1,\"q\":1}]}"), Error);
    CHECK_THROWS_AS(PlaneFunction::from_json_text("not json"), Error);
}

TEST_CASE("twisted spherical mean") {
    const auto gauss = single(0, 0, RadialProfile::laguerre_function(0, 0));
    for (double r : {0.5, 1.0, 2.5}) {
        const auto res = twisted_spherical_mean(gauss, 0.0, r);
        CHECK(res.converged);
        CHECK(near(res.value, std::exp(-r * r / 4.0), 1e-12));
    }
    CHECK(near(twisted_spherical_mean(single(1, 0, RadialProfile::laguerre_function(0, 1)), 0.0, 1.3).value, 0.0, 1e-14));
    // scipy quad of the defining circle integral
    const auto phi1 = single(0, 0, RadialProfile::laguerre_function(1, 0));
    CHECK(near(twisted_spherical_mean(phi1, 1.0, 1.0).value, 0.1516326649281583, 1e-12));
    const PlaneFunction mixed({TypeTerm(1, 0, RadialProfile::laguerre_function(0, 1)), TypeTerm(0, 2, test_profile())});
    const Complex z(0.3, -0.2);
    const Complex ref(0.16442463195363968, 0.1346652561082148);
    CHECK(near(twisted_spherical_mean(mixed, z, 1.1).value, ref, 1e-12));
    CHECK(near(spectral_twisted_spherical_mean(mixed, z, 1.1), ref, 1e-12));
}

TEST_CASE("direct twisted convolution against an independent quadrature") {
    // scipy dblquad of int f(z-w) phi_k(w) e^{(i/2) Im(z conj w)} dA
    const auto f = single(1, 0, RadialProfile::laguerre_function(0, 1));
    const auto q = twisted_convolve_phi(f, 1, 2.0);
    CHECK(q.converged);
    CHECK(near(q.value, 4.622909399163686, 1e-9));
    const auto g = single(0, 2, test_profile());
    CHECK(near(twisted_convolve_phi(g, 1, Complex(0.7, -0.4)).value, Complex(-3.1430658663791124, -5.3336875308251726), 1e-9));
    CHECK(near(twisted_convolve_phi(PlaneFunction{}, 3, Complex(0.2, 0.2)).value, 0.0, 1e-15));
    CHECK(near(twisted_convolve_phi(single(2, 0, test_profile()), 1, Complex(0.5, 0.5)).value, 0.0, 1e-10));
}

TEST_CASE("hecke-bochner closed form") {
    CHECK(calibrate_hecke_bochner_constant() == doctest::Approx(kHeckeBochnerConstant).epsilon(1e-10));
    CHECK(hecke_bochner_projection(TypeTerm(2, 0, test_profile()), 1).below_degree);
    CHECK(std::abs(hecke_bochner_projection(TypeTerm(1, 0, RadialProfile::laguerre_function(0, 1)), 2).scalar) < 1e-13);
    const TypeTerm radial2(0, 0, RadialProfile::laguerre_function(2, 0));
    CHECK(std::abs(hecke_bochner_projection(radial2, 2).scalar) == doctest::Approx(2.0 * kPi));
    for (unsigned k : {0u, 1u, 3u, 4u})
        CHECK(std::abs(hecke_bochner_projection(radial2, k).scalar) < 1e-13);
    // mpmath pairings of (1 + r^2/3) e^{-r^2/4} against phi_{k-p}^{p+q}
    const TypeTerm za(1, 0, test_profile());
    CHECK(hecke_bochner_projection(za, 1).scalar.real() == doctest::Approx(14.66076571675236847).epsilon(1e-13));
    CHECK(hecke_bochner_projection(za, 2).scalar.real() == doctest::Approx(-4.188790204786390953).epsilon(1e-13));
    CHECK(std::abs(hecke_bochner_projection(za, 3).scalar) < 1e-13);
    const TypeTerm zb2(0, 2, test_profile());
    CHECK(hecke_bochner_projection(zb2, 0).scalar.real() == doctest::Approx(18.84955592153875935).epsilon(1e-13));
    CHECK(hecke_bochner_projection(zb2, 1).scalar.real() == doctest::Approx(-4.188790204786391047).epsilon(1e-13));
    // closed form equals direct quadrature
    const auto hb = hecke_bochner_projection(TypeTerm(1, 0, RadialProfile::laguerre_function(0, 1)), 1);
    CHECK(near(hb(2.0), 4.622909399163686, 1e-9));
}

TEST_CASE("twisted translation") {
    const auto f = single(0, 1, test_profile()).as_callable();
    const auto id = twisted_translate(f, 0.0);
    CHECK(near(id(Complex(0.4, -1.0)), f(Complex(0.4, -1.0)), 0.0));
    const Complex eta(0.5, -0.25), xi(1.0, 0.75);
    const double phase = 0.5 * (eta.imag() * xi.real() - eta.real() * xi.imag());
    CHECK(near(twisted_translate(f, eta)(xi), f(xi - eta) * std::polar(1.0, phase), 1e-15));
    const auto grid = Grid::from_bounds(-1, 1, -1, 1, 0.5);
    const auto g = twisted_translate(f, eta, grid);
    REQUIRE(g.values.size() == 25);
    CHECK(near(g.at(4, 4), twisted_translate(f, eta)(Complex(1, 1)), 1e-15));
}

TEST_CASE("special hermite operator") {
    const auto grid = Grid::from_bounds(-4, 4, -4, 4, 0.02);
    for (unsigned k : {0u, 3u}) {
        const auto g = sample_on_grid([k](Complex z) { return Complex(laguerre_function(k, 0, std::abs(z))); }, grid);
        const auto out = special_hermite_apply(g);
        CHECK(out.grid.nx == grid.nx - 2);
        double worst = 0.0;
        for (std::size_t j = 0; j < out.grid.ny; ++j)
            for (std::size_t i = 0; i < out.grid.nx; ++i) {
                const double r = std::abs(out.grid.point(i, j));
                worst = std::max(worst, std::abs(out.at(i, j) - (2.0 * k + 1) * laguerre_function(k, 0, r)));
            }
        CHECK(worst < 2e-3);
    }
    const auto zero = sample_on_grid([](Complex) { return Complex{}; }, Grid::from_bounds(-1, 1, -1, 1, 0.1));
    for (const auto& v : special_hermite_apply(zero).values)
        CHECK(v == Complex{});
}
