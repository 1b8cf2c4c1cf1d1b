#include <doctest.h>

#include "tsmlab/laguerre.hpp"
#include "tsmlab/quadrature.hpp"

#include <cmath>

using namespace tsmlab;

namespace {
std::vector<Rational> R(std::initializer_list<const char*> xs) {
    std::vector<Rational> out;
    for (const char* s : xs)
        out.push_back(parse_rational(s));
    return out;
}
} // namespace

TEST_CASE("laguerre coefficients") {
    CHECK(laguerre_coefficients(0, Rational(7, 3)).coefficients() == R({"1"}));
    CHECK(laguerre_coefficients(1, 1).coefficients() == R({"2", "-1"}));
    CHECK(laguerre_coefficients(2, 2).coefficients() == R({"6", "-4", "1/2"}));
    // sympy assoc_laguerre(5, 3, x)
    CHECK(laguerre_coefficients(5, 3).coefficients() == R({"56", "-70", "28", "-14/3", "1/3", "-1/120"}));
}

TEST_CASE("laguerre evaluation") {
    CHECK(laguerre_eval(0, 0.3, 1.5) == doctest::Approx(1.0));
    CHECK(laguerre_eval(laguerre_coefficients(2, 2), 0.0) == doctest::Approx(6.0));
    CHECK(std::abs(laguerre_eval(1, 1.0, 2.0)) < 1e-15);
    // sympy: L_3^{1/2}(7/10) = -0.0746666...
    CHECK(laguerre_eval(laguerre_coefficients(3, Rational(1, 2)), 0.7) == doctest::Approx(-0.074666666666666667).epsilon(1e-14));
    const auto p = laguerre_coefficients(12, Rational(3));
    for (double xv : {0.1, 2.5, 17.0})
        CHECK(p(xv) == doctest::Approx(p.eval_horner(xv)).epsilon(1e-10));
    CHECK(p.eval_exact(Rational(1, 2)) == p.eval_exact(Rational(1, 2)));
}

TEST_CASE("values and derivatives at zero") {
    CHECK(value_at_zero(0, 9) == 1);
    CHECK(value_at_zero(2, 2) == 6);
    CHECK(value_at_zero(4, 2) == 15);
    CHECK(value_at_zero(10, 7) == 19448);
    CHECK(value_at_zero(-1, 3) == 0);
    CHECK(derivative_at_zero(2, 2) == -4);
    CHECK(derivative_at_zero(4, 2) == -20);
    CHECK(derivative_at_zero(0, Rational(5, 2)) == 0);
    CHECK(derivative_at_zero(7, Rational(3, 2)) == Rational(-51051, 1024));
}

TEST_CASE("real zeros") {
    CHECK(laguerre_real_zeros(0, 0).empty());
    auto z1 = laguerre_real_zeros(1, 0);
    REQUIRE(z1.size() == 1);
    CHECK(z1[0] == doctest::Approx(1.0));
    auto z2 = laguerre_real_zeros(2, 0);
    REQUIRE(z2.size() == 2);
    CHECK(z2[0] == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-14));
    CHECK(z2[1] == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-14));
    // sympy nroots of L_5^1
    const double ref[] = {0.61703085327827039571, 2.1129659585785241511, 4.6108331510175324137,
                          8.3990669712048421905, 14.260103065920830849};
    auto z5 = laguerre_real_zeros(5, 1);
    REQUIRE(z5.size() == 5);
    for (int i = 0; i < 5; ++i)
        CHECK(z5[i] == doctest::Approx(ref[i]).epsilon(1e-12));
}

TEST_CASE("common zero distance") {
    CHECK(common_zero_report(1, 1, 0) == doctest::Approx(0.0));
    CHECK(common_zero_report(1, 2, 0) == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-13));
    CHECK(common_zero_report(2, 3, 0) == doctest::Approx(0.1700118808434259).epsilon(1e-12));
}

TEST_CASE("weighted orthonormality of phi_k") {
    const auto rule = composite_gauss_legendre(40, 16, 0.0, 30.0);
    for (unsigned j = 0; j <= 6; ++j)
        for (unsigned k = 0; k <= 6; ++k) {
            double s = 0.0;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i)
                s += rule.weights[i] * laguerre_function(j, 0, rule.nodes[i]) *
                     laguerre_function(k, 0, rule.nodes[i]) * rule.nodes[i];
            CHECK(s == doctest::Approx(j == k ? 1.0 : 0.0).epsilon(1e-12));
        }
}

TEST_CASE("invalid order is rejected") {
    CHECK_THROWS_AS(laguerre_real_zeros(3, Rational(-2)), Error);
}
