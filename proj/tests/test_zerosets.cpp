#include <doctest.h>

#include "tsmlab/zerosets.hpp"

#include <cmath>

using namespace tsmlab;

namespace {
PlaneFunction single(unsigned p, unsigned q, RadialProfile a) { return PlaneFunction({TypeTerm(p, q, std::move(a))}); }
Grid window(double h = 0.05) { return Grid::from_bounds(-4, 4, -4, 4, h); }
} // namespace

TEST_CASE("computed zero sets") {
    const auto gauss = zero_set_grid(single(0, 0, RadialProfile::laguerre_function(0, 0)), 6, window(), 1e-6);
    CHECK(gauss.zero_points.empty());
    const auto zphi = zero_set_grid(single(1, 0, RadialProfile::laguerre_function(0, 1)), 6, window(), 1e-6);
    REQUIRE(zphi.zero_points.size() == 1);
    CHECK(std::abs(zphi.zero_points[0]) < 1e-12);
    const auto all = zero_set_grid(PlaneFunction{}, 3, Grid::from_bounds(-1, 1, -1, 1, 0.1), 1e-6);
    CHECK(all.zero_points.size() == all.grid.size());
    CHECK_THROWS_AS(zero_set_grid(PlaneFunction{}, 3, window(), 0.0), Error);
}

TEST_CASE("predicted zero sets") {
    const auto p = type_function_zero_set(TypeTerm(0, 0, RadialProfile::laguerre_function(2, 0)), 8);
    CHECK(p.contributing_k == std::vector<unsigned>{2});
    CHECK_FALSE(p.origin);
    REQUIRE(p.circles.size() == 2);
    CHECK(p.circles[0].radius == doctest::Approx(std::sqrt(2.0 * (2.0 - std::sqrt(2.0)))));
    CHECK(p.circles[1].radius == doctest::Approx(std::sqrt(2.0 * (2.0 + std::sqrt(2.0)))));
    CHECK(p.circles[0].exact == "sqrt(2*(2 - sqrt(2)))");
    const auto q = type_function_zero_set(TypeTerm(1, 0, RadialProfile::laguerre_function(0, 1)), 8);
    CHECK(q.origin);
    CHECK(q.circles.empty());
    // phi_1^0 + phi_2^0 contributes at k = 1 and k = 2, whose Laguerre zeros never meet
    const auto two = type_function_zero_set(TypeTerm(0, 0, RadialProfile::laguerre(0, {0.0, 1.0, 1.0})), 6);
    CHECK(two.contributing_k == std::vector<unsigned>{1, 2});
    CHECK(two.circles.empty());
}

TEST_CASE("prediction matches the grid") {
    const auto f = single(0, 0, RadialProfile::laguerre_function(2, 0));
    auto rep = zero_set_grid(f, 8, window(), 1e-6);
    attach_prediction(rep, f);
    CHECK(rep.has_prediction);
    CHECK(rep.matches);
    CHECK(rep.distance <= 0.05);
    const std::pair<unsigned, unsigned> types[] = {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}, {0, 2}, {0, 3}};
    for (const auto& [p, q] : types)
        for (unsigned j = 0; j <= 3; ++j) {
            const auto g = single(p, q, RadialProfile::laguerre_function(j, p + q));
            auto r = zero_set_grid(g, 8, window(), 1e-6);
            attach_prediction(r, g);
            CHECK(r.matches);
        }
    auto perturbed = rep.predicted;
    perturbed.circles[1].radius += 0.3;
    double d = 0.0;
    CHECK_FALSE(verify_prediction(rep, perturbed, d));
    const auto gauss = single(0, 0, RadialProfile::laguerre_function(0, 0));
    auto empty = zero_set_grid(gauss, 4, window(), 1e-6);
    CHECK(verify_prediction(empty, PredictedZeroSet{}, d));
    CHECK(d == 0.0);
}

TEST_CASE("zero set shrinks as k_max grows") {
    const PlaneFunction f({TypeTerm(0, 0, RadialProfile::laguerre(0, {0.0, 0.0, 1.0, 0.5})),
                           TypeTerm(0, 1, RadialProfile::laguerre_function(1, 1))});
    const auto small = zero_set_grid(f, 2, window(0.1), 1e-6);
    const auto large = zero_set_grid(f, 5, window(0.1), 1e-6);
    for (std::size_t i = 0; i < small.is_zero.size(); ++i)
        if (large.is_zero[i])
            CHECK(small.is_zero[i]);
}

TEST_CASE("radial zero sets are symmetric under quarter turns") {
    const auto rep = zero_set_grid(single(0, 0, RadialProfile::laguerre_function(3, 0)), 6, window(), 1e-6);
    const auto& g = rep.grid;
    for (std::size_t j = 0; j < g.ny; ++j)
        for (std::size_t i = 0; i < g.nx; ++i)
            CHECK(rep.is_zero[g.index(i, j)] == rep.is_zero[g.index(g.ny - 1 - j, i)]);
}

TEST_CASE("report output") {
    const auto f = single(0, 0, RadialProfile::laguerre_function(1, 0));
    auto rep = zero_set_grid(f, 3, Grid::from_bounds(-2, 2, -2, 2, 0.5), 1e-6);
    attach_prediction(rep, f);
    const auto csv = rep.to_csv();
    CHECK(csv.rfind("x,y,max_abs_Qk\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 82);
    const auto j = rep.to_json();
    CHECK(j["predicted"]["circles"][0]["exact"] == "sqrt(2)");
    CHECK(j["k_max"] == 3);
}
