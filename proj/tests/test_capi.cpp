#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tsmlab/tsmlab.h"

#include <json.hpp>

#include <cmath>
#include <string>

namespace {
std::string take(char* s) {
    std::string out = s ? s : "";
    tsm_free_string(s);
    return out;
}

const char* kGauss = R"({"terms":[{"p":0,"q":0,"radial":{"kind":"laguerre","order":0,"coeffs":[[1,0]]}}]})";
} // namespace

TEST_CASE("laguerre entry points") {
    double v = 0.0;
    CHECK(tsm_laguerre_eval(0, "1", 3.5, &v) == TSM_OK);
    CHECK(v == doctest::Approx(1.0));
    char* s = nullptr;
    REQUIRE(tsm_laguerre_at_zero(2, "2", &s) == TSM_OK);
    CHECK(take(s) == "6");
    REQUIRE(tsm_laguerre_zeros(2, "0", &s) == TSM_OK);
    const auto z = nlohmann::json::parse(take(s));
    CHECK(z[0].get<double>() == doctest::Approx(2.0 - std::sqrt(2.0)));
    CHECK(tsm_laguerre_eval(1, "x/y", 0.0, &v) == TSM_ERR_PARSE);
    CHECK(std::string(tsm_last_error()).size() > 0);
    CHECK(tsm_laguerre_eval(1, "0", 0.0, nullptr) == TSM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("function handles and the twisted spherical mean") {
    tsm_function* f = nullptr;
    REQUIRE(tsm_function_from_json(kGauss, &f) == TSM_OK);
    CHECK(std::string(tsm_last_error()).empty());
    double re = 0, im = 0;
    CHECK(tsm_function_eval(f, 0.0, 0.0, &re, &im) == TSM_OK);
    CHECK(re == doctest::Approx(1.0));
    char* s = nullptr;
    REQUIRE(tsm_twisted_spherical_mean(f, 0.0, 0.0, 2.0, nullptr, &s) == TSM_OK);
    const auto j = nlohmann::json::parse(take(s));
    CHECK(j["converged"] == true);
    CHECK(j["value"][0].get<double>() == doctest::Approx(std::exp(-1.0)));
    CHECK(j["spectral_difference"].get<double>() < 1e-12);
    CHECK(tsm_twisted_spherical_mean(f, 0.0, 0.0, -1.0, nullptr, &s) == TSM_ERR_INVALID_ARGUMENT);
    tsm_function_free(f);
    tsm_function* bad = nullptr;
    CHECK(tsm_function_from_json("{", &bad) == TSM_ERR_PARSE);
    CHECK(bad == nullptr);
}

TEST_CASE("projection and series handles") {
    tsm_function* f = nullptr;
    REQUIRE(tsm_function_from_json(kGauss, &f) == TSM_OK);
    tsm_series* s = nullptr;
    char* report = nullptr;
    REQUIRE(tsm_project(f, 0, 4, "hecke-bochner", &s, &report) == TSM_OK);
    const auto j = nlohmann::json::parse(take(report));
    CHECK(j["series"]["c_rad"][0].get<double>() == doctest::Approx(2.0 * M_PI));
    double re = 0, im = 0;
    CHECK(tsm_series_eval(s, 0.0, 0.0, &re, &im) == TSM_OK);
    CHECK(re == doctest::Approx(2.0 * M_PI));
    CHECK(tsm_project(f, 0, 4, "nope", nullptr, &report) == TSM_ERR_INVALID_ARGUMENT);
    tsm_series_free(s);
    tsm_function_free(f);

    tsm_series* fam = nullptr;
    REQUIRE(tsm_recursion_family(1.0, 0.0, 41, &fam) == TSM_OK);
    CHECK(tsm_series_eval(fam, 1.0, 0.0, &re, &im) == TSM_OK);
    CHECK(std::hypot(re, im) < 1e-8);
    char* js = nullptr;
    REQUIRE(tsm_series_to_json(fam, &js) == TSM_OK);
    tsm_series* back = nullptr;
    CHECK(tsm_series_from_json(js, &back) == TSM_OK);
    tsm_free_string(js);
    tsm_series_free(back);
    tsm_series_free(fam);
}

TEST_CASE("injectivity, conjecture and zero sets") {
    int verified = -1;
    char* s = nullptr;
    REQUIRE(tsm_verify_theorem("th2_k1", 1, 15, "exact", 0, nullptr, 0, &verified, &s) == TSM_OK);
    CHECK(verified == 1);
    CHECK(nlohmann::json::parse(take(s))["null_dim"] == 0);
    CHECK(tsm_verify_theorem("th1", 2, 8, "fuzzy", 0, nullptr, 0, &verified, &s) == TSM_ERR_INVALID_ARGUMENT);
    REQUIRE(tsm_conjecture(3, 5, 5, &s) == TSM_OK);
    const auto c = nlohmann::json::parse(take(s));
    bool found = false;
    for (const auto& m : c["results"][0]["matrices"])
        if (m["name"] == "banded" && m["variant"] == "printed") {
            CHECK(m["determinant"] == "8910");
            found = true;
        }
    CHECK(found);
    CHECK(tsm_conjecture(5, 1, 2, &s) == TSM_ERR_UNSUPPORTED);

    tsm_function* f = nullptr;
    REQUIRE(tsm_function_from_json(kGauss, &f) == TSM_OK);
    int matches = -2;
    char* csv = nullptr;
    REQUIRE(tsm_zero_set(f, 3, -1, 1, -1, 1, 0.5, 1e-6, &matches, &s, &csv) == TSM_OK);
    CHECK(matches == 1);
    CHECK(nlohmann::json::parse(take(s))["zero_count"] == 0);
    CHECK(take(csv).rfind("x,y,max_abs_Qk", 0) == 0);
    tsm_function_free(f);
}

TEST_CASE("selftest subset") {
    const unsigned ids[] = {9};
    int ok = 0;
    char* s = nullptr;
    REQUIRE(tsm_selftest(ids, 1, &ok, &s) == TSM_OK);
    CHECK(ok == 1);
    const auto j = nlohmann::json::parse(take(s));
    CHECK(j["criteria"].size() == 1);
}
