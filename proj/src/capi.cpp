#define TSMLAB_BUILDING
#include "tsmlab/tsmlab.h"

#include "tsmlab/hb_series.hpp"
#include "tsmlab/injectivity.hpp"
#include "tsmlab/laguerre.hpp"
#include "tsmlab/parallel.hpp"
#include "tsmlab/selftest.hpp"
#include "tsmlab/twisted_ops.hpp"
#include "tsmlab/zerosets.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct tsm_function {
    tsmlab::PlaneFunction f;
};

struct tsm_series {
    tsmlab::HBLSeries s;
};

namespace {

thread_local std::string g_last_error;

tsm_status map_code(tsmlab::ErrorCode c) {
    switch (c) {
    case tsmlab::ErrorCode::InvalidArgument:
        return TSM_ERR_INVALID_ARGUMENT;
    case tsmlab::ErrorCode::Parse:
        return TSM_ERR_PARSE;
    case tsmlab::ErrorCode::NonConvergence:
        return TSM_ERR_NON_CONVERGENCE;
    case tsmlab::ErrorCode::Unsupported:
        return TSM_ERR_UNSUPPORTED;
    case tsmlab::ErrorCode::Internal:
        break;
    }
    return TSM_ERR_INTERNAL;
}

template <class F>
tsm_status guarded(F&& body) {
    g_last_error.clear();
    try {
        body();
        return TSM_OK;
    } catch (const tsmlab::Error& e) {
        g_last_error = e.what();
        return map_code(e.code());
    } catch (const nlohmann::json::exception& e) {
        g_last_error = e.what();
        return TSM_ERR_PARSE;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return TSM_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return TSM_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return TSM_ERR_INTERNAL;
    }
}

void require(bool cond, const char* what) {
    if (!cond)
        tsmlab::fail(tsmlab::ErrorCode::InvalidArgument, what);
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.data(), s.size() + 1);
    return out;
}

void emit(char** out, const nlohmann::ordered_json& j) { *out = dup_string(j.dump()); }

tsmlab::Rational alpha_of(const char* alpha) {
    require(alpha != nullptr, "alpha is null");
    return tsmlab::parse_rational(alpha);
}

tsmlab::QuadratureSpec spec_of(const tsm_quadrature* q) {
    tsmlab::QuadratureSpec spec;
    if (!q)
        return spec;
    require(q->angular_points >= 4 && q->radial_points >= 4, "quadrature needs at least 4 points per axis");
    require(q->tolerance > 0.0, "quadrature tolerance must be positive");
    require(q->truncation_radius >= 0.0, "truncation radius must be nonnegative");
    spec.angular_points = q->angular_points;
    spec.radial_points = q->radial_points;
    spec.truncation_radius = q->truncation_radius;
    spec.tolerance = q->tolerance;
    spec.max_doublings = q->max_doublings;
    return spec;
}

nlohmann::ordered_json series_report_json(const tsmlab::HBLSeries& s, double C) {
    nlohmann::ordered_json j;
    j["series"] = s.to_json();
    j["norm"] = std::sqrt(tsmlab::series_norm_sq(s));
    nlohmann::ordered_json anti = nlohmann::ordered_json::array();
    for (const auto& [q, c] : s.c_anti) {
        const double bound = tsmlab::coefficient_bound(s.k, q, C);
        anti.push_back({{"q", q},
                        {"abs", std::abs(c)},
                        {"term_l2_norm", std::sqrt(tsmlab::term_l2_norm(s.k, q))},
                        {"bound", bound},
                        {"within_bound", std::abs(c) <= bound}});
    }
    j["C"] = C;
    j["anti_terms"] = std::move(anti);
    return j;
}

} // namespace

extern "C" {

const char* tsm_last_error(void) { return g_last_error.c_str(); }

const char* tsm_version(void) { return "1.0.0"; }

void tsm_free_string(char* s) { std::free(s); }

void tsm_set_threads(unsigned n) { tsmlab::set_worker_limit(n); }

void tsm_quadrature_default(tsm_quadrature* q) {
    if (!q)
        return;
    const tsmlab::QuadratureSpec spec;
    q->angular_points = spec.angular_points;
    q->radial_points = spec.radial_points;
    q->truncation_radius = spec.truncation_radius;
    q->tolerance = spec.tolerance;
    q->max_doublings = spec.max_doublings;
}

tsm_status tsm_laguerre_eval(unsigned k, const char* alpha, double x, double* out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        *out = tsmlab::laguerre_eval(tsmlab::laguerre_coefficients(k, alpha_of(alpha)), x);
    });
}

tsm_status tsm_laguerre_at_zero(unsigned k, const char* alpha, char** out_rational) {
    return guarded([&] {
        require(out_rational != nullptr, "output pointer is null");
        const auto a = alpha_of(alpha);
        *out_rational = dup_string(tsmlab::to_string(tsmlab::binomial(a + k, k)));
    });
}

tsm_status tsm_laguerre_zeros(unsigned k, const char* alpha, char** out_json) {
    return guarded([&] {
        require(out_json != nullptr, "output pointer is null");
        emit(out_json, nlohmann::ordered_json(tsmlab::laguerre_real_zeros(k, alpha_of(alpha))));
    });
}

tsm_status tsm_laguerre_common_zero_distance(unsigned k1, unsigned k2, const char* alpha, double* out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        *out = tsmlab::common_zero_report(k1, k2, alpha_of(alpha));
    });
}

tsm_status tsm_function_from_json(const char* json, tsm_function** out) {
    return guarded([&] {
        require(json != nullptr && out != nullptr, "null argument");
        *out = new tsm_function{tsmlab::PlaneFunction::from_json_text(json)};
    });
}

void tsm_function_free(tsm_function* f) { delete f; }

tsm_status tsm_function_to_json(const tsm_function* f, char** out_json) {
    return guarded([&] {
        require(f != nullptr && out_json != nullptr, "null argument");
        emit(out_json, f->f.to_json());
    });
}

tsm_status tsm_function_eval(const tsm_function* f, double re, double im, double* out_re, double* out_im) {
    return guarded([&] {
        require(f != nullptr && out_re != nullptr && out_im != nullptr, "null argument");
        const auto v = f->f({re, im});
        *out_re = v.real();
        *out_im = v.imag();
    });
}

tsm_status tsm_twisted_spherical_mean(const tsm_function* f, double re, double im, double r,
                                      const tsm_quadrature* q, char** out_json) {
    return guarded([&] {
        require(f != nullptr && out_json != nullptr, "null argument");
        require(r > 0.0, "radius must be positive");
        const tsmlab::Complex z(re, im);
        const auto direct = tsmlab::twisted_spherical_mean(f->f, z, r, spec_of(q));
        const auto spectral = tsmlab::spectral_twisted_spherical_mean(f->f, z, r);
        nlohmann::ordered_json j;
        j["center"] = tsmlab::complex_to_json(z);
        j["radius"] = r;
        j["value"] = tsmlab::complex_to_json(direct.value);
        j["error_estimate"] = direct.error_estimate;
        j["converged"] = direct.converged;
        j["angular_points"] = direct.angular_points;
        j["radial_points"] = direct.radial_points;
        j["spectral"] = tsmlab::complex_to_json(spectral);
        j["spectral_difference"] = std::abs(direct.value - spectral);
        emit(out_json, j);
    });
}

tsm_status tsm_project(const tsm_function* f, unsigned k, int q_max, const char* method,
                       tsm_series** out_series, char** out_report) {
    return guarded([&] {
        require(f != nullptr && method != nullptr, "null argument");
        const unsigned qm = q_max < 0 ? tsmlab::default_q_max(k) : static_cast<unsigned>(q_max);
        const std::string m = method;
        nlohmann::ordered_json j;
        j["method"] = m;
        tsmlab::HBLSeries series;
        if (m == "hecke-bochner") {
            auto p = tsmlab::project_to_series(f->f, k, qm);
            series = p.series;
            j["series"] = series.to_json();
            j["tail_norm"] = p.tail_norm;
            j["tail_bound"] = p.tail_bound;
            j["near_zero"] = p.near_zero;
        } else if (m == "direct") {
            auto p = tsmlab::project_direct(f->f, k, qm);
            series = p.series;
            j["series"] = series.to_json();
            j["max_error_estimate"] = p.max_error_estimate;
            j["converged"] = p.converged;
            j["samples"] = p.samples;
            if (!p.converged)
                g_last_error = "direct projection did not converge";
        } else {
            tsmlab::fail(tsmlab::ErrorCode::InvalidArgument, "method must be hecke-bochner or direct");
        }
        if (out_report)
            emit(out_report, j);
        if (out_series)
            *out_series = new tsm_series{std::move(series)};
    });
}

tsm_status tsm_series_from_json(const char* json, tsm_series** out) {
    return guarded([&] {
        require(json != nullptr && out != nullptr, "null argument");
        const auto j = nlohmann::json::parse(json);
        *out = new tsm_series{tsmlab::HBLSeries::from_json(j.contains("series") ? j["series"] : j)};
    });
}

void tsm_series_free(tsm_series* s) { delete s; }

tsm_status tsm_series_to_json(const tsm_series* s, char** out_json) {
    return guarded([&] {
        require(s != nullptr && out_json != nullptr, "null argument");
        emit(out_json, s->s.to_json());
    });
}

tsm_status tsm_series_eval(const tsm_series* s, double re, double im, double* out_re, double* out_im) {
    return guarded([&] {
        require(s != nullptr && out_re != nullptr && out_im != nullptr, "null argument");
        const auto v = tsmlab::eval_series(s->s, {re, im});
        *out_re = v.real();
        *out_im = v.imag();
    });
}

tsm_status tsm_series_report(const tsm_series* s, double C, char** out_json) {
    return guarded([&] {
        require(s != nullptr && out_json != nullptr, "null argument");
        require(C > 0.0, "C must be positive");
        emit(out_json, series_report_json(s->s, C));
    });
}

tsm_status tsm_recursion_family(double c_re, double c_im, unsigned q_max, tsm_series** out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = new tsm_series{tsmlab::recursion_family_Q1({c_re, c_im}, q_max)};
    });
}

tsm_status tsm_raabe(unsigned M, char** out_json) {
    return guarded([&] {
        require(out_json != nullptr, "null argument");
        require(M >= 1, "M must be positive");
        nlohmann::ordered_json j;
        j["M"] = M;
        j["ratio_terms"] = tsmlab::raabe_sequence(M);
        j["partial_sums"] = tsmlab::raabe_partial_sums(M);
        emit(out_json, j);
    });
}

tsm_status tsm_verify_theorem(const char* case_name, unsigned k, unsigned q_max, const char* mode,
                              unsigned lines, const double* angles, size_t n_angles, int* verified,
                              char** out_json) {
    return guarded([&] {
        require(case_name != nullptr && out_json != nullptr, "null argument");
        require(n_angles == 0 || angles != nullptr, "angles pointer is null");
        tsmlab::TheoremOptions opts;
        opts.mode = tsmlab::parse_solve_mode(mode ? mode : "exact");
        opts.lines = lines;
        opts.angles.assign(angles, angles + n_angles);
        const auto rep = tsmlab::verify_theorem(case_name, k, q_max, opts);
        if (verified)
            *verified = rep.verified() ? 1 : 0;
        emit(out_json, rep.to_json());
    });
}

tsm_status tsm_conjecture(unsigned N, unsigned k_from, unsigned k_to, char** out_json) {
    return guarded([&] {
        require(out_json != nullptr, "null argument");
        require(k_from <= k_to, "empty k range");
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (unsigned k = k_from; k <= k_to; ++k) {
            const auto part = tsmlab::coxeter_k_partition(k);
            nlohmann::ordered_json entry;
            entry["k"] = k;
            entry["partition"] = tsmlab::to_string(part.set);
            nlohmann::ordered_json mats = nlohmann::ordered_json::array();
            for (const auto& m : tsmlab::conjecture_matrices(N, k))
                mats.push_back(tsmlab::matrix_report_to_json(m));
            entry["matrices"] = std::move(mats);
            arr.push_back(std::move(entry));
        }
        nlohmann::ordered_json j;
        j["N"] = N;
        j["results"] = std::move(arr);
        if (N == 3 && k_from <= 4 && 4 <= k_to) {
            nlohmann::ordered_json l10 = nlohmann::ordered_json::array();
            for (const auto& m : tsmlab::lemma10_matrices())
                l10.push_back(tsmlab::matrix_report_to_json(m));
            j["lemma10"] = std::move(l10);
        }
        emit(out_json, j);
    });
}

tsm_status tsm_zero_set(const tsm_function* f, unsigned k_max, double xmin, double xmax, double ymin,
                        double ymax, double h, double tol, int* matches, char** out_json, char** out_csv) {
    return guarded([&] {
        require(f != nullptr && out_json != nullptr, "null argument");
        require(h > 0.0 && xmax >= xmin && ymax >= ymin, "invalid grid");
        auto rep = tsmlab::zero_set_grid(f->f, k_max, tsmlab::Grid::from_bounds(xmin, xmax, ymin, ymax, h), tol);
        tsmlab::attach_prediction(rep, f->f);
        if (matches)
            *matches = rep.has_prediction ? (rep.matches ? 1 : 0) : -1;
        emit(out_json, rep.to_json());
        if (out_csv)
            *out_csv = dup_string(rep.to_csv());
    });
}

tsm_status tsm_selftest(const unsigned* ids, size_t n_ids, int* all_passed, char** out_json) {
    return guarded([&] {
        require(out_json != nullptr, "null argument");
        require(n_ids == 0 || ids != nullptr, "ids pointer is null");
        const auto results = tsmlab::run_acceptance(std::vector<unsigned>(ids, ids + n_ids));
        bool ok = true;
        for (const auto& r : results)
            ok = ok && r.passed;
        if (all_passed)
            *all_passed = ok ? 1 : 0;
        nlohmann::ordered_json j;
        j["criteria"] = tsmlab::acceptance_to_json(results);
        j["all_passed"] = ok;
        emit(out_json, j);
    });
}

} // extern "C"
