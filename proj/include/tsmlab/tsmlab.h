#ifndef TSMLAB_H
#define TSMLAB_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(TSMLAB_BUILDING)
#define TSM_API __attribute__((visibility("default")))
#else
#define TSM_API
#endif

typedef enum tsm_status {
    TSM_OK = 0,
    TSM_ERR_INVALID_ARGUMENT = 1,
    TSM_ERR_PARSE = 2,
    TSM_ERR_NON_CONVERGENCE = 3,
    TSM_ERR_UNSUPPORTED = 4,
    TSM_ERR_INTERNAL = 5
} tsm_status;

typedef struct tsm_function tsm_function;
typedef struct tsm_series tsm_series;

typedef struct tsm_quadrature {
    unsigned angular_points;
    unsigned radial_points;
    double truncation_radius; /* 0 selects the default */
    double tolerance;
    unsigned max_doublings;
} tsm_quadrature;

/* Message of the last failed call on this thread, "" if none. */
TSM_API const char* tsm_last_error(void);
TSM_API const char* tsm_version(void);
/* Strings returned through char** out parameters are released with this. */
TSM_API void tsm_free_string(char* s);
/* Caps internal worker threads; 0 restores the default. */
TSM_API void tsm_set_threads(unsigned n);

TSM_API void tsm_quadrature_default(tsm_quadrature* q);

/* Laguerre polynomials. alpha is a rational string such as "2" or "1/2". */
TSM_API tsm_status tsm_laguerre_eval(unsigned k, const char* alpha, double x, double* out);
TSM_API tsm_status tsm_laguerre_at_zero(unsigned k, const char* alpha, char** out_rational);
TSM_API tsm_status tsm_laguerre_zeros(unsigned k, const char* alpha, char** out_json);
TSM_API tsm_status tsm_laguerre_common_zero_distance(unsigned k1, unsigned k2, const char* alpha,
                                                     double* out);

/* Plane functions: {"terms": [{"p":..,"q":..,"radial":{...}}]}. */
TSM_API tsm_status tsm_function_from_json(const char* json, tsm_function** out);
TSM_API void tsm_function_free(tsm_function* f);
TSM_API tsm_status tsm_function_to_json(const tsm_function* f, char** out_json);
TSM_API tsm_status tsm_function_eval(const tsm_function* f, double re, double im, double* out_re,
                                     double* out_im);

/* {"value":[re,im],"error_estimate":..,"converged":..,"spectral":[re,im],"spectral_difference":..}.
   q may be NULL for the defaults. */
TSM_API tsm_status tsm_twisted_spherical_mean(const tsm_function* f, double re, double im, double r,
                                              const tsm_quadrature* q, char** out_json);

/* method: "hecke-bochner" or "direct". q_max < 0 selects the default. The
   report carries the series plus method specific diagnostics. */
TSM_API tsm_status tsm_project(const tsm_function* f, unsigned k, int q_max, const char* method,
                               tsm_series** out_series, char** out_report);

TSM_API tsm_status tsm_series_from_json(const char* json, tsm_series** out);
TSM_API void tsm_series_free(tsm_series* s);
TSM_API tsm_status tsm_series_to_json(const tsm_series* s, char** out_json);
TSM_API tsm_status tsm_series_eval(const tsm_series* s, double re, double im, double* out_re,
                                   double* out_im);
/* Norm, per-term L2 norms and coefficient bounds against C. */
TSM_API tsm_status tsm_series_report(const tsm_series* s, double C, char** out_json);
TSM_API tsm_status tsm_recursion_family(double c_re, double c_im, unsigned q_max, tsm_series** out);
/* {"ratio_terms":[...],"partial_sums":[...]} for m = 1..M and 0..M. */
TSM_API tsm_status tsm_raabe(unsigned M, char** out_json);

/* case: th2_k0, th2_k1, th1, lemma9, lemma10, th4, coxeter, angles.
   mode: "exact" or "float". lines is used by coxeter (0 selects 3); angles
   (n_angles entries) by the "angles" case. *verified receives 0 or 1. */
TSM_API tsm_status tsm_verify_theorem(const char* case_name, unsigned k, unsigned q_max, const char* mode,
                                      unsigned lines, const double* angles, size_t n_angles,
                                      int* verified, char** out_json);
TSM_API tsm_status tsm_conjecture(unsigned N, unsigned k_from, unsigned k_to, char** out_json);

/* Zero set on [xmin,xmax]x[ymin,ymax] with spacing h. out_csv may be NULL.
   *matches receives -1 without a prediction, else 0 or 1. */
TSM_API tsm_status tsm_zero_set(const tsm_function* f, unsigned k_max, double xmin, double xmax,
                                double ymin, double ymax, double h, double tol, int* matches,
                                char** out_json, char** out_csv);

/* ids/n_ids restrict the run (NULL, 0 for all). *all_passed receives 0 or 1. */
TSM_API tsm_status tsm_selftest(const unsigned* ids, size_t n_ids, int* all_passed, char** out_json);

#ifdef __cplusplus
}
#endif

#endif
