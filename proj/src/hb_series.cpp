#include "tsmlab/hb_series.hpp"

#include "tsmlab/laguerre.hpp"
#include "tsmlab/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace tsmlab {

namespace {

Complex ipow(Complex z, unsigned n) {
    Complex acc{1.0, 0.0};
    for (unsigned i = 0; i < n; ++i)
        acc *= z;
    return acc;
}

constexpr double kNearZeroRelative = 1e-12;

nlohmann::ordered_json coeff_map_to_json(const std::map<unsigned, Complex>& m) {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto& [idx, c] : m)
        out[std::to_string(idx)] = complex_to_json(c);
    return out;
}

std::map<unsigned, Complex> coeff_map_from_json(const nlohmann::json& j, const char* name) {
    std::map<unsigned, Complex> out;
    if (!j.contains(name))
        return out;
    const auto& obj = j.at(name);
    if (!obj.is_object())
        fail(ErrorCode::Parse, std::string("series: '") + name + "' must be an object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        std::size_t used = 0;
        unsigned long idx = 0;
        try {
            idx = std::stoul(it.key(), &used);
        } catch (...) {
            used = 0;
        }
        if (used != it.key().size() || idx == 0)
            fail(ErrorCode::Parse, std::string("series: bad index '") + it.key() + "' in " + name);
        out[static_cast<unsigned>(idx)] = complex_from_json(it.value());
    }
    return out;
}

} // namespace

Complex HBLSeries::hol(unsigned p) const {
    auto it = c_hol.find(p);
    return it == c_hol.end() ? Complex{} : it->second;
}

Complex HBLSeries::anti(unsigned q) const {
    auto it = c_anti.find(q);
    return it == c_anti.end() ? Complex{} : it->second;
}

Complex HBLSeries::operator()(Complex z) const {
    const double r = std::abs(z);
    const double u = 0.5 * r * r;
    const double gauss = std::exp(-0.5 * u);
    Complex poly = c_rad * laguerre_eval(k, 0.0, u);
    for (const auto& [p, c] : c_hol) {
        if (p <= k && c != Complex{})
            poly += c * ipow(z, p) * laguerre_eval(k - p, static_cast<double>(p), u);
    }
    const Complex zb = std::conj(z);
    for (const auto& [q, c] : c_anti) {
        if (c != Complex{})
            poly += c * ipow(zb, q) * laguerre_eval(k, static_cast<double>(q), u);
    }
    return poly * gauss;
}

bool HBLSeries::is_zero() const {
    if (c_rad != Complex{})
        return false;
    for (const auto& kv : c_hol)
        if (kv.second != Complex{})
            return false;
    for (const auto& kv : c_anti)
        if (kv.second != Complex{})
            return false;
    return true;
}

nlohmann::ordered_json HBLSeries::to_json() const {
    nlohmann::ordered_json j;
    j["k"] = k;
    j["c_rad"] = complex_to_json(c_rad);
    j["c_hol"] = coeff_map_to_json(c_hol);
    j["c_anti"] = coeff_map_to_json(c_anti);
    j["q_max"] = q_max;
    return j;
}

HBLSeries HBLSeries::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("k"))
        fail(ErrorCode::Parse, "series: expected an object with key 'k'");
    HBLSeries s;
    try {
        s.k = j.at("k").get<unsigned>();
        s.c_rad = j.contains("c_rad") ? complex_from_json(j.at("c_rad")) : Complex{};
        s.c_hol = coeff_map_from_json(j, "c_hol");
        s.c_anti = coeff_map_from_json(j, "c_anti");
        unsigned largest = 0;
        for (const auto& kv : s.c_anti)
            largest = std::max(largest, kv.first);
        s.q_max = j.contains("q_max") ? j.at("q_max").get<unsigned>() : largest;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::Parse, std::string("series: ") + e.what());
    }
    for (const auto& kv : s.c_hol)
        if (kv.first > s.k)
            fail(ErrorCode::InvalidArgument, "series: c_hol index exceeds k");
    for (const auto& kv : s.c_anti)
        if (kv.first > s.q_max)
            fail(ErrorCode::InvalidArgument, "series: c_anti index exceeds q_max");
    return s;
}

Complex eval_series(const HBLSeries& s, Complex z) { return s(z); }

double term_l2_norm(unsigned k, unsigned q) {
    return 2.0 * kPi * std::exp(q * std::log(2.0) + log_factorial(k + q) - log_factorial(k));
}

double hol_term_l2_norm(unsigned k, unsigned p) {
    if (p > k)
        fail(ErrorCode::InvalidArgument, "hol_term_l2_norm: p exceeds k");
    return 2.0 * kPi * std::exp(p * std::log(2.0) + log_factorial(k) - log_factorial(k - p));
}

double series_norm_sq(const HBLSeries& s) {
    double acc = std::norm(s.c_rad) * term_l2_norm(s.k, 0);
    for (const auto& [p, c] : s.c_hol)
        acc += std::norm(c) * hol_term_l2_norm(s.k, p);
    for (const auto& [q, c] : s.c_anti)
        acc += std::norm(c) * term_l2_norm(s.k, q);
    return acc;
}

double coefficient_bound(unsigned k, unsigned q, double C) {
    const double log_ratio = log_factorial(k) - (q + 1) * std::log(2.0) - log_factorial(k + q);
    return C * std::exp(0.5 * log_ratio);
}

Projection project_to_series(const PlaneFunction& f, unsigned k, unsigned q_max) {
    if (q_max < k)
        fail(ErrorCode::InvalidArgument, "project_to_series: q_max must be at least k");
    Projection out;
    out.series.k = k;
    out.series.q_max = q_max;

    struct Entry {
        std::string label;
        Complex scalar;
    };
    std::vector<Entry> present;
    double tail_sq = 0.0;
    for (const auto& term : f.terms()) {
        const auto hb = hecke_bochner_projection(term, k);
        if (hb.below_degree)
            continue;
        if (term.p() == 0 && term.q() == 0) {
            out.series.c_rad += hb.scalar;
            present.push_back({"rad", hb.scalar});
        } else if (term.q() == 0) {
            out.series.c_hol[term.p()] += hb.scalar;
            present.push_back({"hol(" + std::to_string(term.p()) + ")", hb.scalar});
        } else if (term.q() <= q_max) {
            out.series.c_anti[term.q()] += hb.scalar;
            present.push_back({"anti(" + std::to_string(term.q()) + ")", hb.scalar});
        } else {
            const double norm = std::sqrt(term_l2_norm(k, term.q()));
            tail_sq += std::norm(hb.scalar) * norm * norm;
            out.tail_bound += std::abs(hb.scalar) * norm;
        }
    }
    out.tail_norm = std::sqrt(tail_sq);

    double largest = 0.0;
    for (const auto& e : present)
        largest = std::max(largest, std::abs(e.scalar));
    for (const auto& e : present)
        if (std::abs(e.scalar) <= kNearZeroRelative * std::max(1.0, largest))
            out.near_zero.push_back(e.label);
    return out;
}

DirectProjection project_direct(const PlaneFunction& f, unsigned k, unsigned q_max,
                                const DirectProjectionOptions& opts) {
    if (q_max < k)
        fail(ErrorCode::InvalidArgument, "project_direct: q_max must be at least k");
    if (!(opts.radius > 0.0))
        fail(ErrorCode::InvalidArgument, "project_direct: radius must be positive");
    const unsigned m = 2 * (q_max + k) + 2;
    const double r0 = opts.radius;
    const auto fc = f.as_callable();

    std::vector<QuadratureResult> samples(m);
    parallel_for(m, [&](std::size_t j) {
        const Complex z = std::polar(r0, 2.0 * kPi * static_cast<double>(j) / m);
        samples[j] = twisted_convolve_phi_all(fc, k, z, opts.quad)[k];
    });

    DirectProjection out;
    out.samples = m;
    for (const auto& s : samples) {
        out.max_error_estimate = std::max(out.max_error_estimate, s.error_estimate);
        out.converged = out.converged && s.converged;
    }
    auto mode = [&](int n) {
        Complex acc{};
        for (unsigned j = 0; j < m; ++j)
            acc += samples[j].value * std::polar(1.0, -2.0 * kPi * n * static_cast<double>(j) / m);
        return acc / static_cast<double>(m);
    };
    const double u = 0.5 * r0 * r0;
    const double gauss = std::exp(-0.5 * u);
    out.series.k = k;
    out.series.q_max = q_max;
    out.series.c_rad = mode(0) / (laguerre_eval(k, 0.0, u) * gauss);
    for (unsigned p = 1; p <= k; ++p) {
        const double basis = std::pow(r0, p) * laguerre_eval(k - p, static_cast<double>(p), u) * gauss;
        out.series.c_hol[p] = mode(static_cast<int>(p)) / basis;
    }
    for (unsigned q = 1; q <= q_max; ++q) {
        const double basis = std::pow(r0, q) * laguerre_eval(k, static_cast<double>(q), u) * gauss;
        out.series.c_anti[q] = mode(-static_cast<int>(q)) / basis;
    }
    return out;
}

HBLSeries recursion_family_Q1(Complex c, unsigned q_max) {
    HBLSeries s;
    s.k = 1;
    s.q_max = std::max(1u, q_max);
    s.c_hol[1] = -2.0 * c;
    for (unsigned m = 0; 2 * m + 1 <= s.q_max; ++m) {
        const double log_den = 2.0 * m * std::log(2.0) + log_factorial(m + 1);
        s.c_anti[2 * m + 1] = c * std::exp(-log_den);
    }
    return s;
}

double raabe_log_term(unsigned m) {
    return log_factorial(2 * m + 2) - 2.0 * m * std::log(2.0) - 2.0 * log_factorial(m + 1);
}

std::vector<double> raabe_sequence(unsigned M) {
    if (M < 2)
        fail(ErrorCode::InvalidArgument, "raabe_sequence: M must be at least 2");
    std::vector<double> out;
    out.reserve(M);
    // b_m / b_{m+1} = 4 (m+2)^2 / ((2m+4)(2m+3)), so the difference to 1 is formed in integers.
    for (unsigned m = 1; m <= M; ++m) {
        const long double a = 4.0L * (m + 2.0L) * (m + 2.0L);
        const long double b = (2.0L * m + 4.0L) * (2.0L * m + 3.0L);
        out.push_back(static_cast<double>(m * ((a - b) / b)));
    }
    return out;
}

std::vector<double> raabe_partial_sums(unsigned M) {
    std::vector<double> out;
    out.reserve(M + 1);
    double acc = 0.0;
    for (unsigned m = 0; m <= M; ++m) {
        acc += std::exp(raabe_log_term(m));
        out.push_back(acc);
    }
    return out;
}

void ZZbarPolynomial::add(unsigned a, unsigned b, Complex c) {
    if (c == Complex{})
        return;
    auto& slot = terms_[{a, b}];
    slot += c;
    if (slot == Complex{})
        terms_.erase({a, b});
}

Complex ZZbarPolynomial::coeff(unsigned a, unsigned b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Complex{} : it->second;
}

ZZbarPolynomial ZZbarPolynomial::dz() const {
    ZZbarPolynomial out;
    for (const auto& [ab, c] : terms_)
        if (ab.first > 0)
            out.add(ab.first - 1, ab.second, c * static_cast<double>(ab.first));
    return out;
}

ZZbarPolynomial series_polynomial(const HBLSeries& s) {
    // L_j^m(|z|^2/2) = sum_i c_i 2^{-i} z^i conj(z)^i
    ZZbarPolynomial out;
    auto add_laguerre = [&](unsigned degree, unsigned order, unsigned za, unsigned zb, Complex scale) {
        if (scale == Complex{})
            return;
        const auto coeffs = laguerre_coefficients(degree, Rational(order)).coefficients();
        for (unsigned i = 0; i < coeffs.size(); ++i)
            out.add(za + i, zb + i, scale * std::ldexp(coeffs[i].get_d(), -static_cast<int>(i)));
    };
    add_laguerre(s.k, 0, 0, 0, s.c_rad);
    for (const auto& [p, c] : s.c_hol)
        if (p <= s.k)
            add_laguerre(s.k - p, p, p, 0, c);
    for (const auto& [q, c] : s.c_anti)
        add_laguerre(s.k, q, 0, q, c);
    return out;
}

Complex coefficient_via_Atilde(const HBLSeries& s, unsigned p) {
    ZZbarPolynomial poly = series_polynomial(s);
    for (unsigned i = 0; i < p; ++i)
        poly = poly.dz();
    return poly.at_zero();
}

unsigned spectral_cutoff(const PlaneFunction& f) {
    unsigned cut = 0;
    for (const auto& term : f.terms())
        cut = std::max(cut, term.p() + term.radial().polynomial_degree());
    return cut;
}

Complex spectral_twisted_spherical_mean(const PlaneFunction& f, Complex z, double r) {
    const unsigned cut = spectral_cutoff(f);
    Complex acc{};
    for (unsigned k = 0; k <= cut; ++k) {
        const double weight = laguerre_function(k, 0, r);
        for (const auto& term : f.terms())
            acc += weight * hecke_bochner_projection(term, k)(z);
    }
    return acc / (2.0 * kPi);
}

} // namespace tsmlab
