#include "tsmlab/plane_function.hpp"

#include "tsmlab/laguerre.hpp"

#include <cmath>

namespace tsmlab {

namespace {

Complex ipow(Complex z, unsigned n) {
    Complex acc{1.0, 0.0};
    for (unsigned i = 0; i < n; ++i)
        acc *= z;
    return acc;
}

} // namespace

RadialProfile RadialProfile::laguerre(unsigned order, std::vector<Complex> coeffs) {
    for (const auto& c : coeffs)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            fail(ErrorCode::InvalidArgument, "radial profile: non-finite Laguerre coefficient");
    return RadialProfile(LaguerreExpansion{order, std::move(coeffs)});
}

RadialProfile RadialProfile::gaussian_poly(std::vector<Rational> coeffs, Complex scale) {
    if (!std::isfinite(scale.real()) || !std::isfinite(scale.imag()))
        fail(ErrorCode::InvalidArgument, "radial profile: non-finite scale");
    return RadialProfile(GaussianPoly{std::move(coeffs), scale});
}

RadialProfile RadialProfile::laguerre_function(unsigned j, unsigned order) {
    std::vector<Complex> c(j + 1, Complex{});
    c[j] = 1.0;
    return laguerre(order, std::move(c));
}

Complex RadialProfile::polynomial_part(double u) const {
    if (const auto* le = std::get_if<LaguerreExpansion>(&data_)) {
        if (le->coeffs.empty())
            return {};
        std::vector<double> l;
        laguerre_eval_all(static_cast<unsigned>(le->coeffs.size() - 1), le->order, u, l);
        Complex acc{};
        for (std::size_t j = 0; j < le->coeffs.size(); ++j)
            acc += le->coeffs[j] * l[j];
        return acc;
    }
    const auto& gp = std::get<GaussianPoly>(data_);
    double acc = 0.0;
    const double r2 = 2.0 * u;
    for (auto it = gp.coeffs.rbegin(); it != gp.coeffs.rend(); ++it)
        acc = acc * r2 + it->get_d();
    return gp.scale * acc;
}

unsigned RadialProfile::polynomial_degree() const {
    if (const auto* le = std::get_if<LaguerreExpansion>(&data_))
        return le->coeffs.empty() ? 0u : static_cast<unsigned>(le->coeffs.size() - 1);
    const auto& gp = std::get<GaussianPoly>(data_);
    return gp.coeffs.empty() ? 0u : static_cast<unsigned>(gp.coeffs.size() - 1);
}

Complex RadialProfile::operator()(double r) const {
    const double u = 0.5 * r * r;
    return polynomial_part(u) * std::exp(-0.5 * u);
}

RadialProfile RadialProfile::scaled(Complex factor) const {
    if (const auto* le = std::get_if<LaguerreExpansion>(&data_)) {
        auto copy = *le;
        for (auto& c : copy.coeffs)
            c *= factor;
        return RadialProfile(copy);
    }
    auto copy = std::get<GaussianPoly>(data_);
    copy.scale *= factor;
    return RadialProfile(copy);
}

bool RadialProfile::is_zero() const {
    if (const auto* le = std::get_if<LaguerreExpansion>(&data_)) {
        for (const auto& c : le->coeffs)
            if (c != Complex{})
                return false;
        return true;
    }
    const auto& gp = std::get<GaussianPoly>(data_);
    if (gp.scale == Complex{})
        return true;
    for (const auto& c : gp.coeffs)
        if (c != 0)
            return false;
    return true;
}

nlohmann::ordered_json complex_to_json(Complex c) {
    return nlohmann::ordered_json::array({c.real(), c.imag()});
}

Complex complex_from_json(const nlohmann::json& j) {
    if (j.is_number())
        return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        fail(ErrorCode::Parse, "expected a complex number as [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

nlohmann::ordered_json RadialProfile::to_json() const {
    nlohmann::ordered_json out;
    if (const auto* le = std::get_if<LaguerreExpansion>(&data_)) {
        out["kind"] = "laguerre";
        out["order"] = le->order;
        auto arr = nlohmann::ordered_json::array();
        for (const auto& c : le->coeffs)
            arr.push_back(complex_to_json(c));
        out["coeffs"] = arr;
        return out;
    }
    const auto& gp = std::get<GaussianPoly>(data_);
    out["kind"] = "gaussian_poly";
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : gp.coeffs)
        arr.push_back(to_string(c));
    out["coeffs"] = arr;
    out["scale"] = complex_to_json(gp.scale);
    return out;
}

RadialProfile RadialProfile::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        fail(ErrorCode::Parse, "radial profile needs a string \"kind\"");
    const auto kind = j["kind"].get<std::string>();
    if (!j.contains("coeffs") || !j["coeffs"].is_array())
        fail(ErrorCode::Parse, "radial profile needs a \"coeffs\" array");
    if (kind == "laguerre") {
        if (!j.contains("order") || !j["order"].is_number_integer() || j["order"].get<long>() < 0)
            fail(ErrorCode::Parse, "laguerre profile needs a nonnegative integer \"order\"");
        std::vector<Complex> coeffs;
        for (const auto& c : j["coeffs"])
            coeffs.push_back(complex_from_json(c));
        return laguerre(j["order"].get<unsigned>(), std::move(coeffs));
    }
    if (kind == "gaussian_poly") {
        std::vector<Rational> coeffs;
        for (const auto& c : j["coeffs"]) {
            if (c.is_string())
                coeffs.push_back(parse_rational(c.get<std::string>()));
            else if (c.is_number_integer())
                coeffs.emplace_back(c.get<long>());
            else
                fail(ErrorCode::Parse, "gaussian_poly coefficients must be integers or \"p/q\" strings");
        }
        Complex scale{1.0, 0.0};
        if (j.contains("scale"))
            scale = complex_from_json(j["scale"]);
        return gaussian_poly(std::move(coeffs), scale);
    }
    fail(ErrorCode::Parse, "unknown radial profile kind '" + kind + "'");
}

TypeTerm::TypeTerm(unsigned p, unsigned q, RadialProfile radial)
    : p_(p), q_(q), radial_(std::move(radial)) {
    if (p_ != 0 && q_ != 0)
        fail(ErrorCode::InvalidArgument,
             "type term must have p = 0 or q = 0 (got p = " + std::to_string(p_) +
                 ", q = " + std::to_string(q_) + ")");
}

Complex TypeTerm::operator()(Complex z) const {
    const Complex a = radial_(std::abs(z));
    if (q_ == 0)
        return a * ipow(z, p_);
    return a * ipow(std::conj(z), q_);
}

PlaneFunction::PlaneFunction(std::vector<TypeTerm> terms) {
    for (auto& t : terms)
        add_term(std::move(t));
}

void PlaneFunction::add_term(TypeTerm term) {
    for (const auto& t : terms_)
        if (t.p() == term.p() && t.q() == term.q())
            fail(ErrorCode::InvalidArgument,
                 "duplicate type term (p = " + std::to_string(term.p()) +
                     ", q = " + std::to_string(term.q()) + ")");
    terms_.push_back(std::move(term));
}

Complex PlaneFunction::operator()(Complex z) const {
    Complex acc{};
    for (const auto& t : terms_)
        acc += t(z);
    return acc;
}

Complex eval_plane_function(const PlaneFunction& f, Complex z) {
    return f(z);
}

PlaneFunction PlaneFunction::rotated(double angle) const {
    PlaneFunction out;
    const Complex sigma = std::polar(1.0, angle);
    for (const auto& t : terms_) {
        // f(sigma z): z^p picks up sigma^p, conj(z)^q picks up conj(sigma)^q.
        const Complex factor = t.q() == 0 ? ipow(sigma, t.p()) : ipow(std::conj(sigma), t.q());
        out.add_term(TypeTerm(t.p(), t.q(), t.radial().scaled(factor)));
    }
    return out;
}

std::function<Complex(Complex)> PlaneFunction::as_callable() const {
    return [self = *this](Complex z) { return self(z); };
}

nlohmann::ordered_json PlaneFunction::to_json() const {
    auto terms = nlohmann::ordered_json::array();
    for (const auto& t : terms_) {
        nlohmann::ordered_json jt;
        jt["p"] = t.p();
        jt["q"] = t.q();
        jt["radial"] = t.radial().to_json();
        terms.push_back(jt);
    }
    nlohmann::ordered_json out;
    out["terms"] = terms;
    return out;
}

PlaneFunction PlaneFunction::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        fail(ErrorCode::Parse, "plane function needs a \"terms\" array");
    PlaneFunction f;
    for (const auto& jt : j["terms"]) {
        for (const char* key : {"p", "q"})
            if (!jt.contains(key) || !jt[key].is_number_integer() || jt[key].get<long>() < 0)
                fail(ErrorCode::Parse, std::string("type term needs a nonnegative integer \"") + key + "\"");
        if (!jt.contains("radial"))
            fail(ErrorCode::Parse, "type term needs a \"radial\" profile");
        f.add_term(TypeTerm(jt["p"].get<unsigned>(), jt["q"].get<unsigned>(),
                            RadialProfile::from_json(jt["radial"])));
    }
    return f;
}

PlaneFunction PlaneFunction::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
    }
    return from_json(j);
}

} // namespace tsmlab
