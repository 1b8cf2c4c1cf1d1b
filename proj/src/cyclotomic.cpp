#include "tsmlab/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace tsmlab {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && sgn(p.back()) == 0)
        p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty())
        return {};
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

Poly poly_sub(Poly a, const Poly& b) {
    if (a.size() < b.size())
        a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    trim(a);
    return a;
}

// a = q b + r
void poly_divmod(Poly a, const Poly& b, Poly& q, Poly& r) {
    trim(a);
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    const Rational& lead = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const Rational factor = a.back() / lead;
        q[shift] = factor;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= factor * b[i];
        a.pop_back();
        trim(a);
    }
    trim(q);
    r = std::move(a);
}

std::map<unsigned, Poly>& cyclotomic_cache() {
    static std::map<unsigned, Poly> cache;
    return cache;
}

} // namespace

std::vector<Rational> cyclotomic_polynomial(unsigned n) {
    if (n == 0)
        fail(ErrorCode::InvalidArgument, "cyclotomic_polynomial: n must be positive");
    static std::recursive_mutex guard;
    std::lock_guard<std::recursive_mutex> lock(guard);
    auto& cache = cyclotomic_cache();
    if (auto it = cache.find(n); it != cache.end())
        return it->second;
    Poly num(n + 1, Rational(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0)
            continue;
        const Poly phi_d = cyclotomic_polynomial(d);
        Poly q, r;
        poly_divmod(num, phi_d, q, r);
        num = std::move(q);
    }
    cache[n] = num;
    return num;
}

CyclotomicField::CyclotomicField(unsigned N) : N_(N) {
    if (N == 0)
        fail(ErrorCode::InvalidArgument, "cyclotomic field: N must be positive");
    if (N > kMaxExactN)
        fail(ErrorCode::Unsupported, "exact arithmetic supports N <= 12; use float mode");
    modulus_ = cyclotomic_polynomial(2 * N);
}

std::vector<Rational> CyclotomicField::reduce(std::vector<Rational> poly) const {
    trim(poly);
    if (poly.size() >= modulus_.size()) {
        Poly q, r;
        poly_divmod(std::move(poly), modulus_, q, r);
        poly = std::move(r);
    }
    poly.resize(degree(), Rational(0));
    return poly;
}

Cyclotomic::Cyclotomic(std::shared_ptr<const CyclotomicField> field, Rational value)
    : field_(std::move(field)) {
    c_.assign(field_->degree(), Rational(0));
    c_[0] = std::move(value);
}

Cyclotomic::Cyclotomic(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coeffs)
    : field_(std::move(field)) {
    c_ = field_->reduce(std::move(coeffs));
}

Cyclotomic Cyclotomic::zeta_power(std::shared_ptr<const CyclotomicField> field, long e) {
    const long order = 2L * field->N();
    long r = e % order;
    if (r < 0)
        r += order;
    Poly mono(static_cast<std::size_t>(r) + 1, Rational(0));
    mono[static_cast<std::size_t>(r)] = 1;
    return Cyclotomic(std::move(field), std::move(mono));
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : c_)
        if (sgn(c) != 0)
            return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0)
            return false;
    return true;
}

void Cyclotomic::check_same_field(const Cyclotomic& o) const {
    if (!field_ || !o.field_ || field_->N() != o.field_->N())
        fail(ErrorCode::Internal, "cyclotomic arithmetic across different fields");
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& c : out.c_)
        c = -c;
    return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    check_same_field(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] += o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    check_same_field(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] -= o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    check_same_field(o);
    c_ = field_->reduce(poly_mul(c_, o.c_));
    return *this;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero())
        fail(ErrorCode::InvalidArgument, "cyclotomic: division by zero");
    if (is_rational())
        return Cyclotomic(field_, Rational(1) / c_[0]);
    // Extended Euclid: s a + t m = g, with g a nonzero constant since m is irreducible.
    Poly r0 = field_->modulus(), r1 = c_;
    trim(r1);
    Poly t0, t1{Rational(1)};
    while (r1.size() > 1) {
        Poly q, r;
        poly_divmod(r0, r1, q, r);
        Poly t = poly_sub(t0, poly_mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    const Rational g = r1.at(0);
    for (auto& c : t1)
        c /= g;
    return Cyclotomic(field_, std::move(t1));
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) {
    check_same_field(o);
    return *this *= o.inverse();
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same_field(b);
    return a.c_ == b.c_;
}

Complex Cyclotomic::to_complex() const {
    if (!field_)
        return {};
    const double step = kPi / field_->N();
    Complex acc{};
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0)
            acc += c_[i].get_d() * std::polar(1.0, step * static_cast<double>(i));
    return acc;
}

std::string Cyclotomic::to_string() const {
    if (is_rational())
        return tsmlab::to_string(rational_part());
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0)
            continue;
        Rational mag = abs(c_[i]);
        if (first)
            os << (sgn(c_[i]) < 0 ? "-" : "");
        else
            os << (sgn(c_[i]) < 0 ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << tsmlab::to_string(mag);
            continue;
        }
        if (mag != 1)
            os << tsmlab::to_string(mag) << "*";
        os << "z";
        if (i > 1)
            os << "^" << i;
    }
    return os.str();
}

} // namespace tsmlab
