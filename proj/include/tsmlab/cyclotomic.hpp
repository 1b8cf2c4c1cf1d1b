#ifndef TSMLAB_CYCLOTOMIC_HPP
#define TSMLAB_CYCLOTOMIC_HPP

#include "tsmlab/common.hpp"

#include <memory>
#include <string>
#include <vector>

namespace tsmlab {

/// Integer-coefficient cyclotomic polynomial Phi_n, lowest degree first.
std::vector<Rational> cyclotomic_polynomial(unsigned n);

/// Q(zeta) with zeta = e^{i pi / N}, a primitive 2N-th root of unity.
/// Elements are residues modulo Phi_{2N}.
class CyclotomicField {
public:
    static constexpr unsigned kMaxExactN = 12;

    explicit CyclotomicField(unsigned N);

    unsigned N() const { return N_; }
    unsigned degree() const { return static_cast<unsigned>(modulus_.size()) - 1; }
    const std::vector<Rational>& modulus() const { return modulus_; }

    /// Reduces a polynomial in zeta modulo Phi_{2N}; trailing zeros trimmed
    /// to exactly degree() coefficients.
    std::vector<Rational> reduce(std::vector<Rational> poly) const;

private:
    unsigned N_;
    std::vector<Rational> modulus_;
};

class Cyclotomic {
public:
    Cyclotomic() = default;
    Cyclotomic(std::shared_ptr<const CyclotomicField> field, Rational value);
    Cyclotomic(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coeffs);

    /// zeta^e for any integer e.
    static Cyclotomic zeta_power(std::shared_ptr<const CyclotomicField> field, long e);

    const std::shared_ptr<const CyclotomicField>& field() const { return field_; }
    const std::vector<Rational>& coefficients() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_part() const { return c_.empty() ? Rational(0) : c_[0]; }

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o);
    Cyclotomic inverse() const;

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

    Complex to_complex() const;
    /// "a + b*z + c*z^2" in powers of zeta; plain rational when possible.
    std::string to_string() const;

private:
    void check_same_field(const Cyclotomic& o) const;

    std::shared_ptr<const CyclotomicField> field_;
    std::vector<Rational> c_;
};

inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

} // namespace tsmlab

#endif
