#ifndef APOSTOL_POLY_HPP
#define APOSTOL_POLY_HPP

#include <cstddef>
#include <ostream>
#include <vector>

#include "apostol/rational.hpp"

namespace apostol {

/// Dense univariate polynomial in x over the rationals. Coefficient i
/// multiplies x^i; trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients at all.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    explicit Poly(const Rational& constant);

    static Poly monomial(const Rational& c, std::size_t degree);
    static Poly x() { return monomial(1, 1); }

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    Rational operator()(const Rational& at) const;
    Poly derivative() const;
    /// p(scale * x + shift)
    Poly compose_affine(const Rational& scale, const Rational& shift) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& s);
    Poly& operator/=(const Rational& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    friend Poly operator/(Poly a, const Rational& s) { return a /= s; }
    friend Poly operator-(Poly a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<Rational> c_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace apostol

#endif
