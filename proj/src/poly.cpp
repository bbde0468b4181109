#include "apostol/poly.hpp"

#include <stdexcept>

namespace apostol {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(const Rational& constant) {
    if (!apostol::is_zero(constant)) c_.push_back(constant);
}

Poly Poly::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && apostol::is_zero(c_.back())) c_.pop_back();
}

Rational Poly::operator()(const Rational& at) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return Poly(std::move(d));
}

Poly Poly::compose_affine(const Rational& scale, const Rational& shift) const {
    // Horner in the substituted variable.
    const Poly inner(std::vector<Rational>{shift, scale});
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= inner;
        acc += Poly(*it);
    }
    return acc;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (apostol::is_zero(a.c_[i])) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& s) {
    if (apostol::is_zero(s)) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Poly& Poly::operator/=(const Rational& s) {
    if (apostol::is_zero(s)) throw std::domain_error("polynomial divided by zero");
    for (auto& c : c_) c /= s;
    return *this;
}

Poly operator-(Poly a) {
    for (auto& c : a.c_) c = -c;
    return a;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const Rational& c = p.coeffs()[i];
        if (is_zero(c)) continue;
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        first = false;
        const Rational mag = abs(c);
        if (i == 0 || mag != 1) os << to_string(mag);
        if (i >= 1) os << (i == 0 || mag != 1 ? "*x" : "x");
        if (i >= 2) os << "^" << i;
    }
    return os;
}

}  // namespace apostol
