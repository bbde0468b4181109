#ifndef APOSTOL_SERIES_HPP
#define APOSTOL_SERIES_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "apostol/poly.hpp"
#include "apostol/rational.hpp"

namespace apostol {

/// Truncated formal power series sum_{j=0}^{N} c_j t^j with coefficients in
/// a ring R (Rational or Poly). N is inclusive, so there are N+1 slots.
template <class R>
class Series {
public:
    explicit Series(std::size_t order) : c_(order + 1) {}
    explicit Series(std::vector<R> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("a series needs at least one coefficient");
    }

    std::size_t order() const { return c_.size() - 1; }
    const R& operator[](std::size_t j) const { return c_.at(j); }
    R& operator[](std::size_t j) { return c_.at(j); }
    const std::vector<R>& coeffs() const { return c_; }

    /// Index of the first nonzero coefficient; empty when the series is zero
    /// through its order.
    std::optional<std::size_t> valuation() const {
        for (std::size_t j = 0; j < c_.size(); ++j)
            if (!is_zero(c_[j])) return j;
        return std::nullopt;
    }

    Series truncate(std::size_t order) const {
        if (order > this->order())
            throw std::invalid_argument("cannot truncate a series of order " + std::to_string(this->order()) +
                                        " to the larger order " + std::to_string(order));
        return Series(std::vector<R>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
    }

    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

private:
    std::vector<R> c_;
};

using ScalarSeries = Series<Rational>;
using PolySeries = Series<Poly>;

namespace detail {

inline void require_same_order(std::size_t a, std::size_t b, const char* op) {
    if (a != b)
        throw std::invalid_argument(std::string(op) + ": order mismatch (" + std::to_string(a) + " vs " +
                                    std::to_string(b) + ")");
}

}  // namespace detail

template <class R>
Series<R> operator+(const Series<R>& a, const Series<R>& b) {
    detail::require_same_order(a.order(), b.order(), "series addition");
    Series<R> out = a;
    for (std::size_t j = 0; j <= a.order(); ++j) out[j] += b[j];
    return out;
}

template <class R>
Series<R> operator-(const Series<R>& a, const Series<R>& b) {
    detail::require_same_order(a.order(), b.order(), "series subtraction");
    Series<R> out = a;
    for (std::size_t j = 0; j <= a.order(); ++j) out[j] -= b[j];
    return out;
}

/// Cauchy product; both operands must carry the same order.
template <class R, class S>
Series<R> series_mul(const Series<R>& a, const Series<S>& b) {
    detail::require_same_order(a.order(), b.order(), "series_mul");
    Series<R> out(a.order());
    for (std::size_t j = 0; j <= a.order(); ++j) {
        R acc{};
        for (std::size_t i = 0; i <= j; ++i) acc += a[i] * b[j - i];
        out[j] = std::move(acc);
    }
    return out;
}

/// Quotient num / den. With v the valuation of den, the result has order
/// N - v: coefficients above that are not determined by the inputs.
/// Throws PoleError when num vanishes to lower order than den.
template <class R>
Series<R> series_div(const Series<R>& num, const ScalarSeries& den) {
    detail::require_same_order(num.order(), den.order(), "series_div");
    const auto v = den.valuation();
    if (!v) throw std::invalid_argument("series_div: denominator vanishes through order " + std::to_string(den.order()));
    const auto vn = num.valuation();
    if (vn && *vn < *v) throw PoleError(*v - *vn);

    const std::size_t n_out = den.order() - *v;
    const Rational& lead = den[*v];
    Series<R> q(n_out);
    for (std::size_t j = 0; j <= n_out; ++j) {
        R acc = num[j + *v];
        for (std::size_t i = 0; i < j; ++i) acc -= q[i] * den[j + *v - i];
        q[j] = acc / lead;
    }
    return q;
}

/// exp(L t) truncated at order N: coefficients L^j / j!.
ScalarSeries series_exp_linear(const Rational& rate, std::size_t order);

/// exp(L x t) with x symbolic: coefficients L^j x^j / j!.
PolySeries series_exp_linear_x(const Rational& rate, std::size_t order);

/// a(sigma t): coefficient j scaled by sigma^j.
template <class R>
Series<R> series_scale_var(const Series<R>& a, const Rational& sigma) {
    Series<R> out = a;
    Rational p = 1;
    for (std::size_t j = 0; j <= a.order(); ++j) {
        out[j] = out[j] * p;
        p *= sigma;
    }
    return out;
}

/// t^shift * a, keeping the order (top coefficients fall off).
template <class R>
Series<R> series_shift(const Series<R>& a, std::size_t shift) {
    Series<R> out(a.order());
    for (std::size_t j = shift; j <= a.order(); ++j) out[j] = a[j - shift];
    return out;
}

template <class R>
Series<R> series_scale(const Series<R>& a, const Rational& s) {
    Series<R> out = a;
    for (std::size_t j = 0; j <= a.order(); ++j) out[j] = out[j] * s;
    return out;
}

/// a^e for e >= 0 by repeated multiplication.
template <class R>
Series<R> series_pow(const Series<R>& a, unsigned e) {
    Series<R> out(a.order());
    out[0] = R(Rational(1));
    for (unsigned i = 0; i < e; ++i) out = series_mul(out, a);
    return out;
}

/// Constant polynomials in x.
PolySeries lift(const ScalarSeries& s);

/// n! times the coefficient of t^n.
Poly extract_poly(const PolySeries& f, std::size_t n);
Rational extract_scalar(const ScalarSeries& f, std::size_t n);

}  // namespace apostol

#endif
