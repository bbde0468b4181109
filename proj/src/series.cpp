#include "apostol/series.hpp"

namespace apostol {

ScalarSeries series_exp_linear(const Rational& rate, std::size_t order) {
    ScalarSeries out(order);
    Rational term = 1;
    for (std::size_t j = 0; j <= order; ++j) {
        out[j] = term;
        term = term * rate / static_cast<unsigned long>(j + 1);
    }
    return out;
}

PolySeries series_exp_linear_x(const Rational& rate, std::size_t order) {
    const ScalarSeries s = series_exp_linear(rate, order);
    PolySeries out(order);
    for (std::size_t j = 0; j <= order; ++j) out[j] = Poly::monomial(s[j], j);
    return out;
}

PolySeries lift(const ScalarSeries& s) {
    PolySeries out(s.order());
    for (std::size_t j = 0; j <= s.order(); ++j) out[j] = Poly(s[j]);
    return out;
}

Poly extract_poly(const PolySeries& f, std::size_t n) {
    if (n > f.order())
        throw std::invalid_argument("extract_poly: index " + std::to_string(n) + " exceeds series order " +
                                    std::to_string(f.order()));
    return f[n] * Rational(factorial(n));
}

Rational extract_scalar(const ScalarSeries& f, std::size_t n) {
    if (n > f.order())
        throw std::invalid_argument("extract_scalar: index " + std::to_string(n) + " exceeds series order " +
                                    std::to_string(f.order()));
    return f[n] * Rational(factorial(n));
}

}  // namespace apostol
