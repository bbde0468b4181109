#include "apostol/reference.hpp"

#include <stdexcept>

#include "apostol/series.hpp"

namespace apostol {

namespace {

ScalarSeries monomial_series(const Rational& c, std::size_t degree, std::size_t order) {
    ScalarSeries s(order);
    if (degree <= order) s[degree] = c;
    return s;
}

ScalarSeries constant_series(const Rational& c, std::size_t order) { return monomial_series(c, 0, order); }

// sum_{l<m} (scale t)^l / l!
ScalarSeries partial_exp(unsigned m, const Rational& scale, std::size_t order) {
    ScalarSeries s(order);
    Rational term = 1;
    for (std::size_t l = 0; l < m && l <= order; ++l) {
        s[l] = term;
        term = term * scale / static_cast<unsigned long>(l + 1);
    }
    return s;
}

// (num/den)^power * exp(log_c x t), truncated to `order`. The quotient is
// formed at order + slack so that the valuation drop of den is absorbed.
std::vector<Poly> power_times_carrier(const ScalarSeries& num, const ScalarSeries& den, unsigned power,
                                      const Rational& log_c, std::size_t order) {
    const ScalarSeries base = series_div(num, den);
    if (base.order() < order) throw std::logic_error("reference generator: insufficient working order");
    const ScalarSeries powered = series_pow(base.truncate(order), power);
    const PolySeries f = series_mul(series_exp_linear_x(log_c, order), powered);
    std::vector<Poly> out;
    out.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n) out.push_back(extract_poly(f, n));
    return out;
}

}  // namespace

std::string to_string(ReferenceKind kind) {
    switch (kind) {
        case ReferenceKind::ClassicalBernoulli: return "ClassicalBernoulli";
        case ReferenceKind::ClassicalEuler: return "ClassicalEuler";
        case ReferenceKind::ClassicalGenocchi: return "ClassicalGenocchi";
        case ReferenceKind::ApostolBernoulli: return "ApostolBernoulli";
        case ReferenceKind::ApostolEuler: return "ApostolEuler";
        case ReferenceKind::SrivastavaBernoulli: return "SrivastavaBernoulli";
        case ReferenceKind::SrivastavaEuler: return "SrivastavaEuler";
        case ReferenceKind::NataliniBernoulli: return "NataliniBernoulli";
        case ReferenceKind::TremblayBernoulli: return "TremblayBernoulli";
        case ReferenceKind::UnifiedApostol: return "UnifiedApostol";
        case ReferenceKind::ScaledBernoulli: return "ScaledBernoulli";
        case ReferenceKind::ScaledEuler: return "ScaledEuler";
    }
    return "unknown";
}

std::vector<Poly> reference_family(ReferenceKind kind, const ReferenceArgs& args, std::size_t order) {
    const std::size_t w = order + args.m + 1;
    const ScalarSeries e_t = series_exp_linear(1, w);
    const ScalarSeries t = monomial_series(1, 1, w);
    const ScalarSeries two = constant_series(2, w);
    const ScalarSeries one = constant_series(1, w);

    switch (kind) {
        case ReferenceKind::ClassicalBernoulli:
            return power_times_carrier(t, e_t - one, args.order, 1, order);
        case ReferenceKind::ClassicalEuler:
            return power_times_carrier(two, e_t + one, args.order, 1, order);
        case ReferenceKind::ClassicalGenocchi:
            return power_times_carrier(series_scale(t, 2), e_t + one, args.order, 1, order);
        case ReferenceKind::ApostolBernoulli:
            return power_times_carrier(t, series_scale(e_t, args.lambda) - one, args.order, 1, order);
        case ReferenceKind::ApostolEuler:
            return power_times_carrier(two, series_scale(e_t, args.lambda) + one, args.order, 1, order);
        case ReferenceKind::SrivastavaBernoulli: {
            const ScalarSeries den =
                series_scale(series_exp_linear(args.log_b, w), args.lambda) - series_exp_linear(args.log_a, w);
            return power_times_carrier(t, den, args.order, args.log_c, order);
        }
        case ReferenceKind::SrivastavaEuler: {
            const ScalarSeries den =
                series_scale(series_exp_linear(args.log_b, w), args.lambda) + series_exp_linear(args.log_a, w);
            return power_times_carrier(two, den, args.order, args.log_c, order);
        }
        case ReferenceKind::NataliniBernoulli:
            return power_times_carrier(monomial_series(1, args.m, w), e_t - partial_exp(args.m, 1, w), 1, 1, order);
        case ReferenceKind::TremblayBernoulli: {
            const ScalarSeries den = series_scale(e_t, args.lambda) - partial_exp(args.m, 1, w);
            return power_times_carrier(monomial_series(1, args.m, w), den, args.order, 1, order);
        }
        case ReferenceKind::ScaledBernoulli: {
            const ScalarSeries den =
                series_scale(series_exp_linear(args.log_c, w), args.lambda) - partial_exp(args.m, args.log_scale, w);
            return power_times_carrier(monomial_series(1, args.m, w), den, args.order, args.log_c, order);
        }
        case ReferenceKind::ScaledEuler: {
            const ScalarSeries den =
                series_scale(series_exp_linear(args.log_c, w), args.lambda) + partial_exp(args.m, args.log_scale, w);
            return power_times_carrier(constant_series(pow(Rational(2), static_cast<long>(args.m)), w), den,
                                       args.order, args.log_c, order);
        }
        case ReferenceKind::UnifiedApostol: {
            // Product of distinct factors, so no power shortcut here.
            const std::size_t r = args.alphas.size();
            const std::size_t wu = order + r;
            const ScalarSeries e = series_exp_linear(1, wu);
            ScalarSeries den = constant_series(1, wu);
            for (const Rational& a : args.alphas) den = series_mul(den, series_scale(e, a) - constant_series(1, wu));
            const long rk = static_cast<long>(r * args.k);
            const ScalarSeries num =
                monomial_series(pow(Rational(2), static_cast<long>(r) * (1 - static_cast<long>(args.k))),
                                static_cast<std::size_t>(rk), wu);
            return power_times_carrier(num, den, 1, 1, order);
        }
    }
    throw std::invalid_argument("unknown reference family");
}

}  // namespace apostol
