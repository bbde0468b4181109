#include "apostol/family.hpp"

#include <atomic>
#include <sstream>
#include <stdexcept>

namespace apostol {

namespace {

std::atomic<int> g_prefactor_mutations{0};

// Every factor of the denominator has valuation at most m unless it vanishes
// identically, so N + r*m terms leave at least N after the division.
std::size_t working_order(const FamilyParams& p, std::size_t order) { return order + p.r() * p.m; }

ScalarSeries truncated_exp_poly(unsigned m, std::size_t order) {
    ScalarSeries s(order);
    Rational term = 1;
    for (std::size_t l = 0; l < m && l <= order; ++l) {
        s[l] = term;
        term /= static_cast<unsigned long>(l + 1);
    }
    return s;
}

}  // namespace

void FamilyParams::validate() const {
    if (m == 0) throw std::invalid_argument("m must be a positive integer");
}

std::vector<std::string> FamilyParams::warnings() const {
    std::vector<std::string> w;
    if (log_a == log_b) w.emplace_back("a = b (log_a == log_b): each factor reduces to a^t (alpha_i - sum_{l<m} t^l/l!)");
    return w;
}

std::string FamilyParams::describe() const {
    std::ostringstream os;
    os << "k=" << k << " m=" << m << " r=" << r() << " alphas=[";
    for (std::size_t i = 0; i < alphas.size(); ++i) os << (i ? "," : "") << to_string(alphas[i]);
    os << "] log_a=" << to_string(log_a) << " log_b=" << to_string(log_b) << " log_c=" << to_string(log_c);
    return os.str();
}

FamilyParams FamilyParams::bernoulli() { return FamilyParams{}; }

FamilyParams FamilyParams::unified(unsigned k, std::vector<Rational> alphas) {
    FamilyParams p;
    p.k = k;
    p.m = 1;
    p.alphas = std::move(alphas);
    return p;
}

Rational power_of_two_prefactor(const FamilyParams& p) {
    const long rm = static_cast<long>(p.r() * p.m);
    return pow(Rational(2), rm * (1 - static_cast<long>(p.k)));
}

ScalarSeries denominator_series(const FamilyParams& p, std::size_t order) {
    p.validate();
    const ScalarSeries eb = series_exp_linear(p.log_b, order);
    const ScalarSeries ea_partial = series_mul(series_exp_linear(p.log_a, order), truncated_exp_poly(p.m, order));

    ScalarSeries prod(order);
    prod[0] = 1;
    for (const Rational& alpha : p.alphas)
        if (alpha == 1 && p.m == 1 && p.log_a == p.log_b)
            throw SingularParameterError("a = b with alpha = 1 and m = 1 makes a denominator factor vanish identically");
    for (const Rational& alpha : p.alphas) prod = series_mul(prod, series_scale(eb, alpha) - ea_partial);
    return prod;
}

PolySeries family_series(const FamilyParams& p, std::size_t order) {
    const std::size_t work = working_order(p, order);
    const ScalarSeries den = denominator_series(p, work);

    Rational prefactor = power_of_two_prefactor(p);
    if (testing::prefactor_mutation_active()) prefactor = pow(Rational(2), static_cast<long>(p.r() * p.m));

    const std::size_t lead = p.r() * p.k * p.m;
    PolySeries num = series_scale(series_shift(series_exp_linear_x(p.log_c, work), lead), prefactor);
    return series_div(num, den).truncate(order);
}

PolySequence family_polynomials(const FamilyParams& p, std::size_t order) {
    const PolySeries f = family_series(p, order);
    PolySequence seq{p, order, {}};
    seq.polys.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n) seq.polys.push_back(extract_poly(f, n));
    return seq;
}

std::vector<Rational> family_numbers(const FamilyParams& p, std::size_t order) {
    // At x = 0 the carrier c^{xt} is 1 and the numerator is a single term.
    const std::size_t work = working_order(p, order);
    const ScalarSeries den = denominator_series(p, work);
    ScalarSeries num(work);
    const std::size_t lead = p.r() * p.k * p.m;
    if (lead <= work) num[lead] = power_of_two_prefactor(p);

    const ScalarSeries q = series_div(num, den);
    std::vector<Rational> out;
    out.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n) out.push_back(extract_scalar(q, n));
    return out;
}

std::vector<Rational> family_numbers_via_polynomials(const FamilyParams& p, std::size_t order) {
    const PolySequence seq = family_polynomials(p, order);
    std::vector<Rational> out;
    out.reserve(seq.polys.size());
    for (const Poly& poly : seq.polys) out.push_back(poly.coeff(0));
    return out;
}

namespace testing {

PrefactorMutation::PrefactorMutation() { ++g_prefactor_mutations; }
PrefactorMutation::~PrefactorMutation() { --g_prefactor_mutations; }
bool prefactor_mutation_active() { return g_prefactor_mutations.load() > 0; }

}  // namespace testing

}  // namespace apostol
