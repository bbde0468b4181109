#include "apostol/rational.hpp"

#include <cctype>

namespace apostol {

PoleError::PoleError(std::size_t order)
    : std::domain_error("generating function has a pole of order " + std::to_string(order) +
                        " at t = 0"),
      order_(order) {}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    if (s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den))
        throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");

    Integer d = parse_integer(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational q(parse_integer(num), d);
    q.canonicalize();
    return q;
}

Integer factorial(std::uint64_t n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Integer binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return c;
}

Rational generalized_binomial(const Rational& z, long j) {
    if (j < 0) return 0;
    Rational acc = 1;
    for (long i = 0; i < j; ++i) acc *= z - i;
    acc /= Rational(factorial(static_cast<std::uint64_t>(j)));
    return acc;
}

Rational rising_factorial(const Rational& z, std::uint64_t len) {
    Rational acc = 1;
    for (std::uint64_t i = 0; i < len; ++i) acc *= z + Rational(static_cast<unsigned long>(i));
    return acc;
}

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (is_zero(base)) throw SingularParameterError("zero raised to a negative power");
        return Rational(1) / pow(base, -exponent);
    }
    Rational result = 1;
    Rational b = base;
    auto e = static_cast<unsigned long>(exponent);
    while (e != 0) {
        if (e & 1UL) result *= b;
        e >>= 1;
        if (e != 0) b *= b;
    }
    return result;
}

}  // namespace apostol
