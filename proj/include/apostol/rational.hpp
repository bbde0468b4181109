#ifndef APOSTOL_RATIONAL_HPP
#define APOSTOL_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace apostol {

/// Arbitrary-precision rational. GMP keeps every value canonical
/// (positive denominator, coprime parts) after each arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Raised when a generating function has a pole at t = 0, i.e. the quotient
/// is a Laurent series rather than a power series.
class PoleError : public std::domain_error {
public:
    explicit PoleError(std::size_t order);
    std::size_t order() const noexcept { return order_; }

private:
    std::size_t order_;
};

/// Parameters that make a formula singular (division by zero in a
/// closed form, vanishing normaliser, ...).
class SingularParameterError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Accepts "p", "p/q", "-p/q" (optionally surrounded by whitespace);
/// throws std::invalid_argument otherwise or when q = 0.
Rational parse_rational(std::string_view text);

Integer factorial(std::uint64_t n);
Integer binomial(std::uint64_t n, std::uint64_t k);

/// C(z, j) = z (z-1) ... (z-j+1) / j! for rational z; zero for j < 0.
Rational generalized_binomial(const Rational& z, long j);

/// (z)_len = z (z+1) ... (z+len-1); the empty product is 1.
Rational rising_factorial(const Rational& z, std::uint64_t len);

/// Integer power with negative exponents allowed for nonzero bases.
/// 0^0 is 1.
Rational pow(const Rational& base, long exponent);

}  // namespace apostol

#endif
