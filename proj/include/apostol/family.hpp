#ifndef APOSTOL_FAMILY_HPP
#define APOSTOL_FAMILY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "apostol/poly.hpp"
#include "apostol/rational.hpp"
#include "apostol/series.hpp"

namespace apostol {

/// Parameters of the unified multiparameter Apostol-type family
///
///   t^{rkm} 2^{rm(1-k)} c^{xt} / prod_{i<r} (alpha_i b^t - a^t sum_{l<m} t^l/l!)
///
/// The bases a, b, c enter only through their logarithms, which are stored
/// as exact rationals (a = 1 is log_a = 0, b = e is log_b = 1). The order r
/// is the number of alphas; r = 0 is the empty product.
struct FamilyParams {
    unsigned k = 1;
    unsigned m = 1;
    std::vector<Rational> alphas{Rational(1)};
    Rational log_a = 0;
    Rational log_b = 1;
    Rational log_c = 1;

    std::size_t r() const { return alphas.size(); }

    /// Throws std::invalid_argument when m = 0.
    void validate() const;
    /// Soft constraint violations (currently only a = b).
    std::vector<std::string> warnings() const;
    std::string describe() const;

    /// Classical Bernoulli reduction: k = m = r = 1, alpha = 1, a = 1, b = c = e.
    static FamilyParams bernoulli();
    /// m = 1, a = 1, b = c = e with the given k and alphas.
    static FamilyParams unified(unsigned k, std::vector<Rational> alphas);
};

/// Sequence M_0(x), ..., M_N(x) produced from a parameter set.
struct PolySequence {
    FamilyParams params;
    std::size_t order = 0;
    std::vector<Poly> polys;
};

/// 2^{rm(1-k)}, exact (negative exponents give dyadic fractions).
Rational power_of_two_prefactor(const FamilyParams& p);

/// prod_{i<r} (alpha_i exp(log_b t) - exp(log_a t) sum_{l<m} t^l/l!) to order N.
ScalarSeries denominator_series(const FamilyParams& p, std::size_t order);

/// Coefficient n is M_n(x) / n!.
PolySeries family_series(const FamilyParams& p, std::size_t order);

PolySequence family_polynomials(const FamilyParams& p, std::size_t order);

/// M_n(0) computed by the scalar engine, which never forms polynomials in x.
std::vector<Rational> family_numbers(const FamilyParams& p, std::size_t order);

/// M_n(0) read off the symbolic polynomials; must agree with family_numbers.
std::vector<Rational> family_numbers_via_polynomials(const FamilyParams& p, std::size_t order);

namespace testing {

/// While alive, the symbolic engine uses 2^{rm} in place of 2^{rm(1-k)}.
/// The scalar engine is untouched, so checks that pit one route against
/// the other must notice. Test-only.
class PrefactorMutation {
public:
    PrefactorMutation();
    ~PrefactorMutation();
    PrefactorMutation(const PrefactorMutation&) = delete;
    PrefactorMutation& operator=(const PrefactorMutation&) = delete;
};

bool prefactor_mutation_active();

}  // namespace testing

}  // namespace apostol

#endif
