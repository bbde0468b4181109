#ifndef APOSTOL_REFERENCE_HPP
#define APOSTOL_REFERENCE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "apostol/poly.hpp"
#include "apostol/rational.hpp"

namespace apostol {

/// Classical families, each generated straight from its own generating
/// function and never through the unified engine. They serve as
/// independent references for the parameter reductions.
enum class ReferenceKind {
    ClassicalBernoulli,   // (t/(e^t-1))^r e^{xt}
    ClassicalEuler,       // (2/(e^t+1))^r e^{xt}
    ClassicalGenocchi,    // (2t/(e^t+1))^r e^{xt}
    ApostolBernoulli,     // (t/(lambda e^t-1))^r e^{xt}
    ApostolEuler,         // (2/(lambda e^t+1))^r e^{xt}
    SrivastavaBernoulli,  // (t/(lambda b^t-a^t))^r c^{xt}
    SrivastavaEuler,      // (2/(lambda b^t+a^t))^r c^{xt}
    NataliniBernoulli,    // t^m e^{xt} / (e^t - sum_{l<m} t^l/l!)
    TremblayBernoulli,    // (t^m/(lambda e^t - sum_{l<m} t^l/l!))^r e^{xt}
    UnifiedApostol,       // t^{rk} 2^{r(1-k)} e^{xt} / prod_i (alpha_i e^t - 1)
    ScaledBernoulli,      // (t^m/(lambda c^t - sum_{l<m} (t L)^l/l!))^r c^{xt}
    ScaledEuler,          // (2^m/(lambda c^t + sum_{l<m} (t L)^l/l!))^r c^{xt}
};

struct ReferenceArgs {
    unsigned order = 1;  // the exponent r
    unsigned m = 1;
    unsigned k = 1;      // UnifiedApostol only
    Rational lambda = 1;
    Rational log_a = 0;
    Rational log_b = 1;
    Rational log_c = 1;
    Rational log_scale = 1;  // L in the Scaled* families
    std::vector<Rational> alphas;  // UnifiedApostol only
};

std::string to_string(ReferenceKind kind);

/// Polynomials 0..N of the requested family. Throws PoleError when the
/// generating function is not a power series at t = 0.
std::vector<Poly> reference_family(ReferenceKind kind, const ReferenceArgs& args, std::size_t order);

}  // namespace apostol

#endif
