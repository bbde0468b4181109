#ifndef APOSTOL_IDENTITIES_HPP
#define APOSTOL_IDENTITIES_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "apostol/bases.hpp"
#include "apostol/family.hpp"
#include "apostol/report.hpp"

namespace apostol {

// Every checker evaluates the two sides through separate routes (symbolic
// polynomials vs scalar numbers, composition vs binomial sums, explicit
// multi-index sums vs the engine at other parameters) and reports the
// exact residual. PoleError from the engine propagates.

struct StructuralAux {
    Rational y = 1;                // Addition: the second argument
    std::size_t split = 0;         // Convolution: alphas[0..split) | alphas[split..r)
    std::vector<unsigned> blocks;  // Multinomial: contiguous block sizes summing to r
    std::vector<Rational> xs;      // Multinomial: one argument per block
};

/// Addition, Shift, Expansion, Reflection, Convolution, Multinomial.
/// Reflection needs m = 1 and nonzero alphas.
IdentityReport check_structural(IdentityKind id, const FamilyParams& p, const StructuralAux& aux, std::size_t order);

struct MultiplicationArgs {
    unsigned n = 2;         // first modulus
    unsigned q = 2;         // second modulus (Carlitz forms only)
    std::size_t ell_max = 6;
};

/// NorlundA/B and CarlitzA/B for the m = 1, a = 1, b = c = e family.
/// The B forms lower k by one and need k >= 1.
IdentityReport check_multiplication(IdentityKind id, const FamilyParams& p, const MultiplicationArgs& args);

struct ConnectionAux {
    NodeSequence nodes;         // GenStirling: at least `order` nodes
    OrthoFamily ortho;          // Laguerre / Jacobi parameters
};

/// GenStirling, Stirling, Laguerre, Jacobi, Hermite.
IdentityReport check_connection(IdentityKind id, const FamilyParams& p, const ConnectionAux& aux, std::size_t order);

struct BbhSample {
    std::vector<Rational> alphas;  // r = alphas.size(), all nonzero
    unsigned k = 1;
    Rational x = 1;
    Rational a = 1;
    Rational b = 2;
    FactorialMode mode = kDefaultFactorialMode;
};

/// Unified Bernstein/BBH basis (power m = r) against the m = 1 unified
/// family evaluated at (1+bx)/(1+ax). The right side's normaliser is read
/// as 1/(r k!); the sample's mode selects the basis normaliser. Notes carry
/// the outcome under the other mode.
IdentityReport check_bbh(const BbhSample& s, std::size_t order);

struct LahSample {
    std::vector<Rational> alphas;
    std::vector<Rational> betas;       // at least max(truncations) entries
    unsigned k = 1;
    Rational x = 0;
    std::size_t n = 2;
    std::vector<unsigned> truncations; // increasing M_max values, each >= r
};

/// Expansion of the m = 1 family over the Lah connection to beta nodes.
/// When the leading r betas equal the alphas the sum terminates and the
/// identity is checked exactly; otherwise the residuals at x for each
/// truncation are reported as a diagnostic (inconclusive unless zero).
IdentityReport check_lah(const LahSample& s);

enum class Suite { All, Structural, Multiplication, Connection, Table1, Lah, Bbh };

Suite parse_suite(const std::string& name);
std::string to_string(Suite s);

struct SuiteConfig {
    Suite suite = Suite::All;
    std::size_t order = 12;
    std::size_t samples = 3;
    std::uint64_t seed = 42;
    unsigned jobs = 1;
};

struct SuiteResult {
    std::vector<IdentityReport> reports;  // sorted by id, then sample index
    std::vector<std::string> skipped;     // samples dropped because of a pole
};

/// Deterministic for a given config, regardless of `jobs`.
SuiteResult run_suite(const SuiteConfig& config);

}  // namespace apostol

#endif
