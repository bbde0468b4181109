#ifndef APOSTOL_REPORT_HPP
#define APOSTOL_REPORT_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "apostol/poly.hpp"
#include "apostol/rational.hpp"

namespace apostol {

enum class IdentityKind {
    Addition,      // ADD_11
    Shift,         // SHIFT_12
    Expansion,     // EXPAND_13_14
    Reflection,    // REFLECT_15
    Convolution,   // CONV_16
    Multinomial,   // MULTINOMIAL_17
    NorlundA,      // NORLUND_18
    NorlundB,      // NORLUND_19
    CarlitzA,      // CARLITZ_20
    CarlitzB,      // CARLITZ_21
    GenStirling,   // GENSTIRLING_22
    Stirling,      // STIRLING_23
    Laguerre,      // LAGUERRE_24
    Jacobi,        // JACOBI_25
    Hermite,       // HERMITE_26
    Lah,           // LAH_9999
    Bbh,           // BBH_28
    Table1Row,     // TABLE1_ROW_<i>
};

struct IdentityId {
    IdentityKind kind;
    int row = 0;  // Table1Row only

    /// Wire name, e.g. "ADD_11" or "TABLE1_ROW_13".
    std::string str() const;
    auto operator<=>(const IdentityId&) const = default;
};

/// Formula checked under this id, as plain text.
std::string equation_text(const IdentityId& id);

struct ExactZero {};

/// First coefficient (index n of the sequence, power of x) where the two
/// sides differ.
struct FirstMismatch {
    std::size_t n = 0;
    std::size_t power = 0;
    Rational lhs;
    Rational rhs;
};

/// Residuals of a truncated identity at increasing truncation points.
struct NumericDiagnostic {
    std::vector<unsigned> truncations;
    std::vector<Rational> residuals;
    std::vector<double> magnitudes;
};

using Residual = std::variant<ExactZero, FirstMismatch, NumericDiagnostic>;

enum class Verdict { Pass, Fail, Inconclusive };

std::string to_string(Verdict v);

struct IdentityReport {
    IdentityId id;
    std::string params;
    std::size_t order = 0;
    Residual residual;
    Verdict verdict = Verdict::Fail;
    std::vector<std::string> notes;
    std::size_t sample = 0;
};

/// Verdict follows from the residual: ExactZero passes, a mismatch fails,
/// a diagnostic is inconclusive.
IdentityReport make_report(IdentityId id, std::string params, std::size_t order, Residual residual,
                           std::vector<std::string> notes = {});

Residual compare(const std::vector<Poly>& lhs, const std::vector<Poly>& rhs);
Residual compare(const std::vector<Rational>& lhs, const std::vector<Rational>& rhs);

inline bool is_exact_zero(const Residual& r) { return std::holds_alternative<ExactZero>(r); }

std::string describe(const Residual& r);

}  // namespace apostol

#endif
