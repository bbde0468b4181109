#ifndef APOSTOL_TABLE1_HPP
#define APOSTOL_TABLE1_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "apostol/family.hpp"
#include "apostol/rational.hpp"
#include "apostol/report.hpp"

namespace apostol {

inline constexpr int kTable1Rows = 13;

/// Arguments shared by the thirteen parameter reductions. Each row reads
/// the fields it needs and fixes the rest.
struct Table1Sample {
    unsigned r = 1;
    unsigned m = 1;
    unsigned k = 1;                 // rows 3 and 13
    Rational lambda = 1;            // alpha_i = lambda (or beta, or -lambda)
    std::vector<Rational> alphas;   // row 13
    Rational log_a = 0;
    Rational log_b = 1;
    Rational log_c = 1;
    Rational log_scale = 1;         // rows 4-5: the substitution t -> t L

    std::string describe(int row) const;
};

/// Row 13 relates the unified family at -alpha to the m = 1 family at
/// alpha. Only the unsigned form agrees with that family's generating
/// function; both readings can be checked.
enum class SignReading { Corrected, AsPrinted };

/// Verifies one row of the reduction table. Rows 1, 2, 6 and 11 (plus the
/// classical reductions nested in rows 1 and 2) are compared against
/// independently generated families; the others are checked for
/// consistency with neighbouring rows. Throws PoleError when the row's
/// substitution leaves a pole at t = 0.
IdentityReport table1_check(int row, const Table1Sample& sample, std::size_t order,
                            SignReading reading = SignReading::Corrected);

}  // namespace apostol

#endif
