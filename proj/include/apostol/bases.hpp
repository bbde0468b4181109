#ifndef APOSTOL_BASES_HPP
#define APOSTOL_BASES_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "apostol/poly.hpp"
#include "apostol/rational.hpp"

namespace apostol {

using NodeSequence = std::vector<Rational>;

/// (x; nodes)_ell = (x - nodes[0]) ... (x - nodes[ell-1]).
Poly falling_factorial_poly(std::span<const Rational> nodes, std::size_t ell);

enum class MatrixKind { Stirling1, Stirling2, GenStirling1, GenStirling2, GenLah };

/// Lower-triangular table of connection coefficients, entry (n, k) for
/// 0 <= n < rows(), 0 <= k < cols(). Entries above the diagonal are zero.
class ConnectionMatrix {
public:
    ConnectionMatrix(MatrixKind kind, std::size_t rows, std::size_t cols);

    MatrixKind kind() const { return kind_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Rational& at(std::size_t n, std::size_t k) const;
    Rational& at(std::size_t n, std::size_t k);

private:
    MatrixKind kind_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> e_;
};

enum class StirlingKind { First, Second };

/// First kind: (x; nodes)_n = sum_k s(n,k) x^k.
/// Second kind: x^n = sum_k S(n,k) (x; nodes)_k.
/// Built by exact basis conversion for n, k <= n_max; needs n_max nodes.
ConnectionMatrix gen_stirling_matrix(StirlingKind kind, std::span<const Rational> nodes, std::size_t n_max);
Rational gen_stirling(StirlingKind kind, std::size_t n, std::size_t k, std::span<const Rational> nodes);

/// Ordinary (signed first kind) Stirling numbers: nodes 0, 1, 2, ...
ConnectionMatrix stirling_matrix(StirlingKind kind, std::size_t n_max);
Rational stirling(StirlingKind kind, std::size_t n, std::size_t k);

/// Physicists' Hermite, generalised Laguerre L^(alpha), Jacobi P^(alpha,beta).
struct OrthoFamily {
    enum class Kind { Hermite, Laguerre, Jacobi } kind = Kind::Hermite;
    Rational alpha = 0;
    Rational beta = 0;

    static OrthoFamily hermite() { return {Kind::Hermite, 0, 0}; }
    static OrthoFamily laguerre(Rational a) { return {Kind::Laguerre, std::move(a), 0}; }
    static OrthoFamily jacobi(Rational a, Rational b) { return {Kind::Jacobi, std::move(a), std::move(b)}; }

    std::string describe() const;
};

/// Degree-n member via the three-term recurrence. Jacobi polynomials are
/// returned in their natural variable y.
Poly classical_orthopoly(const OrthoFamily& family, long n);

/// Element j of the basis that monomial_expand targets: H_j(x), L_j(x), or
/// P_j(1 - 2x).
Poly expansion_basis(const OrthoFamily& family, std::size_t j);

/// Coefficients c_0..c_ell with x^ell = sum_j c_j expansion_basis(j), from
/// the closed-form inversion formulas.
std::vector<Rational> monomial_expand(const OrthoFamily& family, std::size_t ell);

/// Generalised Lah numbers: entry (m, j) is C(m, j; alpha*_j; beta*_m) in
///   1/(y; alpha*)_j = sum_{m >= j} C(m, j) / (y; beta*)_m,
/// for j <= r = |alpha*| and m <= m_max, obtained by matching both sides
/// as series in u = 1/y.
ConnectionMatrix gen_lah(std::span<const Rational> alpha_star, std::span<const Rational> beta_star,
                         std::size_t m_max);

enum class FactorialMode {
    MkFact,      // 1/((m k)!)
    MTimesKFact  // 1/(m (k!))
};

/// Reading of the ambiguous factorial normaliser for which the unified
/// Bernstein/BBH relation to the unified Apostol family holds.
inline constexpr FactorialMode kDefaultFactorialMode = FactorialMode::MTimesKFact;

std::string to_string(FactorialMode mode);

/// p_n(x) for n <= N: n! [t^n] of
///   (2^{1-k} x^k t^k / (1+ax)^k)^m * norm * exp(t (1+bx)/(1+ax)).
/// Throws SingularParameterError when 1 + a x = 0.
std::vector<Rational> bbh_basis(const Rational& x, unsigned k, unsigned m, const Rational& a, const Rational& b,
                                std::size_t order, FactorialMode mode);

}  // namespace apostol

#endif
