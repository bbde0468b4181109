#include "apostol/bases.hpp"

#include <stdexcept>

#include "apostol/series.hpp"

namespace apostol {

Poly falling_factorial_poly(std::span<const Rational> nodes, std::size_t ell) {
    if (ell > nodes.size())
        throw std::invalid_argument("falling factorial of length " + std::to_string(ell) + " needs that many nodes, got " +
                                    std::to_string(nodes.size()));
    Poly p(Rational(1));
    for (std::size_t i = 0; i < ell; ++i) p *= Poly(std::vector<Rational>{-nodes[i], 1});
    return p;
}

ConnectionMatrix::ConnectionMatrix(MatrixKind kind, std::size_t rows, std::size_t cols)
    : kind_(kind), rows_(rows), cols_(cols), e_(rows * cols) {}

const Rational& ConnectionMatrix::at(std::size_t n, std::size_t k) const {
    if (n >= rows_ || k >= cols_) throw std::out_of_range("connection matrix index out of range");
    return e_[n * cols_ + k];
}

Rational& ConnectionMatrix::at(std::size_t n, std::size_t k) {
    if (n >= rows_ || k >= cols_) throw std::out_of_range("connection matrix index out of range");
    return e_[n * cols_ + k];
}

ConnectionMatrix gen_stirling_matrix(StirlingKind kind, std::span<const Rational> nodes, std::size_t n_max) {
    if (n_max > nodes.size())
        throw std::invalid_argument("generalised Stirling numbers up to n = " + std::to_string(n_max) + " need " +
                                    std::to_string(n_max) + " nodes, got " + std::to_string(nodes.size()));
    std::vector<Poly> basis;
    basis.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) basis.push_back(falling_factorial_poly(nodes, n));

    if (kind == StirlingKind::First) {
        ConnectionMatrix s(MatrixKind::GenStirling1, n_max + 1, n_max + 1);
        for (std::size_t n = 0; n <= n_max; ++n)
            for (std::size_t k = 0; k <= n; ++k) s.at(n, k) = basis[n].coeff(k);
        return s;
    }

    // Each basis element is monic of exact degree, so peel x^n from the top.
    ConnectionMatrix S(MatrixKind::GenStirling2, n_max + 1, n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        Poly rest = Poly::monomial(1, n);
        for (std::size_t k = n + 1; k-- > 0;) {
            const Rational c = rest.coeff(k);
            S.at(n, k) = c;
            if (!is_zero(c)) rest -= basis[k] * c;
        }
        if (!rest.is_zero()) throw std::logic_error("basis conversion left a remainder");
    }
    return S;
}

Rational gen_stirling(StirlingKind kind, std::size_t n, std::size_t k, std::span<const Rational> nodes) {
    if (n > nodes.size())
        throw std::invalid_argument("generalised Stirling number of index " + std::to_string(n) + " needs " +
                                    std::to_string(n) + " nodes, got " + std::to_string(nodes.size()));
    if (k > n) return 0;
    return gen_stirling_matrix(kind, nodes.first(n), n).at(n, k);
}

namespace {

NodeSequence natural_nodes(std::size_t count) {
    NodeSequence v;
    v.reserve(count);
    for (std::size_t i = 0; i < count; ++i) v.emplace_back(static_cast<unsigned long>(i));
    return v;
}

}  // namespace

ConnectionMatrix stirling_matrix(StirlingKind kind, std::size_t n_max) {
    ConnectionMatrix g = gen_stirling_matrix(kind, natural_nodes(n_max), n_max);
    ConnectionMatrix out(kind == StirlingKind::First ? MatrixKind::Stirling1 : MatrixKind::Stirling2, n_max + 1,
                         n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n)
        for (std::size_t k = 0; k <= n; ++k) out.at(n, k) = g.at(n, k);
    return out;
}

Rational stirling(StirlingKind kind, std::size_t n, std::size_t k) {
    return gen_stirling(kind, n, k, natural_nodes(n));
}

std::string OrthoFamily::describe() const {
    switch (kind) {
        case Kind::Hermite: return "hermite";
        case Kind::Laguerre: return "laguerre(alpha=" + to_string(alpha) + ")";
        case Kind::Jacobi: return "jacobi(alpha=" + to_string(alpha) + ",beta=" + to_string(beta) + ")";
    }
    return "?";
}

Poly classical_orthopoly(const OrthoFamily& family, long n) {
    if (n < 0) throw std::invalid_argument("polynomial degree must be non-negative");
    const Rational& a = family.alpha;
    const Rational& b = family.beta;
    const Poly x = Poly::x();

    Poly prev(Rational(1));
    if (n == 0) return prev;

    Poly cur;
    switch (family.kind) {
        case OrthoFamily::Kind::Hermite: cur = x * Rational(2); break;
        case OrthoFamily::Kind::Laguerre: cur = Poly(std::vector<Rational>{1 + a, -1}); break;
        case OrthoFamily::Kind::Jacobi: cur = Poly(std::vector<Rational>{(a - b) / 2, (a + b + 2) / 2}); break;
    }

    for (long i = 1; i < n; ++i) {
        const Rational ni = i;
        Poly next;
        switch (family.kind) {
            case OrthoFamily::Kind::Hermite:
                next = x * cur * Rational(2) - prev * (2 * ni);
                break;
            case OrthoFamily::Kind::Laguerre:
                next = (Poly(std::vector<Rational>{2 * ni + 1 + a, -1}) * cur - prev * (ni + a)) / (ni + 1);
                break;
            case OrthoFamily::Kind::Jacobi: {
                const Rational s = 2 * ni + a + b;
                const Rational lead = 2 * (ni + 1) * (ni + a + b + 1) * s;
                if (is_zero(lead))
                    throw SingularParameterError("degenerate Jacobi parameters " + family.describe() +
                                                ": recurrence normaliser vanishes at n=" + std::to_string(i));
                const Poly linear(std::vector<Rational>{(s + 1) * (a * a - b * b), (s + 1) * s * (s + 2)});
                next = (linear * cur - prev * (2 * (ni + a) * (ni + b) * (s + 2))) / lead;
                break;
            }
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Poly expansion_basis(const OrthoFamily& family, std::size_t j) {
    Poly p = classical_orthopoly(family, static_cast<long>(j));
    if (family.kind == OrthoFamily::Kind::Jacobi) p = p.compose_affine(-2, 1);
    return p;
}

std::vector<Rational> monomial_expand(const OrthoFamily& family, std::size_t ell) {
    std::vector<Rational> c(ell + 1);
    const Rational ell_fact(factorial(ell));
    const long l = static_cast<long>(ell);
    switch (family.kind) {
        case OrthoFamily::Kind::Hermite:
            for (std::size_t j = 0; 2 * j <= ell; ++j)
                c[ell - 2 * j] = Rational(binomial(ell, 2 * j) * factorial(2 * j)) / Rational(factorial(j)) /
                                 pow(Rational(2), l);
            break;
        case OrthoFamily::Kind::Laguerre:
            for (std::size_t j = 0; j <= ell; ++j) {
                const Rational sign = (j % 2 == 0) ? 1 : -1;
                c[j] = sign * ell_fact * generalized_binomial(l + family.alpha, l - static_cast<long>(j));
            }
            break;
        case OrthoFamily::Kind::Jacobi: {
            const Rational ab = family.alpha + family.beta;
            for (std::size_t j = 0; j <= ell; ++j) {
                const Rational jj = static_cast<unsigned long>(j);
                const Rational rising = rising_factorial(ab + jj + 1, ell + 1);
                if (is_zero(rising))
                    throw SingularParameterError("degenerate Jacobi parameters " + family.describe() +
                                                ": rising factorial vanishes");
                const Rational sign = (j % 2 == 0) ? 1 : -1;
                c[j] = sign * ell_fact * generalized_binomial(l + family.alpha, l - static_cast<long>(j)) *
                       (ab + 2 * jj + 1) / rising;
            }
            break;
        }
    }
    return c;
}

namespace {

// u^shift * prod_i 1/(1 - nodes[i] u), as a series in u to the given order.
ScalarSeries reciprocal_factorial_at_infinity(std::span<const Rational> nodes, std::size_t shift, std::size_t order) {
    ScalarSeries acc(order);
    if (shift > order) return acc;
    acc[shift] = 1;
    for (const Rational& node : nodes) {
        ScalarSeries geometric(order);
        Rational p = 1;
        for (std::size_t i = 0; i <= order; ++i) {
            geometric[i] = p;
            p *= node;
        }
        acc = series_mul(acc, geometric);
    }
    return acc;
}

}  // namespace

ConnectionMatrix gen_lah(std::span<const Rational> alpha_star, std::span<const Rational> beta_star, std::size_t m_max) {
    const std::size_t r = alpha_star.size();
    if (r > m_max)
        throw std::invalid_argument("generalised Lah numbers: r = " + std::to_string(r) + " exceeds truncation " +
                                    std::to_string(m_max));
    if (beta_star.size() < m_max)
        throw std::invalid_argument("generalised Lah numbers up to m = " + std::to_string(m_max) + " need " +
                                    std::to_string(m_max) + " beta nodes, got " + std::to_string(beta_star.size()));

    std::vector<ScalarSeries> targets;
    targets.reserve(m_max + 1);
    for (std::size_t m = 0; m <= m_max; ++m)
        targets.push_back(reciprocal_factorial_at_infinity(beta_star.first(m), m, m_max));

    ConnectionMatrix C(MatrixKind::GenLah, m_max + 1, r + 1);
    for (std::size_t j = 0; j <= r; ++j) {
        ScalarSeries rest = reciprocal_factorial_at_infinity(alpha_star.first(j), j, m_max);
        for (std::size_t m = j; m <= m_max; ++m) {
            const Rational c = rest[m];
            C.at(m, j) = c;
            if (!is_zero(c)) rest = rest - series_scale(targets[m], c);
        }
    }
    return C;
}

std::string to_string(FactorialMode mode) {
    return mode == FactorialMode::MkFact ? "mk-fact" : "m-times-kfact";
}

std::vector<Rational> bbh_basis(const Rational& x, unsigned k, unsigned m, const Rational& a, const Rational& b,
                                std::size_t order, FactorialMode mode) {
    const Rational denom = 1 + a * x;
    if (is_zero(denom)) throw SingularParameterError("1 + a x = 0 makes the BBH generating function singular");

    const Rational weight = pow(pow(Rational(2), 1 - static_cast<long>(k)) * pow(x / denom, k), m);
    const Rational norm = mode == FactorialMode::MkFact
                              ? Rational(1 / Rational(factorial(static_cast<std::uint64_t>(m) * k)))
                              : Rational(1 / (Rational(m) * Rational(factorial(k))));

    const std::size_t lead = static_cast<std::size_t>(k) * m;
    ScalarSeries f = series_scale(series_shift(series_exp_linear((1 + b * x) / denom, order), lead), weight * norm);

    std::vector<Rational> p;
    p.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n) p.push_back(extract_scalar(f, n));
    return p;
}

}  // namespace apostol
