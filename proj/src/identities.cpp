#include "apostol/identities.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace apostol {

namespace {

using Seq = std::vector<Poly>;

Seq engine(const FamilyParams& p, std::size_t order) { return family_polynomials(p, order).polys; }

Rational ratio_of_factorials(std::size_t top, std::size_t bottom) {
    return Rational(Integer(factorial(top) / factorial(bottom)));
}

Rational binom(std::size_t n, std::size_t k) { return Rational(binomial(n, k)); }

std::string join_rationals(const std::vector<Rational>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s + "]";
}

std::vector<Rational> powers_of(const std::vector<Rational>& v, unsigned e) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const Rational& a : v) out.push_back(pow(a, static_cast<long>(e)));
    return out;
}

// Sum over s in {0..modulus-1}^r of prod_i weights[i]^{s_i} * term(s_1 + ... + s_r).
template <class T>
T multi_index_sum(const std::vector<Rational>& weights, unsigned modulus, const std::function<T(unsigned)>& term) {
    T acc{};
    std::function<void(std::size_t, unsigned, const Rational&)> walk = [&](std::size_t i, unsigned total,
                                                                           const Rational& w) {
        if (i == weights.size()) {
            acc += term(total) * w;
            return;
        }
        Rational wi = 1;
        for (unsigned s = 0; s < modulus; ++s) {
            walk(i + 1, total + s, w * wi);
            wi *= weights[i];
        }
    };
    walk(0, 0, Rational(1));
    return acc;
}

IdentityReport check_addition(const FamilyParams& p, const StructuralAux& aux, std::size_t N) {
    const Seq M = engine(p, N);
    Seq lhs, rhs;
    for (std::size_t n = 0; n <= N; ++n) {
        lhs.push_back(M[n].compose_affine(1, aux.y));
        Poly sum;
        for (std::size_t l = 0; l <= n; ++l)
            sum += Poly::monomial(binom(n, l) * pow(p.log_c, static_cast<long>(n - l)) * M[l](aux.y), n - l);
        rhs.push_back(std::move(sum));
    }
    return make_report({IdentityKind::Addition}, p.describe() + " y=" + to_string(aux.y), N, compare(lhs, rhs));
}

IdentityReport check_shift(const FamilyParams& p, std::size_t N) {
    const Seq M = engine(p, N);
    FamilyParams q = p;
    q.log_a = p.log_a - p.log_c;
    q.log_b = p.log_b - p.log_c;
    const Seq rhs = engine(q, N);
    const Rational r = static_cast<unsigned long>(p.r());
    Seq lhs;
    for (const Poly& m : M) lhs.push_back(m.compose_affine(1, r));
    return make_report({IdentityKind::Shift}, p.describe(), N, compare(lhs, rhs));
}

IdentityReport check_expansion(const FamilyParams& p, std::size_t N) {
    const Seq M = engine(p, N);
    const std::vector<Rational> nums = family_numbers(p, N);
    Seq by_power, by_index;
    for (std::size_t n = 0; n <= N; ++n) {
        Poly a, b;
        for (std::size_t l = 0; l <= n; ++l) {
            a += Poly::monomial(binom(n, l) * pow(p.log_c, static_cast<long>(n - l)) * nums[l], n - l);
            b += Poly::monomial(binom(n, n - l) * pow(p.log_c, static_cast<long>(l)) * nums[n - l], l);
        }
        by_power.push_back(std::move(a));
        by_index.push_back(std::move(b));
    }
    Residual res = compare(M, by_power);
    std::vector<std::string> notes;
    const Residual second = compare(M, by_index);
    notes.push_back("sum over numbers M_l(0): " + describe(res));
    notes.push_back("sum over powers x^l: " + describe(second));
    if (is_exact_zero(res)) res = second;
    return make_report({IdentityKind::Expansion}, p.describe(), N, std::move(res), std::move(notes));
}

IdentityReport check_reflection(const FamilyParams& p, std::size_t N) {
    if (p.m != 1) throw std::invalid_argument("reflection needs m = 1, got m = " + std::to_string(p.m));
    std::vector<Rational> inv;
    Rational prod = 1;
    for (const Rational& a : p.alphas) {
        if (is_zero(a)) throw std::invalid_argument("reflection needs nonzero alphas");
        inv.push_back(1 / a);
        prod *= a;
    }
    FamilyParams q = p;
    q.alphas = inv;
    const Seq M = engine(p, N);
    const Seq Minv = engine(q, N);
    const std::size_t r = p.r();
    const Rational rate = static_cast<unsigned long>(r) * (p.log_a + p.log_b - p.log_c);

    Seq lhs, rhs;
    for (std::size_t n = 0; n <= N; ++n) {
        lhs.push_back(M[n].compose_affine(-1, static_cast<unsigned long>(r)));
        Poly sum;
        for (std::size_t j = 0; j <= n; ++j) sum += Minv[j] * (binom(n, j) * pow(rate, static_cast<long>(n - j)));
        // r (1 - k) has the parity of r (1 + k).
        const bool odd = (r * (1 + p.k) + n) % 2 == 1;
        rhs.push_back(sum * ((odd ? Rational(-1) : Rational(1)) / prod));
    }
    return make_report({IdentityKind::Reflection}, p.describe(), N, compare(lhs, rhs));
}

FamilyParams with_alphas(const FamilyParams& p, std::vector<Rational> alphas) {
    FamilyParams q = p;
    q.alphas = std::move(alphas);
    return q;
}

IdentityReport check_convolution(const FamilyParams& p, const StructuralAux& aux, std::size_t N) {
    if (aux.split > p.r()) throw std::invalid_argument("convolution split exceeds r");
    const auto mid = p.alphas.begin() + static_cast<std::ptrdiff_t>(aux.split);
    const auto left = family_numbers(with_alphas(p, {p.alphas.begin(), mid}), N);
    const auto right = family_numbers(with_alphas(p, {mid, p.alphas.end()}), N);
    const auto whole = family_numbers(p, N);
    std::vector<Rational> rhs;
    for (std::size_t n = 0; n <= N; ++n) {
        Rational s = 0;
        for (std::size_t l = 0; l <= n; ++l) s += binom(n, l) * left[l] * right[n - l];
        rhs.push_back(s);
    }
    return make_report({IdentityKind::Convolution}, p.describe() + " split=" + std::to_string(aux.split), N,
                       compare(whole, rhs));
}

IdentityReport check_multinomial(const FamilyParams& p, const StructuralAux& aux, std::size_t N) {
    if (aux.blocks.size() != aux.xs.size() || aux.blocks.empty())
        throw std::invalid_argument("multinomial check needs one argument per block");
    if (std::accumulate(aux.blocks.begin(), aux.blocks.end(), std::size_t{0}) != p.r())
        throw std::invalid_argument("multinomial blocks must sum to r");

    // values[b][j] = M_j(x_b) / j! for the b-th block of alphas.
    std::vector<std::vector<Rational>> values;
    std::size_t at = 0;
    for (std::size_t b = 0; b < aux.blocks.size(); ++b) {
        const auto first = p.alphas.begin() + static_cast<std::ptrdiff_t>(at);
        at += aux.blocks[b];
        const Seq M = engine(with_alphas(p, {first, p.alphas.begin() + static_cast<std::ptrdiff_t>(at)}), N);
        std::vector<Rational> v;
        for (std::size_t j = 0; j <= N; ++j) v.push_back(M[j](aux.xs[b]) / Rational(factorial(j)));
        values.push_back(std::move(v));
    }

    const Rational x_total = std::accumulate(aux.xs.begin(), aux.xs.end(), Rational(0));
    const Seq whole = engine(p, N);
    std::vector<Rational> lhs, rhs;
    for (std::size_t n = 0; n <= N; ++n) {
        // Sum over compositions (k_1, ..., k_B) of n.
        Rational sum = 0;
        std::function<void(std::size_t, std::size_t, const Rational&)> walk = [&](std::size_t b, std::size_t left,
                                                                                  const Rational& acc) {
            if (b + 1 == values.size()) {
                sum += acc * values[b][left];
                return;
            }
            for (std::size_t j = 0; j <= left; ++j) walk(b + 1, left - j, acc * values[b][j]);
        };
        walk(0, n, Rational(1));
        lhs.push_back(sum);
        rhs.push_back(whole[n](x_total) / Rational(factorial(n)));
    }

    std::string blocks = "[";
    for (std::size_t b = 0; b < aux.blocks.size(); ++b) blocks += (b ? "," : "") + std::to_string(aux.blocks[b]);
    blocks += "]";
    return make_report({IdentityKind::Multinomial}, p.describe() + " blocks=" + blocks + " xs=" + join_rationals(aux.xs),
                       N, compare(lhs, rhs));
}

}  // namespace

IdentityReport check_structural(IdentityKind id, const FamilyParams& p, const StructuralAux& aux, std::size_t order) {
    p.validate();
    switch (id) {
        case IdentityKind::Addition: return check_addition(p, aux, order);
        case IdentityKind::Shift: return check_shift(p, order);
        case IdentityKind::Expansion: return check_expansion(p, order);
        case IdentityKind::Reflection: return check_reflection(p, order);
        case IdentityKind::Convolution: return check_convolution(p, aux, order);
        case IdentityKind::Multinomial: return check_multinomial(p, aux, order);
        default: throw std::invalid_argument(IdentityId{id}.str() + " is not a structural identity");
    }
}

IdentityReport check_multiplication(IdentityKind id, const FamilyParams& p, const MultiplicationArgs& args) {
    p.validate();
    if (p.m != 1 || p.log_a != 0 || p.log_b != 1 || p.log_c != 1)
        throw std::invalid_argument("multiplication theorems need m = 1, a = 1, b = c = e");
    if (args.n == 0 || args.q == 0) throw std::invalid_argument("moduli must be positive");
    const bool lowered = id == IdentityKind::NorlundB || id == IdentityKind::CarlitzB;
    if (lowered && p.k == 0) throw std::invalid_argument(IdentityId{id}.str() + " needs k >= 1");

    const unsigned n = args.n;
    const unsigned q = args.q;
    const std::size_t L = args.ell_max;
    const std::size_t r = p.r();
    const long rk = static_cast<long>(r * p.k);
    const Rational nn = n, qq = q;
    const std::size_t extra = lowered ? r : 0;
    const unsigned k_rhs = lowered ? p.k - 1 : p.k;
    const Rational two_r = lowered ? pow(Rational(2), -static_cast<long>(r)) : Rational(1);

    std::vector<std::string> notes;
    std::string params = p.describe() + " n=" + std::to_string(n);
    Seq lhs, rhs;

    if (id == IdentityKind::NorlundA || id == IdentityKind::NorlundB) {
        const Seq Mn = engine(FamilyParams::unified(p.k, powers_of(p.alphas, n)), L + extra);
        const Seq Mrhs = engine(FamilyParams::unified(k_rhs, p.alphas), L);
        for (std::size_t l = 0; l <= L; ++l) {
            lhs.push_back(multi_index_sum<Poly>(p.alphas, n, [&](unsigned S) {
                return Mn[l + extra].compose_affine(1, Rational(S) / nn);
            }));
            const long e = rk - static_cast<long>(l + extra);
            rhs.push_back(Mrhs[l].compose_affine(nn, 0) * (pow(nn, e) * two_r * ratio_of_factorials(l + extra, l)));
        }
        notes.push_back("argument of the right side read as n x");
        if (lowered) notes.push_back("right side carries 2^{-r} (l+r)!/l!; the printed statement omits 2^{-r}");
    } else if (id == IdentityKind::CarlitzA || id == IdentityKind::CarlitzB) {
        params += " q=" + std::to_string(q);
        const Seq Mn = engine(FamilyParams::unified(p.k, powers_of(p.alphas, n)), L + extra);
        const Seq Mq = engine(FamilyParams::unified(k_rhs, powers_of(p.alphas, q)), L);
        const std::vector<Rational> wq = powers_of(p.alphas, q);
        const std::vector<Rational> wn = powers_of(p.alphas, n);
        for (std::size_t l = 0; l <= L; ++l) {
            const Poly left = multi_index_sum<Poly>(wq, n, [&](unsigned S) {
                return Mn[l + extra].compose_affine(1 / nn, qq * S / nn);
            });
            lhs.push_back(left * pow(nn, static_cast<long>(l + extra)));
            const Poly right = multi_index_sum<Poly>(wn, q, [&](unsigned P) {
                return Mq[l].compose_affine(1 / qq, nn * P / qq);
            });
            const long qe = static_cast<long>(l) - static_cast<long>(r * k_rhs);
            rhs.push_back(right * (pow(qq, qe) * pow(nn, rk) * two_r * ratio_of_factorials(l + extra, l)));
        }
        if (lowered) notes.push_back("right side carries (l+r)!/l!; the printed statement omits it");
    } else {
        throw std::invalid_argument(IdentityId{id}.str() + " is not a multiplication theorem");
    }
    return make_report({id}, params, L, compare(lhs, rhs), std::move(notes));
}

IdentityReport check_connection(IdentityKind id, const FamilyParams& p, const ConnectionAux& aux, std::size_t N) {
    p.validate();
    const Seq M = engine(p, N);
    const std::vector<Rational> nums = family_numbers(p, N);
    const Rational& lc = p.log_c;
    std::string params = p.describe();

    // Expansion of x^l in the target basis, as polynomials in x.
    std::vector<Poly> monomial_in_basis(N + 1);
    switch (id) {
        case IdentityKind::GenStirling:
        case IdentityKind::Stirling: {
            NodeSequence nodes = aux.nodes;
            if (id == IdentityKind::Stirling) {
                nodes.clear();
                for (std::size_t i = 0; i < N; ++i) nodes.emplace_back(static_cast<unsigned long>(i));
            } else {
                params += " nodes=" + join_rationals(nodes);
            }
            const ConnectionMatrix S = gen_stirling_matrix(StirlingKind::Second, nodes, N);
            for (std::size_t l = 0; l <= N; ++l)
                for (std::size_t j = 0; j <= l; ++j)
                    if (!is_zero(S.at(l, j))) monomial_in_basis[l] += falling_factorial_poly(nodes, j) * S.at(l, j);
            break;
        }
        case IdentityKind::Laguerre:
        case IdentityKind::Jacobi:
        case IdentityKind::Hermite: {
            OrthoFamily fam = aux.ortho;
            fam.kind = id == IdentityKind::Hermite    ? OrthoFamily::Kind::Hermite
                       : id == IdentityKind::Laguerre ? OrthoFamily::Kind::Laguerre
                                                      : OrthoFamily::Kind::Jacobi;
            params += " " + fam.describe();
            std::vector<Poly> basis;
            for (std::size_t j = 0; j <= N; ++j) basis.push_back(expansion_basis(fam, j));
            for (std::size_t l = 0; l <= N; ++l) {
                const std::vector<Rational> c = monomial_expand(fam, l);
                for (std::size_t j = 0; j <= l; ++j)
                    if (!is_zero(c[j])) monomial_in_basis[l] += basis[j] * c[j];
            }
            break;
        }
        default: throw std::invalid_argument(IdentityId{id}.str() + " is not a connection identity");
    }

    Seq rhs;
    for (std::size_t n = 0; n <= N; ++n) {
        Poly sum;
        for (std::size_t l = 0; l <= n; ++l) {
            const Rational w = binom(n, n - l) * pow(lc, static_cast<long>(l)) * nums[n - l];
            if (!is_zero(w)) sum += monomial_in_basis[l] * w;
        }
        rhs.push_back(std::move(sum));
    }
    return make_report({id}, params, N, compare(M, rhs));
}

namespace {

Residual bbh_residual(const BbhSample& s, std::size_t N, FactorialMode mode) {
    const std::size_t r = s.alphas.size();
    const std::vector<Rational> lhs = bbh_basis(s.x, s.k, static_cast<unsigned>(r), s.a, s.b, N, mode);

    const Rational denom = 1 + s.a * s.x;
    const Rational z = (1 + s.b * s.x) / denom;
    const Rational w = s.x / denom;
    Rational prod = 1;
    std::vector<Rational> inv;
    for (const Rational& a : s.alphas) {
        if (is_zero(a)) throw std::invalid_argument("BBH check needs nonzero alphas");
        prod *= a;
        inv.push_back(1 / a);
    }
    const ConnectionMatrix st = gen_stirling_matrix(StirlingKind::First, inv, r);
    const Seq M = engine(FamilyParams::unified(s.k, s.alphas), N);
    std::vector<Rational> Mz;
    for (const Poly& m : M) Mz.push_back(m(z));

    const Rational norm = 1 / (Rational(static_cast<unsigned long>(r)) * Rational(factorial(s.k)));
    const Rational front = norm * pow(w, static_cast<long>(r * s.k)) * prod;
    std::vector<Rational> rhs;
    for (std::size_t n = 0; n <= N; ++n) {
        Rational sum = 0;
        for (std::size_t j = 0; j <= r; ++j) {
            if (is_zero(st.at(r, j))) continue;
            Rational inner = 0;
            for (std::size_t l = 0; l <= n; ++l)
                inner += binom(n, l) * pow(Rational(static_cast<unsigned long>(j)), static_cast<long>(n - l)) * Mz[l];
            sum += st.at(r, j) * inner;
        }
        rhs.push_back(front * sum);
    }
    return compare(lhs, rhs);
}

}  // namespace

IdentityReport check_bbh(const BbhSample& s, std::size_t order) {
    if (s.alphas.empty()) throw std::invalid_argument("BBH check needs r >= 1");
    std::ostringstream params;
    params << "r=" << s.alphas.size() << " k=" << s.k << " alphas=" << join_rationals(s.alphas)
           << " x=" << to_string(s.x) << " a=" << to_string(s.a) << " b=" << to_string(s.b)
           << " factorial-mode=" << to_string(s.mode);
    Residual res = bbh_residual(s, order, s.mode);
    const FactorialMode other =
        s.mode == FactorialMode::MkFact ? FactorialMode::MTimesKFact : FactorialMode::MkFact;
    std::vector<std::string> notes{"right side normaliser read as 1/(r k!)",
                                   "under factorial-mode " + to_string(other) + ": " +
                                       describe(bbh_residual(s, order, other))};
    return make_report({IdentityKind::Bbh}, params.str(), order, std::move(res), std::move(notes));
}

namespace {

// Right side of the Lah expansion truncated at m <= T, as a polynomial in x.
// `shift` is k (m - r) for the derived factorial, k (m - 1) for the printed one.
Poly lah_rhs(const LahSample& s, unsigned T, const std::function<std::size_t(std::size_t)>& fact_index,
             const ConnectionMatrix& C) {
    const std::size_t r = s.alphas.size();
    Rational prod_alpha = 1;
    for (const Rational& a : s.alphas) prod_alpha *= a;
    Poly sum;
    Rational prod_beta = 1;
    for (std::size_t i = 0; i < r; ++i) prod_beta *= s.betas[i];
    for (std::size_t m = r; m <= T; ++m) {
        if (m > r) prod_beta *= s.betas[m - 1];
        const Rational c = C.at(m, r);
        if (is_zero(c)) continue;
        const std::size_t index = s.n + s.k * (m - r);
        const Seq Mm = engine(FamilyParams::unified(s.k, {s.betas.begin(), s.betas.begin() + static_cast<std::ptrdiff_t>(m)}),
                              index);
        const long two_e = (1 - static_cast<long>(s.k)) * (static_cast<long>(r) - static_cast<long>(m));
        sum += Mm[index] * (pow(Rational(2), two_e) * prod_beta * c / Rational(factorial(fact_index(m))));
    }
    return sum * (Rational(factorial(s.n)) / prod_alpha);
}

}  // namespace

IdentityReport check_lah(const LahSample& s) {
    const std::size_t r = s.alphas.size();
    if (r == 0) throw std::invalid_argument("Lah expansion needs r >= 1");
    if (s.truncations.empty()) throw std::invalid_argument("Lah expansion needs at least one truncation");
    for (unsigned T : s.truncations)
        if (T < r)
            throw std::invalid_argument("truncation M_max = " + std::to_string(T) + " is below r = " +
                                        std::to_string(r));
    const unsigned top = *std::max_element(s.truncations.begin(), s.truncations.end());
    if (s.betas.size() < top)
        throw std::invalid_argument("Lah expansion to M_max = " + std::to_string(top) + " needs that many betas");
    for (const Rational& v : s.alphas)
        if (is_zero(v)) throw std::invalid_argument("Lah expansion needs nonzero alphas");
    for (std::size_t i = 0; i < top; ++i)
        if (is_zero(s.betas[i])) throw std::invalid_argument("Lah expansion needs nonzero betas");

    std::vector<Rational> a_star, b_star;
    for (const Rational& v : s.alphas) a_star.push_back(1 / v);
    for (std::size_t i = 0; i < top; ++i) b_star.push_back(1 / s.betas[i]);
    const ConnectionMatrix C = gen_lah(a_star, b_star, top);

    const Poly lhs = engine(FamilyParams::unified(s.k, s.alphas), s.n)[s.n];
    const bool terminating = std::equal(s.alphas.begin(), s.alphas.end(), s.betas.begin());

    const auto derived = [&](std::size_t m) { return s.n + s.k * (m - r); };
    const auto printed = [&](std::size_t m) { return s.n + s.k * (m - 1); };

    std::ostringstream params;
    params << "r=" << r << " k=" << s.k << " alphas=" << join_rationals(s.alphas)
           << " betas=" << join_rationals({s.betas.begin(), s.betas.begin() + top}) << " n=" << s.n
           << " x=" << to_string(s.x);

    std::vector<std::string> notes{"factorial in the sum read as (n + k(m - r))!"};
    Residual res;
    if (terminating) {
        notes.push_back("leading betas equal the alphas: the sum stops at m = r");
        res = compare(std::vector<Poly>{lhs}, std::vector<Poly>{lah_rhs(s, top, derived, C)});
        notes.push_back("with (n + k(m - 1))!: " +
                        describe(compare(std::vector<Poly>{lhs}, std::vector<Poly>{lah_rhs(s, top, printed, C)})));
    } else {
        NumericDiagnostic diag;
        NumericDiagnostic printed_diag;
        const Rational at_x = lhs(s.x);
        for (unsigned T : s.truncations) {
            const Rational d = at_x - lah_rhs(s, T, derived, C)(s.x);
            const Rational dp = at_x - lah_rhs(s, T, printed, C)(s.x);
            diag.truncations.push_back(T);
            diag.residuals.push_back(d);
            diag.magnitudes.push_back(std::abs(d.get_d()));
            printed_diag.truncations.push_back(T);
            printed_diag.residuals.push_back(dp);
            printed_diag.magnitudes.push_back(std::abs(dp.get_d()));
        }
        notes.push_back("with (n + k(m - 1))!: " + describe(printed_diag));
        if (std::all_of(diag.residuals.begin(), diag.residuals.end(), [](const Rational& v) { return is_zero(v); }))
            res = ExactZero{};
        else
            res = std::move(diag);
    }
    return make_report({IdentityKind::Lah}, params.str(), s.n, std::move(res), std::move(notes));
}

}  // namespace apostol
