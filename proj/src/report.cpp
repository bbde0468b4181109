#include "apostol/report.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace apostol {

std::string IdentityId::str() const {
    switch (kind) {
        case IdentityKind::Addition: return "ADD_11";
        case IdentityKind::Shift: return "SHIFT_12";
        case IdentityKind::Expansion: return "EXPAND_13_14";
        case IdentityKind::Reflection: return "REFLECT_15";
        case IdentityKind::Convolution: return "CONV_16";
        case IdentityKind::Multinomial: return "MULTINOMIAL_17";
        case IdentityKind::NorlundA: return "NORLUND_18";
        case IdentityKind::NorlundB: return "NORLUND_19";
        case IdentityKind::CarlitzA: return "CARLITZ_20";
        case IdentityKind::CarlitzB: return "CARLITZ_21";
        case IdentityKind::GenStirling: return "GENSTIRLING_22";
        case IdentityKind::Stirling: return "STIRLING_23";
        case IdentityKind::Laguerre: return "LAGUERRE_24";
        case IdentityKind::Jacobi: return "JACOBI_25";
        case IdentityKind::Hermite: return "HERMITE_26";
        case IdentityKind::Lah: return "LAH_9999";
        case IdentityKind::Bbh: return "BBH_28";
        case IdentityKind::Table1Row: return "TABLE1_ROW_" + std::to_string(row);
    }
    return "UNKNOWN";
}

std::string equation_text(const IdentityId& id) {
    switch (id.kind) {
        case IdentityKind::Addition:
            return "M_n(x+y) = sum_l C(n,l) x^(n-l) (ln c)^(n-l) M_l(y)";
        case IdentityKind::Shift:
            return "M_n(x+r; a,b,c) = M_n(x; a/c, b/c, c)";
        case IdentityKind::Expansion:
            return "M_n(x) = sum_l C(n,l) x^(n-l) (ln c)^(n-l) M_l(0) = sum_l C(n,n-l) x^l (ln c)^l M_(n-l)(0)";
        case IdentityKind::Reflection:
            return "M^[0,r]_n(r-x; alpha) = (-1)^(r(1-k)+n) / prod(alpha) * sum_j C(n,j) (r ln(ab/c))^(n-j) "
                   "M^[0,r]_j(x; 1/alpha)";
        case IdentityKind::Convolution:
            return "M^[m-1,r]_n(0; alpha_r) = sum_l C(n,l) M^[m-1,s]_l(0; alpha_s) M^[m-1,r-s]_(n-l)(0; alpha_(r-s))";
        case IdentityKind::Multinomial:
            return "sum_(k1+..+kl=n) prod_i M^[m-1,r_i]_(k_i)(x_i) / (k_1!..k_l!) = M^[m-1,|r|]_n(|x|) / n!";
        case IdentityKind::NorlundA:
            return "sum_s prod_i alpha_i^(s_i) M_l(x + |s|/n; alpha^n) = n^(rk-l) M_l(nx; alpha)";
        case IdentityKind::NorlundB:
            return "sum_s prod_i alpha_i^(s_i) M_(r+l)(x + |s|/n; k; alpha^n) = n^(r(k-1)-l) 2^(-r) (l+r)!/l! "
                   "M_l(nx; k-1; alpha)";
        case IdentityKind::CarlitzA:
            return "n^l sum_s prod alpha_i^(q s_i) M_l(x/n + q|s|/n; alpha^n) = q^(l-rk) n^(rk) sum_p prod "
                   "alpha_i^(n p_i) M_l(x/q + n|p|/q; alpha^q)";
        case IdentityKind::CarlitzB:
            return "n^(l+r) sum_s prod alpha_i^(q s_i) M_(l+r)(x/n + q|s|/n; k; alpha^n) = (l+r)!/l! q^(l-r(k-1)) "
                   "n^(rk) 2^(-r) sum_p prod alpha_i^(n p_i) M_l(x/q + n|p|/q; k-1; alpha^q)";
        case IdentityKind::GenStirling:
            return "M_n(x) = sum_j (x; nodes)_j sum_(l>=j) C(n,n-l) (ln c)^l S(l,j; nodes) M_(n-l)(0)";
        case IdentityKind::Stirling:
            return "M_n(x) = sum_j (x)_j sum_(l>=j) C(n,n-l) (ln c)^l S(l,j) M_(n-l)(0)";
        case IdentityKind::Laguerre:
            return "M_n(x) = sum_j sum_(l>=j) (-1)^j l! C(n,n-l) (ln c)^l C(l+a,l-j) L^(a)_j(x) M_(n-l)(0)";
        case IdentityKind::Jacobi:
            return "M_n(x) = sum_j sum_(l>=j) (-1)^j l! C(n,n-l) (ln c)^l C(l+a,l-j) (a+b+2j+1)/(a+b+j+1)_(l+1) "
                   "P^(a,b)_j(1-2x) M_(n-l)(0)";
        case IdentityKind::Hermite:
            return "M_n(x) = sum_j sum_(l>=2j) 2^(-l) C(n,n-l) C(l,2j) (2j)!/j! (ln c)^l H_(l-2j)(x) M_(n-l)(0)";
        case IdentityKind::Lah:
            return "M^(r)_n(x; k; alpha) = n!/prod(alpha) sum_(m>=r) 2^((1-k)(r-m)) prod(beta_m) / (n+k(m-r))! "
                   "C(m,r; 1/alpha; 1/beta) M^(m)_(n+k(m-r))(x; k; beta_m)";
        case IdentityKind::Bbh:
            return "p^(a,b)_n(x; k, r) = prod(alpha)/(r k!) (x/(1+ax))^(rk) sum_j s(r,j; 1/alpha) sum_l j^(n-l) "
                   "C(n,l) M^(r)_l((1+bx)/(1+ax); k; alpha)";
        case IdentityKind::Table1Row:
            return "parameter reduction, row " + std::to_string(id.row);
    }
    return "";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

IdentityReport make_report(IdentityId id, std::string params, std::size_t order, Residual residual,
                           std::vector<std::string> notes) {
    IdentityReport rep;
    rep.id = id;
    rep.params = std::move(params);
    rep.order = order;
    rep.residual = std::move(residual);
    rep.notes = std::move(notes);
    if (std::holds_alternative<ExactZero>(rep.residual)) rep.verdict = Verdict::Pass;
    else if (std::holds_alternative<FirstMismatch>(rep.residual)) rep.verdict = Verdict::Fail;
    else rep.verdict = Verdict::Inconclusive;
    return rep;
}

Residual compare(const std::vector<Poly>& lhs, const std::vector<Poly>& rhs) {
    if (lhs.size() != rhs.size()) throw std::invalid_argument("compare: sequences of different length");
    for (std::size_t n = 0; n < lhs.size(); ++n) {
        if (lhs[n] == rhs[n]) continue;
        const std::size_t top = static_cast<std::size_t>(std::max(lhs[n].degree(), rhs[n].degree()));
        for (std::size_t p = 0; p <= top; ++p)
            if (lhs[n].coeff(p) != rhs[n].coeff(p)) return FirstMismatch{n, p, lhs[n].coeff(p), rhs[n].coeff(p)};
    }
    return ExactZero{};
}

Residual compare(const std::vector<Rational>& lhs, const std::vector<Rational>& rhs) {
    if (lhs.size() != rhs.size()) throw std::invalid_argument("compare: sequences of different length");
    for (std::size_t n = 0; n < lhs.size(); ++n)
        if (lhs[n] != rhs[n]) return FirstMismatch{n, 0, lhs[n], rhs[n]};
    return ExactZero{};
}

std::string describe(const Residual& r) {
    if (std::holds_alternative<ExactZero>(r)) return "exact zero";
    if (const auto* m = std::get_if<FirstMismatch>(&r))
        return "first mismatch at n=" + std::to_string(m->n) + ", x^" + std::to_string(m->power) + ": lhs " +
               to_string(m->lhs) + " vs rhs " + to_string(m->rhs);
    const auto& d = std::get<NumericDiagnostic>(r);
    std::string s = "residuals";
    for (std::size_t i = 0; i < d.truncations.size(); ++i) {
        char buf[64];
        std::snprintf(buf, sizeof buf, " M<=%u:%.3e", d.truncations[i], d.magnitudes[i]);
        s += buf;
    }
    return s;
}

}  // namespace apostol
