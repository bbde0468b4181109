#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "apostol/identities.hpp"
#include "oracles.hpp"

using namespace apostol;

namespace {

FamilyParams generic(unsigned k, unsigned m, std::vector<Rational> alphas) {
    FamilyParams p;
    p.k = k;
    p.m = m;
    p.alphas = std::move(alphas);
    p.log_a = Rational(2, 3);
    p.log_b = Rational(-1, 2);
    p.log_c = Rational(7, 4);
    return p;
}

bool any_fail(const std::vector<IdentityReport>& v) {
    return std::any_of(v.begin(), v.end(), [](const IdentityReport& r) { return r.verdict == Verdict::Fail; });
}

}  // namespace

TEST_CASE("structural identities at fixed parameters") {
    StructuralAux aux;
    aux.y = Rational(-3, 5);
    aux.split = 1;
    aux.blocks = {1, 2};
    aux.xs = {Rational(1, 2), Rational(-2)};
    for (const auto& p : {generic(2, 2, {Rational(1), Rational(3), Rational(-1, 4)}),
                          generic(0, 3, {Rational(2), Rational(-5), Rational(1, 7)})}) {
        for (IdentityKind id : {IdentityKind::Addition, IdentityKind::Shift, IdentityKind::Expansion,
                                IdentityKind::Convolution, IdentityKind::Multinomial}) {
            CAPTURE(IdentityId{id}.str());
            CHECK(check_structural(id, p, aux, 10).verdict == Verdict::Pass);
        }
        FamilyParams p1 = p;
        p1.m = 1;
        CHECK(check_structural(IdentityKind::Reflection, p1, aux, 10).verdict == Verdict::Pass);
    }
    CHECK_THROWS_AS(check_structural(IdentityKind::Reflection, generic(1, 2, {Rational(2)}), aux, 4),
                    std::invalid_argument);
}

TEST_CASE("convolution may split off an empty product") {
    StructuralAux aux;
    const auto p = generic(1, 1, {Rational(2), Rational(3)});
    for (std::size_t split : {0u, 1u, 2u}) {
        aux.split = split;
        CHECK(check_structural(IdentityKind::Convolution, p, aux, 8).verdict == Verdict::Pass);
    }
}

TEST_CASE("multiplication theorems") {
    for (const auto& alphas : {std::vector<Rational>{1}, std::vector<Rational>{Rational(2), Rational(-1, 3)}})
        for (unsigned k : {1u, 2u})
            for (unsigned n : {2u, 3u})
                for (unsigned q : {2u, 3u}) {
                    MultiplicationArgs args{n, q, 6};
                    const auto p = FamilyParams::unified(k, alphas);
                    for (IdentityKind id : {IdentityKind::NorlundA, IdentityKind::NorlundB, IdentityKind::CarlitzA,
                                            IdentityKind::CarlitzB}) {
                        CAPTURE(IdentityId{id}.str());
                        CAPTURE(p.describe());
                        const bool lowered = id == IdentityKind::NorlundB || id == IdentityKind::CarlitzB;
                        // The lowered side is the k = 0 family at alpha = 1: a pole.
                        if (lowered && k == 1 && alphas.front() == 1)
                            CHECK_THROWS_AS(check_multiplication(id, p, args), PoleError);
                        else
                            CHECK(check_multiplication(id, p, args).verdict == Verdict::Pass);
                    }
                }
    CHECK_THROWS_AS(check_multiplication(IdentityKind::NorlundB, FamilyParams::unified(0, {Rational(2)}), {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_multiplication(IdentityKind::NorlundA, generic(1, 1, {Rational(2)}), {}),
                    std::invalid_argument);
}

TEST_CASE("Raabe spot value") {
    const auto B = family_polynomials(FamilyParams::bernoulli(), 2).polys;
    CHECK(B[2](Rational(0)) + B[2](Rational(1, 2)) == Rational(1, 12));
    CHECK(B[2] == oracle::bernoulli_polys(2)[2]);
}

TEST_CASE("connection formulas") {
    ConnectionAux aux;
    aux.nodes = {Rational(1, 2), Rational(-3), Rational(4), Rational(2, 7), Rational(0), Rational(-1), Rational(5, 3),
                 Rational(9)};
    for (const auto& p : {FamilyParams::bernoulli(), generic(1, 2, {Rational(-2), Rational(1, 3)})}) {
        CHECK(check_connection(IdentityKind::GenStirling, p, aux, 8).verdict == Verdict::Pass);
        CHECK(check_connection(IdentityKind::Stirling, p, aux, 8).verdict == Verdict::Pass);
        CHECK(check_connection(IdentityKind::Hermite, p, aux, 8).verdict == Verdict::Pass);
        for (const Rational& a : {Rational(0), Rational(1, 2)}) {
            aux.ortho = OrthoFamily::laguerre(a);
            CHECK(check_connection(IdentityKind::Laguerre, p, aux, 8).verdict == Verdict::Pass);
        }
        for (const auto& [a, b] : {std::pair<Rational, Rational>{0, 0}, {Rational(1, 2), Rational(1, 3)}}) {
            aux.ortho = OrthoFamily::jacobi(a, b);
            CHECK(check_connection(IdentityKind::Jacobi, p, aux, 8).verdict == Verdict::Pass);
        }
    }
    aux.nodes.resize(3);
    CHECK_THROWS_AS(check_connection(IdentityKind::GenStirling, FamilyParams::bernoulli(), aux, 8),
                    std::invalid_argument);
}

TEST_CASE("BBH relation selects one factorial reading") {
    BbhSample s;
    s.alphas = {Rational(3), Rational(-1, 2)};
    s.k = 2;
    s.x = Rational(1, 3);
    s.a = Rational(2);
    s.b = Rational(-1, 4);
    s.mode = FactorialMode::MTimesKFact;
    CHECK(check_bbh(s, 8).verdict == Verdict::Pass);
    s.mode = FactorialMode::MkFact;
    CHECK(check_bbh(s, 8).verdict == Verdict::Fail);
    // r = 1 cannot tell the readings apart.
    s.alphas = {Rational(3)};
    CHECK(check_bbh(s, 8).verdict == Verdict::Pass);
}

TEST_CASE("Lah expansion") {
    LahSample d;
    d.alphas = {Rational(2), Rational(-1, 3)};
    d.betas = {Rational(2), Rational(-1, 3), Rational(5), Rational(-4)};
    d.truncations = {4};
    d.x = Rational(3, 7);
    for (unsigned k : {0u, 1u})
        for (std::size_t n = 0; n <= 6; ++n) {
            d.k = k;
            d.n = n;
            const auto rep = check_lah(d);
            CHECK(rep.verdict == Verdict::Pass);
            CHECK(is_exact_zero(rep.residual));
        }

    LahSample g = d;
    g.k = 0;
    g.n = 3;
    g.betas = {Rational(3), Rational(-2), Rational(5), Rational(-4), Rational(1, 2), Rational(7), Rational(-1, 5),
               Rational(4), Rational(9), Rational(-6)};
    g.truncations = {4, 6, 8, 10};
    const auto rep = check_lah(g);
    REQUIRE(std::holds_alternative<NumericDiagnostic>(rep.residual));
    const auto& diag = std::get<NumericDiagnostic>(rep.residual);
    CHECK(diag.truncations == g.truncations);
    CHECK(diag.residuals.size() == 4);
    CHECK(rep.verdict == Verdict::Inconclusive);

    g.truncations = {1};
    CHECK_THROWS_AS(check_lah(g), std::invalid_argument);
}

TEST_CASE("suite is deterministic and sorted") {
    SuiteConfig c;
    c.order = 8;
    c.samples = 2;
    c.seed = 99;
    const auto a = run_suite(c);
    c.jobs = 3;
    const auto b = run_suite(c);
    REQUIRE(a.reports.size() == b.reports.size());
    for (std::size_t i = 0; i < a.reports.size(); ++i) {
        CHECK(a.reports[i].id == b.reports[i].id);
        CHECK(a.reports[i].sample == b.reports[i].sample);
        CHECK(a.reports[i].params == b.reports[i].params);
        CHECK(describe(a.reports[i].residual) == describe(b.reports[i].residual));
    }
    CHECK(std::is_sorted(a.reports.begin(), a.reports.end(), [](const IdentityReport& x, const IdentityReport& y) {
        return x.id != y.id ? x.id < y.id : x.sample < y.sample;
    }));
    CHECK_FALSE(any_fail(a.reports));
}

TEST_CASE("suite sizes") {
    SuiteConfig c;
    c.suite = Suite::Structural;
    c.samples = 5;
    c.order = 10;
    c.seed = 42;
    CHECK(run_suite(c).reports.size() == 30);
    c.samples = 0;
    CHECK(run_suite(c).reports.empty());
    CHECK_THROWS_AS(parse_suite("nope"), std::invalid_argument);
}

TEST_CASE("the structural suite notices a perturbed prefactor") {
    SuiteConfig c;
    c.suite = Suite::Structural;
    c.samples = 5;
    c.order = 10;
    CHECK_FALSE(any_fail(run_suite(c).reports));
    testing::PrefactorMutation mutate;
    CHECK(any_fail(run_suite(c).reports));
}
