#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apostol/family.hpp"
#include "apostol/reference.hpp"
#include "apostol/table1.hpp"
#include "oracles.hpp"

using namespace apostol;

TEST_CASE("reference families against the recurrence oracles") {
    ReferenceArgs a;
    CHECK(reference_family(ReferenceKind::ClassicalBernoulli, a, 10) == oracle::bernoulli_polys(10));
    CHECK(reference_family(ReferenceKind::ClassicalEuler, a, 8) == oracle::euler_polys(8));
    CHECK(reference_family(ReferenceKind::ApostolBernoulli, a, 8) == oracle::bernoulli_polys(8));
    CHECK(reference_family(ReferenceKind::ApostolEuler, a, 8) == oracle::euler_polys(8));
    CHECK(reference_family(ReferenceKind::SrivastavaBernoulli, a, 8) == oracle::bernoulli_polys(8));

    const auto G = reference_family(ReferenceKind::ClassicalGenocchi, a, 8);
    const auto g = oracle::genocchi_numbers(8);
    for (std::size_t n = 0; n <= 8; ++n) CHECK(G[n].coeff(0) == g[n]);
}

TEST_CASE("Natalini family with m = 2 starts at 2") {
    ReferenceArgs a;
    a.m = 2;
    const auto N = reference_family(ReferenceKind::NataliniBernoulli, a, 3);
    CHECK(N[0] == Poly(Rational(2)));
}

TEST_CASE("Apostol-Bernoulli with lambda != 1 starts at zero") {
    ReferenceArgs a;
    a.lambda = 3;
    const auto A = reference_family(ReferenceKind::ApostolBernoulli, a, 3);
    CHECK(A[0] == Poly());
    CHECK(A[1] == Poly(Rational(1, 2)));
}

TEST_CASE("Genocchi row gives -G_n / 2") {
    Table1Sample s;
    const auto rep = table1_check(10, s, 10);
    CHECK(rep.verdict == Verdict::Pass);

    FamilyParams p;
    p.k = 1;
    p.m = 1;
    p.alphas = {Rational(-1)};
    const auto M = family_numbers(p, 10);
    const auto G = oracle::genocchi_numbers(10);
    for (std::size_t n = 0; n <= 10; ++n) CHECK(M[n] == -G[n] / 2);
    CHECK(G[1] == 1);
    CHECK(G[2] == -1);
    CHECK(G[4] == 1);
}

TEST_CASE("every row passes at assorted samples") {
    std::vector<Table1Sample> samples(3);
    samples[1].r = 2;
    samples[1].m = 2;
    samples[1].k = 0;
    samples[1].lambda = Rational(-3, 2);
    samples[1].alphas = {Rational(2), Rational(-1, 3)};
    samples[1].log_a = Rational(1, 2);
    samples[1].log_b = Rational(-2);
    samples[1].log_c = Rational(3);
    samples[1].log_scale = Rational(2, 5);
    samples[2].r = 3;
    samples[2].m = 3;
    samples[2].k = 2;
    samples[2].lambda = Rational(5);
    samples[2].alphas = {Rational(1, 2), Rational(3), Rational(-7)};
    samples[2].log_scale = Rational(-1);
    samples[0].alphas = {Rational(4)};
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (int row = 1; row <= kTable1Rows; ++row) {
            CAPTURE(samples[i].describe(row));
            const auto rep = table1_check(row, samples[i], 8);
            CHECK(rep.verdict == Verdict::Pass);
            CHECK_FALSE(rep.notes.empty());
        }
}

TEST_CASE("row 13 as printed fails, corrected passes") {
    Table1Sample s;
    s.r = 2;
    s.k = 1;
    s.alphas = {Rational(3), Rational(-1, 2)};
    const auto fixed = table1_check(13, s, 8, SignReading::Corrected);
    const auto printed = table1_check(13, s, 8, SignReading::AsPrinted);
    CHECK(fixed.verdict == Verdict::Pass);
    CHECK(printed.verdict == Verdict::Fail);
    bool mentions = false;
    for (const auto& n : fixed.notes) mentions |= n.find("as printed") != std::string::npos;
    CHECK(mentions);
}

TEST_CASE("unknown row") {
    CHECK_THROWS_AS(table1_check(14, Table1Sample{}, 4), std::invalid_argument);
    CHECK_THROWS_AS(table1_check(0, Table1Sample{}, 4), std::invalid_argument);
}
