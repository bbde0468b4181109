#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apostol/family.hpp"
#include "oracles.hpp"

using namespace apostol;

namespace {

FamilyParams make(unsigned k, unsigned m, std::vector<Rational> alphas, Rational la, Rational lb, Rational lc) {
    FamilyParams p;
    p.k = k;
    p.m = m;
    p.alphas = std::move(alphas);
    p.log_a = la;
    p.log_b = lb;
    p.log_c = lc;
    return p;
}

std::vector<FamilyParams> samples() {
    return {
        FamilyParams::bernoulli(),
        make(0, 1, {Rational(-1)}, 0, 1, 1),
        make(2, 3, {Rational(1), Rational(2, 3)}, Rational(1, 2), Rational(-3, 4), Rational(5, 7)),
        make(1, 2, {Rational(-4), Rational(1), Rational(1, 9)}, Rational(2), Rational(1, 3), Rational(-2)),
        make(0, 2, {Rational(3, 2)}, Rational(-1), Rational(7, 5), Rational(1, 4)),
    };
}

}  // namespace

TEST_CASE("classical Bernoulli polynomials") {
    const auto seq = family_polynomials(FamilyParams::bernoulli(), 12);
    CHECK(seq.polys == oracle::bernoulli_polys(12));
    CHECK(family_numbers(FamilyParams::bernoulli(), 12) == oracle::bernoulli_numbers(12));
}

TEST_CASE("k = 0, alpha = -1 gives (-1)^r times the Euler polynomials") {
    const auto seq = family_polynomials(make(0, 1, {Rational(-1)}, 0, 1, 1), 8);
    const auto E = oracle::euler_polys(8);
    for (std::size_t n = 0; n <= 8; ++n) CHECK(seq.polys[n] == -E[n]);
}

TEST_CASE("pole when the prefactor cannot absorb the denominator") {
    CHECK_THROWS_AS(family_polynomials(make(0, 1, {Rational(1)}, 0, 1, 1), 4), PoleError);
    CHECK_THROWS_AS(family_numbers(make(0, 1, {Rational(1)}, 0, 1, 1), 4), PoleError);
    CHECK_THROWS_AS(family_numbers(make(0, 1, {Rational(1)}, 1, 1, 1), 4), SingularParameterError);
    // With a = 1, b = e, m = 2 and alpha = 1 each factor vanishes to order 2.
    CHECK_NOTHROW(family_numbers(make(1, 2, {Rational(1), Rational(1)}, 0, 1, 1), 4));
    try {
        (void)family_numbers(make(0, 2, {Rational(1), Rational(3)}, 0, 1, 1), 4);
        FAIL("expected a pole");
    } catch (const PoleError& e) {
        CHECK(e.order() == 2);
    }
    CHECK_THROWS_AS(FamilyParams(make(1, 0, {Rational(2)}, 0, 1, 1)).validate(), std::invalid_argument);
}

TEST_CASE("r = 0 is the bare exponential") {
    const auto seq = family_polynomials(make(1, 1, {}, 0, 1, Rational(3)), 4);
    for (std::size_t n = 0; n <= 4; ++n) CHECK(seq.polys[n] == Poly::monomial(pow(Rational(3), n), n));
}

TEST_CASE("symbolic and scalar routes agree") {
    for (const auto& p : samples()) {
        CAPTURE(p.describe());
        CHECK(family_numbers(p, 9) == family_numbers_via_polynomials(p, 9));
    }
}

TEST_CASE("Appell property and degree bound") {
    for (const auto& p : samples()) {
        CAPTURE(p.describe());
        const auto M = family_polynomials(p, 9).polys;
        for (std::size_t n = 1; n <= 9; ++n) {
            CHECK(M[n].degree() <= static_cast<long>(n));
            CHECK(M[n].derivative() == M[n - 1] * (Rational(static_cast<unsigned long>(n)) * p.log_c));
        }
    }
}

TEST_CASE("the numbers do not depend on c") {
    for (auto p : samples()) {
        const auto before = family_numbers(p, 8);
        p.log_c = Rational(17, 3);
        CHECK(family_numbers(p, 8) == before);
    }
}

TEST_CASE("power of two prefactor") {
    CHECK(power_of_two_prefactor(make(0, 2, {Rational(2), Rational(3)}, 0, 1, 1)) == 16);
    CHECK(power_of_two_prefactor(make(3, 1, {Rational(2)}, 0, 1, 1)) == Rational(1, 4));
}

TEST_CASE("prefactor mutation only touches the symbolic route") {
    const auto p = make(2, 1, {Rational(2)}, 0, 1, 1);
    const auto clean = family_polynomials(p, 5).polys;
    const auto nums = family_numbers(p, 5);
    {
        testing::PrefactorMutation mutate;
        CHECK(testing::prefactor_mutation_active());
        CHECK(family_polynomials(p, 5).polys != clean);
        CHECK(family_numbers(p, 5) == nums);
    }
    CHECK_FALSE(testing::prefactor_mutation_active());
    CHECK(family_polynomials(p, 5).polys == clean);
}

TEST_CASE("a = b is reported") {
    CHECK(make(1, 1, {Rational(2)}, 1, 1, 1).warnings().size() == 1);
    CHECK(FamilyParams::bernoulli().warnings().empty());
}
