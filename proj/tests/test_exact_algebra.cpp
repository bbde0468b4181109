#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "apostol/poly.hpp"
#include "apostol/rational.hpp"
#include "apostol/series.hpp"

using namespace apostol;

namespace {

struct Gen {
    std::mt19937_64 rng{2024};
    Rational q() {
        Rational v(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 12) + 1);
        v.canonicalize();
        return v;
    }
    Poly poly(std::size_t deg) {
        std::vector<Rational> c;
        for (std::size_t i = 0; i <= deg; ++i) c.push_back(q());
        return Poly(c);
    }
    ScalarSeries series(std::size_t N, bool unit) {
        ScalarSeries s(N);
        for (std::size_t i = 0; i <= N; ++i) s[i] = q();
        if (unit && is_zero(s[0])) s[0] = 1;
        return s;
    }
};

}  // namespace

TEST_CASE("rational text round trip") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational(" -7 ")) == "-7");
    CHECK(to_string(parse_rational("0/5")) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    Gen g;
    for (int i = 0; i < 50; ++i) {
        const Rational v = g.q();
        CHECK(parse_rational(to_string(v)) == v);
    }
}

TEST_CASE("integer helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(10, 3) == 120);
    CHECK(generalized_binomial(Rational(1, 2), 2) == Rational(-1, 8));
    CHECK(generalized_binomial(Rational(5), -1) == 0);
    CHECK(rising_factorial(Rational(3), 3) == 60);
    CHECK(pow(Rational(2), -3) == Rational(1, 8));
    CHECK(pow(Rational(0), 0) == 1);
}

TEST_CASE("polynomial ring axioms") {
    Gen g;
    for (int i = 0; i < 20; ++i) {
        const Poly a = g.poly(3), b = g.poly(2), c = g.poly(4);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Poly());
        CHECK((a * b).degree() == a.degree() + b.degree());
        const Rational x = g.q();
        CHECK((a * b)(x) == a(x) * b(x));
        CHECK(a.compose_affine(2, x)(Rational(3)) == a(2 * Rational(3) + x));
    }
    CHECK(Poly(std::vector<Rational>{1, 0, 0}).degree() == 0);
    CHECK(Poly().degree() == -1);
}

TEST_CASE("series division inverts multiplication") {
    Gen g;
    for (int i = 0; i < 10; ++i) {
        const ScalarSeries a = g.series(8, false);
        const ScalarSeries b = g.series(8, true);
        CHECK(series_div(series_mul(a, b), b) == a);
    }
}

TEST_CASE("series division lowers the order by the denominator valuation") {
    // t / (e^t - 1) = 1 - t/2 + t^2/12 - t^4/720 + ...
    ScalarSeries num(6);
    num[1] = 1;
    ScalarSeries den = series_exp_linear(1, 6);
    den[0] -= 1;
    const ScalarSeries q = series_div(num, den);
    REQUIRE(q.order() == 5);
    CHECK(q[0] == 1);
    CHECK(q[1] == Rational(-1, 2));
    CHECK(q[2] == Rational(1, 12));
    CHECK(q[3] == 0);
    CHECK(q[4] == Rational(-1, 720));
}

TEST_CASE("pole detection") {
    ScalarSeries num(4);
    num[0] = 1;
    ScalarSeries den(4);
    den[2] = 1;
    try {
        (void)series_div(num, den);
        FAIL("expected a pole");
    } catch (const PoleError& e) {
        CHECK(e.order() == 2);
        CHECK(std::string(e.what()).find("pole of order 2") != std::string::npos);
    }
}

TEST_CASE("variable scaling and the exponential law") {
    Gen g;
    const ScalarSeries a = g.series(7, false);
    const Rational s = 3;
    CHECK(series_scale_var(series_scale_var(a, s), 1 / s) == a);
    const Rational u = g.q(), v = g.q();
    CHECK(series_mul(series_exp_linear(u, 9), series_exp_linear(v, 9)) == series_exp_linear(u + v, 9));
    CHECK(series_pow(series_exp_linear(u, 6), 3) == series_exp_linear(3 * u, 6));
}

TEST_CASE("coefficient extraction") {
    const PolySeries e = series_exp_linear_x(2, 4);
    CHECK(extract_poly(e, 3) == Poly::monomial(8, 3));
    CHECK_THROWS_AS(extract_poly(e, 5), std::invalid_argument);
    CHECK(extract_scalar(series_exp_linear(Rational(1, 2), 5), 4) == Rational(1, 16));
}
