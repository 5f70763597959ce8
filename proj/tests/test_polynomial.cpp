#include "meanineq/errors.hpp"
#include "meanineq/parse.hpp"
#include "meanineq/polynomial.hpp"

#include "testutil.hpp"

#include <doctest.h>

using namespace meanineq::algebra;

TEST_CASE("basic arithmetic") {
    Poly t = Poly::variable();
    Poly one(Rat(1));
    CHECK((t - one) * (t + one) == parse_poly("t^2-1"));
    CHECK(Poly() + Poly() == Poly());
    CHECK(Rat(3) * parse_poly("t+2") == parse_poly("3*t+6"));
    CHECK(parse_poly("t^3").degree() == 3);
    CHECK(Poly().degree() == -1);
}

TEST_CASE("ring laws on random polynomials") {
    testutil::Rng rng(42);
    for (int i = 0; i < 200; ++i) {
        Poly a = rng.poly(8, 9), b = rng.poly(8, 9), c = rng.poly(8, 9);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a - a == Poly());
    }
}

TEST_CASE("division invariants") {
    testutil::Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        Poly p = rng.poly(10, 9);
        Poly q = rng.poly(5, 9);
        if (q.is_zero()) continue;
        auto [quot, rem] = divide(p, q);
        CHECK(p == quot * q + rem);
        CHECK(rem.degree() < q.degree());
    }
    CHECK_THROWS_AS(divide(parse_poly("t"), Poly()), ZeroPolynomialError);
}

TEST_CASE("derivative product rule") {
    testutil::Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        Poly a = rng.poly(6, 9), b = rng.poly(6, 9);
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    }
    CHECK(parse_poly("t^3-2*t").derivative() == parse_poly("3*t^2-2"));
}

TEST_CASE("exact evaluation of the landmark polynomials") {
    CHECK(testutil::paper_h4().eval(Rat(1)) == Rat(135168000));
    CHECK(testutil::paper_h5().eval(Rat(1)) == Rat(81395712));
    CHECK(testutil::paper_h18().eval(Rat(1)) == Rat(62720));
    CHECK(testutil::paper_h19().eval(Rat(1)) == Rat(56448));
}

TEST_CASE("unit root factoring") {
    CHECK(factor_unit_root(parse_poly("t^2-2*t+1"), 2) == Poly(Rat(1)));
    CHECK(factor_unit_root(parse_poly("t^3-1"), 1) == parse_poly("t^2+t+1"));
    CHECK_THROWS_AS(factor_unit_root(parse_poly("t^2+1"), 1), NotDivisibleError);
    try {
        factor_unit_root(parse_poly("t^2+1"), 1);
    } catch (const NotDivisibleError& e) {
        CHECK(std::string(e.what()).find("2") != std::string::npos); // remainder value is reported
    }
}

TEST_CASE("deflation by t^k") {
    CHECK(deflate_zero(parse_poly("t^3+2*t^2"), 2) == parse_poly("t+2"));
    CHECK_THROWS_AS(deflate_zero(parse_poly("t^2+1"), 1), NotDivisibleError);
}

TEST_CASE("content and primitive part") {
    Poly p = parse_poly("6*t^2-9*t+3");
    CHECK(p.content() == Rat(3));
    CHECK(p.primitive_part() == parse_poly("2*t^2-3*t+1"));
    Poly q = Rat(1, 6) * parse_poly("2*t+4");
    CHECK(q.content() == Rat(1, 3));
    CHECK(q.primitive_part() == parse_poly("t+2"));
}

TEST_CASE("gcd and lcm") {
    Poly a = parse_poly("t^2-1");
    Poly b = parse_poly("t^2-2*t+1");
    CHECK(poly_gcd(a, b) == parse_poly("t-1"));
    CHECK(poly_lcm(a, b) == parse_poly("t^3-t^2-t+1"));
    testutil::Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        Poly g = rng.poly(3, 4);
        Poly x = rng.poly(4, 4), y = rng.poly(4, 4);
        if (g.is_zero() || x.is_zero() || y.is_zero()) continue;
        Poly d = poly_gcd(x * g, y * g);
        CHECK(divide(d, g.primitive_part()).second.is_zero()); // g divides the gcd
    }
}

TEST_CASE("nonneg_coeffs") {
    CHECK(nonneg_coeffs(parse_poly("t^2+3*t+1")));
    CHECK_FALSE(nonneg_coeffs(parse_poly("t^2-1")));
    CHECK_FALSE(nonneg_coeffs(Poly()));
    // The palindromic cofactor closing the 21st refinement proof.
    CHECK(nonneg_coeffs(parse_poly("t^8+70*t^7+220*t^6+210*t^5+510*t^4+210*t^3+220*t^2+70*t+1")));
}

TEST_CASE("text grammar round trip") {
    testutil::Rng rng(99);
    for (int i = 0; i < 100; ++i) {
        Poly p = rng.poly(9, 99);
        CHECK(parse_poly(p.to_string()) == p);
    }
    CHECK(parse_poly("(t+1)^2") == parse_poly("t^2+2*t+1"));
    CHECK_THROWS_AS(parse_poly("t+"), meanineq::ParseError);
    CHECK_THROWS_AS(parse_poly("R1"), meanineq::ParseError); // radicals rejected here
}
