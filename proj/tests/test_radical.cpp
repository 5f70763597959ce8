#include "meanineq/errors.hpp"
#include "meanineq/parse.hpp"
#include "meanineq/radical.hpp"

#include "testutil.hpp"

#include <doctest.h>

using namespace meanineq::algebra;

namespace {

RadicalExpr random_radical(testutil::Rng& rng) {
    RadicalExpr e;
    for (int sig = 0; sig < 4; ++sig) {
        if (rng.int_in(0, 1)) e += RadicalExpr::radical(sig, rng.poly(4, 9));
    }
    return e;
}

} // namespace

TEST_CASE("radical squares reduce to polynomials") {
    CHECK(RadicalExpr::r1() * RadicalExpr::r1() == RadicalExpr{parse_poly("2*t^4+2")});
    CHECK(RadicalExpr::r2() * RadicalExpr::r2() == RadicalExpr{parse_poly("2*t^2+2")});
    RadicalExpr mixed = parse_radical("R1*R2");
    CHECK(mixed * mixed == RadicalExpr{parse_poly("(2*t^4+2)*(2*t^2+2)")});
    CHECK(parse_radical("(t+1)*R1").radical_term_count() == 1);
    CHECK(parse_radical("t^2+1").is_polynomial());
}

TEST_CASE("symbolic operations agree with numeric evaluation") {
    testutil::Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        RadicalExpr a = random_radical(rng), b = random_radical(rng);
        RadicalExpr prod = a * b, sum = a + b;
        for (double t : {0.3, 1.0, 2.7}) {
            const double pa = a.eval_double(t), pb = b.eval_double(t);
            CHECK(prod.eval_double(t) == doctest::Approx(pa * pb).epsilon(1e-9));
            CHECK(sum.eval_double(t) == doctest::Approx(pa + pb).epsilon(1e-9));
        }
    }
}

TEST_CASE("text round trip") {
    testutil::Rng rng(17);
    for (int i = 0; i < 50; ++i) {
        RadicalExpr e = random_radical(rng);
        CHECK(parse_radical(e.to_string()) == e);
    }
}

TEST_CASE("square_compare reproduces the printed factorization") {
    // 2(t^4+t^3+4t^2+t+1) vs R2*(t+1)^3 squares down to
    // 2(t-1)^4(t^4+2t^3+4t^2+2t+1).
    RadicalExpr s{parse_poly("2*t^4+2*t^3+8*t^2+2*t+2")};
    RadicalExpr t = parse_radical("(t+1)^3*R2");
    RadicalExpr result = square_compare(s, t);
    CHECK(result == RadicalExpr{parse_poly("2*(t-1)^4*(t^4+2*t^3+4*t^2+2*t+1)")});
    CHECK(square_compare(t, t).is_zero());
}

TEST_CASE("square_compare refuses to spin in place") {
    RadicalExpr s = parse_radical("R1+1");
    CHECK_THROWS_AS(square_compare(s, RadicalExpr{}), NoProgressError);
    // A pure polynomial split is the one sanctioned no-radical use.
    RadicalExpr p{parse_poly("t^2+3")};
    RadicalExpr q{parse_poly("2*t")};
    CHECK(square_compare(p, q) == RadicalExpr{parse_poly("t^4+2*t^2+9")});
}

TEST_CASE("square_compare soundness at sample points") {
    testutil::Rng rng(31);
    int checked = 0;
    while (checked < 50) {
        // Manifestly positive S: nonneg-coefficient parts only.
        RadicalExpr s;
        for (int sig = 0; sig < 4; ++sig) {
            if (!rng.int_in(0, 1)) continue;
            Poly p = rng.poly(3, 5);
            std::vector<Rat> abs_coeffs;
            for (int d = 0; d <= p.degree(); ++d) abs_coeffs.push_back(rat_abs(p.coeff(d)));
            s += RadicalExpr::radical(sig, Poly(std::move(abs_coeffs)));
        }
        RadicalExpr t = random_radical(rng);
        RadicalExpr diff = s - t;
        if (diff.radical_term_count() == 0) continue;
        RadicalExpr squared;
        try {
            squared = square_compare(s, t);
        } catch (const NoProgressError&) {
            continue;
        }
        ++checked;
        testutil::Rng points(1000 + checked);
        for (int k = 0; k < 50; ++k) {
            const double x = points.log_uniform(1e-2, 1e2);
            const double d = diff.eval_double(x);
            const double sq = squared.eval_double(x);
            // The argument's direction: with S >= 0, a positive square
            // difference forces S - T > 0 at the same point.
            if (sq > 1e-6) CHECK(d > -1e-9);
            if (d < -1e-6) CHECK(sq < 1e-9);
        }
    }
}

TEST_CASE("content normalization") {
    RadicalExpr e = parse_radical("4*t^2+8+6*R1");
    CHECK(e.content() == Rat(2));
    CHECK(e.primitive_part() == parse_radical("2*t^2+4+3*R1"));
}
