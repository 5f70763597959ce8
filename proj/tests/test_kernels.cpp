#include "meanineq/errors.hpp"
#include "meanineq/kernels.hpp"

#include "testutil.hpp"

#include <doctest.h>

#include <cmath>

using namespace meanineq;
using namespace meanineq::kernels;

namespace {

PositivePair pair(double a, double b) { return PositivePair::checked(a, b); }

const NamedMean kAllNamed[] = {NamedMean::P1, NamedMean::P2, NamedMean::P3, NamedMean::H,  NamedMean::P4,
                               NamedMean::G,  NamedMean::N1, NamedMean::N3, NamedMean::N2, NamedMean::A,
                               NamedMean::P5, NamedMean::S,  NamedMean::P6};

const DivKernel kAllDiv[] = {DivKernel::I, DivKernel::J, DivKernel::T, DivKernel::Delta, DivKernel::Hellinger};

// The explicit x-formulas of the profile chain, used as an oracle.
double profile_formula(NamedMean m, double x) {
    const double r = std::sqrt(x);
    switch (m) {
    case NamedMean::P1: return x * (x * x + 1) / (x * x * x + 1);
    case NamedMean::P2: return x * (x + 1) / (x * x + 1);
    case NamedMean::P3: return x * (r + 1) / (x * r + 1);
    case NamedMean::H: return 2 * x / (1 + x);
    case NamedMean::P4: return 4 * x / ((r + 1) * (r + 1));
    case NamedMean::G: return r;
    case NamedMean::N1: return (r + 1) * (r + 1) / 4;
    case NamedMean::N3: return (x + r + 1) / 3;
    case NamedMean::N2: return ((r + 1) / 2) * std::sqrt((x + 1) / 2);
    case NamedMean::A: return (x + 1) / 2;
    case NamedMean::P5: return ((x + 1) / (r + 1)) * ((x + 1) / (r + 1));
    case NamedMean::S: return std::sqrt((x * x + 1) / 2);
    case NamedMean::P6: return (x * x + 1) / (x + 1);
    }
    return 0;
}

} // namespace

TEST_CASE("gini mean closed forms") {
    CHECK(gini_mean(1, 0, pair(2, 4)) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(gini_mean(0, 0, pair(4, 9)) == doctest::Approx(6.0).epsilon(1e-15));
    CHECK(gini_mean(1, 1, pair(5, 5)) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(gini_mean(2, 1, pair(1, 2)) == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
    const double e = std::exp(1.0);
    CHECK(gini_mean(1, 1, pair(1, e)) == doctest::Approx(std::exp(e / (1 + e))).epsilon(1e-14));
    CHECK_THROWS_AS(gini_mean(1, 0, PositivePair{0.0, 1.0}), DomainError);
    CHECK_THROWS_AS(gini_mean(1.0 / 0.0, 0, pair(1, 2)), DomainError);
}

TEST_CASE("power mean closed forms") {
    CHECK(power_mean(2, pair(1, 7)) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(power_mean(1, pair(10, 20)) == doctest::Approx(15.0).epsilon(1e-15));
    CHECK(power_mean(-1, pair(1, 4)) == doctest::Approx(1.6).epsilon(1e-15));
}

TEST_CASE("lehmer mean closed forms") {
    CHECK(lehmer_mean(1, pair(3, 9)) == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(lehmer_mean(0.5, pair(4, 16)) == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(lehmer_mean(0, pair(1, 4)) == doctest::Approx(1.6).epsilon(1e-14));
}

TEST_CASE("power and lehmer agree with their gini parameterizations") {
    testutil::Rng rng(8);
    for (int i = 0; i < 500; ++i) {
        const auto p = pair(rng.log_uniform(1e-4, 1e4), rng.log_uniform(1e-4, 1e4));
        const double r = rng.uniform(-8, 8);
        CHECK(power_mean(r, p) == doctest::Approx(gini_mean(r, 0, p)).epsilon(1e-14));
        CHECK(lehmer_mean(r, p) == doctest::Approx(gini_mean(r, r - 1, p)).epsilon(1e-14));
    }
}

TEST_CASE("named kernel values") {
    CHECK(eval_kernel(NamedMean::N3, pair(1, 4)) == doctest::Approx(7.0 / 3.0).epsilon(1e-15));
    CHECK(eval_kernel(NamedMean::P5, pair(1, 4)) == doctest::Approx(25.0 / 9.0).epsilon(1e-14));
    CHECK(eval_kernel(DivKernel::T, pair(3.7, 3.7)) == 0.0);
    CHECK(eval_kernel(NamedMean::N2, pair(4, 16)) == doctest::Approx(3.0 * std::sqrt(10.0)).epsilon(1e-15));
}

TEST_CASE("ratio profiles match the explicit x-formulas") {
    CHECK(ratio_profile(NamedMean::H, 1.0) == 1.0);
    CHECK(ratio_profile(NamedMean::P1, 2.0) == doctest::Approx(10.0 / 9.0).epsilon(1e-14));
    CHECK(ratio_profile(NamedMean::S, 7.0) == doctest::Approx(5.0).epsilon(1e-15));
    testutil::Rng rng(12);
    for (int i = 0; i < 300; ++i) {
        const double x = rng.log_uniform(1e-4, 1e4);
        for (NamedMean m : kAllNamed) {
            const double got = ratio_profile(m, x);
            const double want = profile_formula(m, x);
            CHECK(std::fabs(got - want) <= 1e-13 * std::fabs(want));
        }
    }
    CHECK_THROWS_AS(ratio_profile(NamedMean::A, 0.0), DomainError);
    CHECK_THROWS_AS(ratio_profile(NamedMean::A, -1.0), DomainError);
}

TEST_CASE("combination evaluation") {
    Combination d_ag{{{algebra::Rat(1), NamedMean::A}, {algebra::Rat(-1), NamedMean::G}}};
    CHECK(eval_combination(d_ag, pair(4, 1)) == doctest::Approx(0.5).epsilon(1e-15));
    Combination d_ah{{{algebra::Rat(1), NamedMean::A}, {algebra::Rat(-1), NamedMean::H}}};
    CHECK(eval_combination(d_ah, pair(2.9, 2.9)) == 0.0);
    // Group 1 item 10 at (9, 1): (3A+G)/4 - N2 = 4.5 - 2*sqrt(5).
    Combination g110{{{algebra::Rat(3, 4), NamedMean::A},
                      {algebra::Rat(1, 4), NamedMean::G},
                      {algebra::Rat(-1), NamedMean::N2}}};
    CHECK(eval_combination(g110, pair(9, 1)) ==
          doctest::Approx(4.5 - 2.0 * std::sqrt(5.0)).epsilon(1e-12));
    CHECK(eval_combination(Combination{}, pair(1, 2)) == 0.0);
}

TEST_CASE("symmetry, homogeneity, internality") {
    testutil::Rng rng(23);
    for (int i = 0; i < 500; ++i) {
        const double a = rng.log_uniform(1e-3, 1e3), b = rng.log_uniform(1e-3, 1e3);
        const double lambda = rng.log_uniform(1e-2, 1e2);
        for (NamedMean m : kAllNamed) {
            const double ab = eval_kernel(m, pair(a, b));
            const double ba = eval_kernel(m, pair(b, a));
            CHECK(std::fabs(ab - ba) <= 1e-14 * std::fabs(ab));
            const double scaled = eval_kernel(m, pair(lambda * a, lambda * b));
            CHECK(std::fabs(scaled - lambda * ab) <= 1e-13 * std::fabs(scaled));
            CHECK(ab >= std::fmin(a, b) * (1 - 1e-14));
            CHECK(ab <= std::fmax(a, b) * (1 + 1e-14));
        }
        for (DivKernel k : kAllDiv) {
            const double ab = eval_kernel(k, pair(a, b));
            const double ba = eval_kernel(k, pair(b, a));
            CHECK(ab >= 0.0);
            CHECK(std::fabs(ab - ba) <= 1e-13 * (1 + std::fabs(ab)));
            const double scaled = eval_kernel(k, pair(lambda * a, lambda * b));
            CHECK(std::fabs(scaled - lambda * ab) <= 1e-13 * (1 + std::fabs(scaled)));
        }
    }
}

TEST_CASE("named means resolve to their gini parameters") {
    testutil::Rng rng(37);
    struct Pairing {
        KernelKind lhs, rhs;
    };
    const Pairing pairs[] = {
        {PowerKind{-1}, NamedMean::H},   {LehmerKind{0}, NamedMean::H},   {PowerKind{0}, NamedMean::G},
        {LehmerKind{0.5}, NamedMean::G}, {PowerKind{0.5}, NamedMean::N1}, {PowerKind{1}, NamedMean::A},
        {LehmerKind{1}, NamedMean::A},   {PowerKind{2}, NamedMean::S},    {LehmerKind{2}, NamedMean::P6},
        {LehmerKind{-1}, NamedMean::P2}, {LehmerKind{-2}, NamedMean::P1}, {LehmerKind{-0.5}, NamedMean::P3},
        {PowerKind{-0.5}, NamedMean::P4},
    };
    for (int i = 0; i < 500; ++i) {
        const auto p = pair(rng.log_uniform(1e-3, 1e3), rng.log_uniform(1e-3, 1e3));
        for (const auto& [lhs, rhs] : pairs) {
            const double x = eval_kernel(lhs, p);
            const double y = eval_kernel(rhs, p);
            CHECK(std::fabs(x - y) <= 1e-13 * std::fabs(y));
        }
    }
}

TEST_CASE("gini parameter monotonicity") {
    testutil::Rng rng(41);
    for (int i = 0; i < 1000; ++i) {
        const auto p = pair(rng.log_uniform(1e-3, 1e3), rng.log_uniform(1e-3, 1e3));
        double r1 = rng.uniform(-8, 8), r2 = rng.uniform(-8, 8);
        const double s = rng.uniform(-8, 8);
        if (r1 > r2) std::swap(r1, r2);
        const double lo = gini_mean(r1, s, p);
        const double hi = gini_mean(r2, s, p);
        CHECK(lo <= hi + 1e-13 * std::fabs(hi));
    }
}

TEST_CASE("power versus lehmer crossover") {
    testutil::Rng rng(53);
    for (int i = 0; i < 200; ++i) {
        double a = rng.log_uniform(1e-2, 1e2), b = rng.log_uniform(1e-2, 1e2);
        if (std::fabs(a / b - 1.0) < 1e-3) continue;
        const auto p = pair(a, b);
        for (double r : {1.5, 2.0, 3.0}) CHECK(power_mean(r, p) < lehmer_mean(r, p));
        for (double r : {-1.0, 0.5}) CHECK(power_mean(r, p) > lehmer_mean(r, p));
    }
}

TEST_CASE("divergence kernels tie back to mean gaps") {
    testutil::Rng rng(67);
    for (int i = 0; i < 300; ++i) {
        const auto p = pair(rng.log_uniform(1e-3, 1e3), rng.log_uniform(1e-3, 1e3));
        const double a_mean = eval_kernel(NamedMean::A, p);
        const double h_mean = eval_kernel(NamedMean::H, p);
        const double g_mean = eval_kernel(NamedMean::G, p);
        CHECK(eval_kernel(DivKernel::Delta, p) ==
              doctest::Approx(2.0 * (a_mean - h_mean)).epsilon(1e-12));
        CHECK(eval_kernel(DivKernel::Hellinger, p) == doctest::Approx(a_mean - g_mean).epsilon(1e-12));
        // Zero exactly on the diagonal, strictly positive off it.
        for (DivKernel k : kAllDiv) {
            CHECK(eval_kernel(k, pair(p.a, p.a)) == 0.0);
            if (std::fabs(p.a / p.b - 1.0) > 1e-3) CHECK(eval_kernel(k, p) > 0.0);
        }
    }
}

TEST_CASE("extreme ratios stay finite") {
    for (double ratio : {1e-15, 1e-9, 1e9, 1e15}) {
        const auto p = pair(ratio, 1.0);
        for (NamedMean m : kAllNamed) CHECK(std::isfinite(eval_kernel(m, p)));
        CHECK(std::isfinite(gini_mean(64, -64, p)));
        CHECK(std::isfinite(gini_mean(-64, 64, p)));
        CHECK(std::isfinite(power_mean(64, p)));
        CHECK(std::isfinite(power_mean(-64, p)));
        CHECK(std::isfinite(lehmer_mean(64, p)));
        CHECK(std::isfinite(lehmer_mean(-64, p)));
    }
}

TEST_CASE("kernel name round trip") {
    for (NamedMean m : kAllNamed) {
        KernelKind k(m);
        CHECK(KernelKind::parse(k.name()) == k);
    }
    for (DivKernel d : kAllDiv) {
        KernelKind k(d);
        CHECK(KernelKind::parse(k.name()) == k);
    }
    CHECK(KernelKind::parse("gini:2,1") == KernelKind(GiniKind{2, 1}));
    CHECK(KernelKind::parse("power:0.5") == KernelKind(PowerKind{0.5}));
    CHECK(KernelKind::parse("lehmer:-1") == KernelKind(LehmerKind{-1}));
    CHECK_THROWS_AS(KernelKind::parse("Q7"), ParseError);
    CHECK_THROWS_AS(KernelKind::parse("gini:1"), ParseError);
}
