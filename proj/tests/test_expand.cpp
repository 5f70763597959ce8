#include "meanineq/errors.hpp"
#include "meanineq/expand.hpp"
#include "meanineq/parse.hpp"
#include "meanineq/registry.hpp"
#include "meanineq/sturm.hpp"

#include "testutil.hpp"

#include <doctest.h>

#include <cmath>

using namespace meanineq;
using namespace meanineq::algebra;
using kernels::Combination;
using kernels::NamedMean;

namespace {

Combination combo(std::initializer_list<std::pair<Rat, kernels::KernelKind>> terms) {
    Combination c;
    for (const auto& t : terms) c.terms.push_back(t);
    return c;
}

} // namespace

TEST_CASE("A - G expands to the squared unit gap") {
    auto ex = expand_combination(combo({{Rat(1), NamedMean::A}, {Rat(-1), NamedMean::G}}));
    CHECK(ex.numerator == RadicalExpr{parse_poly("(t-1)^2")});
    CHECK(ex.denominator == parse_poly("2"));
}

TEST_CASE("P6 + 3G - 4N1 carries the factor t(t-1)^2") {
    auto ex = expand_combination(
        combo({{Rat(1), NamedMean::P6}, {Rat(3), NamedMean::G}, {Rat(-4), NamedMean::N1}}));
    REQUIRE(ex.numerator.is_polynomial());
    CHECK(ex.numerator.part(0) == parse_poly("4*t^3-8*t^2+4*t"));
    Poly reduced = deflate_zero(ex.numerator.part(0), 1);
    CHECK(factor_unit_root(reduced, 2) == parse_poly("4"));
}

TEST_CASE("cancellation yields the zero numerator") {
    auto ex = expand_combination(combo({{Rat(1), NamedMean::A}, {Rat(-1), NamedMean::A}}));
    CHECK(ex.numerator.is_zero());
    CHECK(expand_combination(Combination{}).numerator.is_zero());
}

TEST_CASE("gap identities between the named means are exact") {
    // P5 - P4 = 2(A - G) and N3 - N1 = (1/6)(A - G), the two rewriting
    // identities the divergence bounds lean on.
    auto p5p4 = expand_combination(combo({{Rat(1), NamedMean::P5},
                                          {Rat(-1), NamedMean::P4},
                                          {Rat(-2), NamedMean::A},
                                          {Rat(2), NamedMean::G}}));
    CHECK(p5p4.numerator.is_zero());
    auto n3n1 = expand_combination(combo({{Rat(6), NamedMean::N3},
                                          {Rat(-6), NamedMean::N1},
                                          {Rat(-1), NamedMean::A},
                                          {Rat(1), NamedMean::G}}));
    CHECK(n3n1.numerator.is_zero());
}

TEST_CASE("rejections") {
    CHECK_THROWS_AS(expand_combination(combo({{Rat(1), kernels::DivKernel::I}})), UnsupportedKernelError);
    CHECK_THROWS_AS(expand_combination(combo({{Rat(1), kernels::GiniKind{0.3, 0.7}}})), UnsupportedParamError);
}

TEST_CASE("parametric kinds resolve to named profiles") {
    auto via_power = expand_combination(combo({{Rat(1), kernels::PowerKind{2}}}));
    auto via_named = expand_combination(combo({{Rat(1), NamedMean::S}}));
    CHECK(via_power.numerator == via_named.numerator);
    CHECK(via_power.denominator == via_named.denominator);
    auto via_lehmer = expand_combination(combo({{Rat(1), kernels::LehmerKind{2}}}));
    CHECK(via_lehmer.numerator == expand_combination(combo({{Rat(1), NamedMean::P6}})).numerator);
    auto via_gini = expand_combination(combo({{Rat(1), kernels::GiniKind{1, 0.5}}})); // symmetric in (r, s)
    CHECK(via_gini.numerator == expand_combination(combo({{Rat(1), NamedMean::P5}})).numerator);
}

TEST_CASE("denominators are manifestly positive") {
    for (const auto& stmt : registry::all_statements()) {
        if (!stmt.mean_only() || stmt.combo.terms.empty()) continue;
        auto ex = expand_combination(stmt.combo);
        CHECK(nonneg_coeffs(ex.denominator));
        CHECK(ex.denominator.leading() > 0);
    }
}

TEST_CASE("radical-free statements verify exactly from their expansions") {
    // Statements avoiding S and N2 have polynomial numerators; their
    // nonnegativity on (0, inf) is decidable outright: strip t^k and the
    // even (t-1) multiplicity, then ask Sturm for positive roots.
    int proved = 0;
    for (const auto& stmt : registry::all_statements()) {
        if (stmt.level != registry::Level::Kernel || !stmt.mean_only()) continue;
        if (stmt.kind != registry::ClaimKind::Nonneg) continue;
        auto ex = expand_combination(stmt.combo);
        if (!ex.numerator.is_polynomial()) continue;
        Poly p = ex.numerator.part(0);
        REQUIRE_FALSE(p.is_zero());
        int trailing = 0;
        while (p.coeff(trailing) == 0) ++trailing;
        if (trailing > 0) p = deflate_zero(p, trailing);
        int mult = 0;
        for (Poly q = p; q.eval(Rat(1)) == 0; ++mult) q = factor_unit_root(q, 1);
        CHECK(mult % 2 == 0); // gaps touch the diagonal to even order
        if (mult > 0) p = factor_unit_root(p, mult);
        CHECK(p.eval(Rat(1)) > 0);
        CHECK(sturm_count(p, Interval::positive_axis()).root_count == 0);
        ++proved;
    }
    // A substantial slice of the catalog is locked down exactly this way.
    CHECK(proved >= 80);
}

TEST_CASE("expansion agrees numerically with kernel evaluation") {
    testutil::Rng rng(314159);
    for (const auto& stmt : registry::all_statements()) {
        if (stmt.level != registry::Level::Kernel || !stmt.mean_only()) continue;
        auto ex = expand_combination(stmt.combo);
        for (int k = 0; k < 200; ++k) {
            const double t = rng.log_uniform(1e-3, 10.0);
            const double x = t * t;
            const double direct = kernels::eval_combination(stmt.combo, kernels::PositivePair{x, 1.0});
            const long double ratio =
                ex.numerator.eval_long_double(t) / ex.denominator.eval_long_double(t);
            // Relative to the magnitude of the combination, not the gap.
            double scale = 0.0;
            for (const auto& [coeff, kind] : stmt.combo.terms) {
                scale += std::fabs(rat_to_double(coeff)) * kernels::eval_kernel(kind, kernels::PositivePair{x, 1.0});
            }
            CHECK(std::fabs(static_cast<double>(ratio) - direct) <= 1e-10 * (1.0 + scale));
        }
    }
}
