#include "meanineq/errors.hpp"
#include "meanineq/kernels.hpp"
#include "meanineq/numverify.hpp"
#include "meanineq/registry.hpp"

#include "testutil.hpp"

#include <doctest.h>

#include <cmath>

using namespace meanineq;
using namespace meanineq::numverify;
using algebra::Rat;
using kernels::NamedMean;

namespace {

registry::Statement make_kernel_stmt(const std::string& id,
                                     std::initializer_list<std::pair<Rat, kernels::KernelKind>> terms) {
    registry::Statement s;
    s.id = id;
    s.kind = registry::ClaimKind::Nonneg;
    s.level = registry::Level::Kernel;
    for (const auto& t : terms) s.combo.terms.push_back(t);
    return s;
}

} // namespace

TEST_CASE("config validation") {
    VerifyConfig cfg;
    CHECK_NOTHROW(cfg.check());
    cfg.grid_points = 4;
    CHECK_THROWS_AS(cfg.check(), meanineq::Error);
    cfg = VerifyConfig{};
    cfg.x_max = 0.5;
    CHECK_THROWS_AS(cfg.check(), meanineq::Error);
    cfg = VerifyConfig{};
    cfg.tol_rel = 0;
    CHECK_THROWS_AS(cfg.check(), meanineq::Error);
}

TEST_CASE("A - G attains its minimum of zero on the diagonal") {
    VerifyConfig cfg;
    cfg.grid_points = 256;
    auto stmt = make_kernel_stmt("t.ag", {{Rat(1), NamedMean::A}, {Rat(-1), NamedMean::G}});
    auto [min_value, argmin_x] = min_gap(stmt, cfg);
    CHECK(min_value >= -1e-15);
    CHECK(min_value <= 1e-12);
    CHECK(std::fabs(argmin_x - 1.0) <= 1e-2);
    CHECK(verify(stmt, cfg).pass);
}

TEST_CASE("the reversed gap fails with a witness") {
    VerifyConfig cfg;
    cfg.grid_points = 256;
    auto stmt = make_kernel_stmt("t.ga", {{Rat(1), NamedMean::G}, {Rat(-1), NamedMean::A}});
    auto rep = verify(stmt, cfg);
    CHECK_FALSE(rep.pass);
    CHECK(rep.min_value < -cfg.tol_rel * (1.0 + rep.argmin_x));
    // The witness pair (4, 1) evaluates to exactly -1/2.
    CHECK(kernels::eval_combination(stmt.combo, kernels::PositivePair{4.0, 1.0}) == -0.5);
}

TEST_CASE("registry statements of every flavor pass") {
    VerifyConfig cfg;
    cfg.grid_points = 512;
    cfg.distribution_samples = 200;
    for (const char* id : {"g1.10", "eq17.id", "eq16.2", "thm31.p04", "eq15.14", "r31.iv"}) {
        const registry::Statement* stmt = registry::find(id);
        REQUIRE(stmt != nullptr);
        auto rep = verify(*stmt, cfg);
        CHECK_MESSAGE(rep.pass, id, " min=", rep.min_value, " at x=", rep.argmin_x);
    }
    auto g110 = verify(*registry::find("g1.10"), cfg);
    CHECK(std::fabs(g110.argmin_x - 1.0) <= 1e-2);
    CHECK(std::fabs(g110.min_value) <= 1e-12);
}

TEST_CASE("kernel-level identities verify as identities") {
    registry::Statement ident;
    ident.id = "synthetic.p5p4";
    ident.kind = registry::ClaimKind::Identity;
    ident.level = registry::Level::Kernel;
    ident.combo.terms = {{Rat(1), NamedMean::P5},
                         {Rat(-1), NamedMean::P4},
                         {Rat(-2), NamedMean::A},
                         {Rat(2), NamedMean::G}};
    VerifyConfig cfg;
    cfg.grid_points = 256;
    CHECK(verify(ident, cfg).pass);
    // Breaking a coefficient turns it into a detected non-identity.
    ident.combo.terms[3].first = Rat(3);
    CHECK_FALSE(verify(ident, cfg).pass);
}

TEST_CASE("inversion identity justifies the half-line grid") {
    // Checked in the direction the verifier uses it: probes live on
    // (1, x_max] and the (0,1) side is derived.
    testutil::Rng rng(1223);
    for (const auto& stmt : registry::all_statements()) {
        if (stmt.level != registry::Level::Kernel) continue;
        for (int k = 0; k < 5; ++k) {
            const double x = rng.log_uniform(1.0 + 1e-6, 1e4);
            const double g = kernels::eval_combination(stmt.combo, kernels::PositivePair{x, 1.0});
            const double inv = kernels::eval_combination(stmt.combo, kernels::PositivePair{1.0 / x, 1.0});
            CHECK(std::fabs(inv - g / x) <= 1e-12 * (1.0 + std::fabs(g)));
        }
    }
}

TEST_CASE("every kernel statement is numerically tight on the diagonal") {
    for (const auto& stmt : registry::all_statements()) {
        if (stmt.level != registry::Level::Kernel) continue;
        const double g1 = kernels::eval_combination(stmt.combo, kernels::PositivePair{1.0, 1.0});
        CHECK(std::fabs(g1) <= 1e-14);
    }
}

TEST_CASE("strictness off the diagonal at fixed probes") {
    const double probes[] = {0.02, 0.2, 0.5, 0.8, 1.25, 2.0, 5.0, 11.0, 100.0, 1e4};
    for (const char* id : {"eq8.06", "g1.10", "thm21.p04"}) {
        const registry::Statement* stmt = registry::find(id);
        REQUIRE(stmt != nullptr);
        for (double x : probes) {
            CHECK(kernels::eval_combination(stmt->combo, kernels::PositivePair{x, 1.0}) > 0.0);
        }
    }
}

TEST_CASE("refinement never raises the reported minimum") {
    VerifyConfig coarse;
    coarse.grid_points = 64;
    coarse.refine_iters = 0;
    VerifyConfig refined = coarse;
    refined.refine_iters = 80;
    for (const char* id : {"g1.10", "thm21.p12", "eq8.09"}) {
        const registry::Statement* stmt = registry::find(id);
        auto [coarse_min, cx] = min_gap(*stmt, coarse);
        auto [refined_min, rx] = min_gap(*stmt, refined);
        CHECK(refined_min <= coarse_min + 1e-18);
    }
}

TEST_CASE("verify_all is deterministic and ordered") {
    VerifyConfig cfg;
    cfg.grid_points = 64;
    cfg.refine_iters = 8;
    cfg.distribution_samples = 50;
    auto a = verify_all(cfg);
    auto b = verify_all(cfg);
    REQUIRE(a.size() == b.size());
    REQUIRE(a.size() == registry::all_statements().size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].statement_id == b[i].statement_id);
        CHECK(a[i].pass == b[i].pass);
        CHECK(a[i].min_value == b[i].min_value);
        CHECK(a[i].argmin_x == b[i].argmin_x);
        CHECK((i == 0 || a[i - 1].statement_id < a[i].statement_id));
    }
    // A parallel run merges to the same report.
    auto c = verify_all(cfg, 4);
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].statement_id == c[i].statement_id);
        CHECK(a[i].min_value == c[i].min_value);
    }
}

TEST_CASE("an injected false statement is the only failure") {
    VerifyConfig cfg;
    cfg.grid_points = 128;
    cfg.refine_iters = 16;
    cfg.distribution_samples = 100;
    int failures = 0;
    for (const auto& rep : verify_all(cfg)) failures += rep.pass ? 0 : 1;
    CHECK(failures == 0);
    auto injected = make_kernel_stmt("injected.false", {{Rat(1), NamedMean::G}, {Rat(-1), NamedMean::A}});
    CHECK_FALSE(verify(injected, cfg).pass);
}

TEST_CASE("sample streams are reproducible") {
    SampleRng a(123), b(123);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
    auto d = SampleRng(5).next_distribution(6);
    double sum = 0;
    for (double x : d) {
        CHECK(x > 0);
        sum += x;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}
