#include "meanineq/kernels.hpp"
#include "meanineq/numverify.hpp"
#include "meanineq/registry.hpp"

#include <doctest.h>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

using namespace meanineq;
using namespace meanineq::registry;
using algebra::Rat;
using kernels::NamedMean;

namespace {

int family_count(const std::string& prefix) {
    int n = 0;
    for (const auto& s : all_statements()) {
        if (s.id.rfind(prefix, 0) == 0) ++n;
    }
    return n;
}

// Combination as a canonical kernel-name -> coefficient map.
std::map<std::string, Rat> as_map(const kernels::Combination& c) {
    std::map<std::string, Rat> m;
    for (const auto& [coeff, kind] : c.terms) m[kind.name()] += coeff;
    std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
    return m;
}

// True when a == q*b for some positive rational q.
bool proportional(const kernels::Combination& a, const kernels::Combination& b) {
    auto ma = as_map(a), mb = as_map(b);
    if (ma.size() != mb.size() || ma.empty()) return false;
    Rat q(0);
    for (const auto& [name, ca] : ma) {
        auto it = mb.find(name);
        if (it == mb.end()) return false;
        Rat ratio = ca / it->second;
        if (ratio <= 0) return false;
        if (q == 0) {
            q = ratio;
        } else if (ratio != q) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("family counts") {
    CHECK(family_count("eq8.") == 13);
    CHECK(family_count("g1.") == 22);
    CHECK(family_count("g2.") == 17);
    CHECK(family_count("r21.") == 42);
    CHECK(family_count("thm21.") == 42);
    CHECK(family_count("eq16.") == 7);
    CHECK(family_count("eq17.") == 1);
    CHECK(family_count("eq18.") == 8);
    CHECK(family_count("r31.") == 7);
    CHECK(family_count("eq11.") == 26);
    CHECK(family_count("eq12.") == 8);
    CHECK(family_count("eq13.") == 9);
    CHECK(family_count("eq14.") == 62);
    CHECK(family_count("eq15.") == 22); // 17 printed relations + 5 distribution twins
    CHECK(find("thm31.p04") != nullptr);
    CHECK(all_statements().size() == 287);
}

TEST_CASE("spot checks against the printed statements") {
    // g2.17: P6 + G <= A + S.
    auto g217 = as_map(find("g2.17")->combo);
    CHECK(g217["A"] == Rat(1));
    CHECK(g217["S"] == Rat(1));
    CHECK(g217["P6"] == Rat(-1));
    CHECK(g217["G"] == Rat(-1));
    // g1.02: (2S+H)/3 <= A.
    auto g102 = as_map(find("g1.02")->combo);
    CHECK(g102["A"] == Rat(1));
    CHECK(g102["S"] == Rat(-2, 3));
    CHECK(g102["H"] == Rat(-1, 3));
    // g1.10: N2 <= (3A+G)/4.
    auto g110 = as_map(find("g1.10")->combo);
    CHECK(g110["A"] == Rat(3, 4));
    CHECK(g110["G"] == Rat(1, 4));
    CHECK(g110["N2"] == Rat(-1));
    // eq8.06 is the G <= N1 link.
    auto eq806 = as_map(find("eq8.06")->combo);
    CHECK(eq806["N1"] == Rat(1));
    CHECK(eq806["G"] == Rat(-1));
    // eq17 is the lone identity.
    CHECK(find("eq17.id")->kind == ClaimKind::Identity);
    auto eq17 = as_map(find("eq17.id")->combo);
    CHECK(eq17["J"] == Rat(1));
    CHECK(eq17["I"] == Rat(-4));
    CHECK(eq17["T"] == Rat(-4));
}

TEST_CASE("no statement orders P5 against S alone") {
    for (const auto& s : all_statements()) {
        auto m = as_map(s.combo);
        if (m.size() == 2 && m.count("P5") && m.count("S")) {
            FAIL("statement ", s.id, " relates P5 and S");
        }
    }
}

TEST_CASE("ids are unique and provenance is complete") {
    std::set<std::string> seen;
    for (const auto& s : all_statements()) {
        CHECK(seen.insert(s.id).second);
        CHECK_FALSE(s.source.empty());
        CHECK_FALSE(s.combo.terms.empty());
    }
}

TEST_CASE("every statement is tight on the diagonal") {
    // Mean kernels evaluate to 1 at (1,1) and divergence kernels to 0, so
    // the mean coefficients of every claim must cancel exactly.
    for (const auto& s : all_statements()) {
        Rat mean_sum(0);
        for (const auto& [coeff, kind] : s.combo.terms) {
            if (kind.is_mean()) mean_sum += coeff;
        }
        CHECK(mean_sum == 0);
    }
}

TEST_CASE("composing the Eq. 8 chain orders P1 below P6") {
    kernels::Combination total;
    total.terms.push_back({Rat(1), NamedMean::P6});
    total.terms.push_back({Rat(-1), NamedMean::P1});
    numverify::VerifyConfig cfg;
    cfg.grid_points = 512;
    auto [min_value, argmin_x] = numverify::min_gap(
        registry::Statement{"composed", ClaimKind::Nonneg, Level::Kernel, total, ""}, cfg);
    CHECK(min_value >= -cfg.tol_rel * (1.0 + argmin_x));
}

TEST_CASE("remark items restate the theorem parts") {
    for (int n = 1; n <= 42; ++n) {
        char rid[16], tid[16];
        std::snprintf(rid, sizeof rid, "r21.%02d", n);
        std::snprintf(tid, sizeof tid, "thm21.p%02d", n);
        const Statement* r = find(rid);
        const Statement* t = find(tid);
        REQUIRE(r != nullptr);
        REQUIRE(t != nullptr);
        CHECK(proportional(r->combo, t->combo));
    }
}

TEST_CASE("groups trace back to the displayed chains") {
    // Each Group 1/2 item must be a positive rescaling of an adjacency from
    // Eq. (8), (11), (12), (13) or of a proof-part combination.
    std::vector<const Statement*> sources;
    for (const auto& s : all_statements()) {
        for (const char* prefix : {"eq8.", "eq11.", "eq12.", "eq13.", "thm21."}) {
            if (s.id.rfind(prefix, 0) == 0) sources.push_back(&s);
        }
    }
    for (const auto& s : all_statements()) {
        if (s.id.rfind("g1.", 0) != 0 && s.id.rfind("g2.", 0) != 0) continue;
        bool matched = false;
        for (const Statement* src : sources) {
            if (proportional(s.combo, src->combo)) {
                matched = true;
                break;
            }
        }
        CHECK_MESSAGE(matched, s.id, " has no source relation");
    }
}

TEST_CASE("pointwise statements and their distribution twins coincide") {
    int twins = 0;
    for (const auto& s : all_statements()) {
        if (s.id.rfind("eq15.", 0) != 0 || s.id.back() != 'd') continue;
        const Statement* pointwise = find(s.id.substr(0, s.id.size() - 1));
        REQUIRE(pointwise != nullptr);
        CHECK(pointwise->level == Level::Kernel);
        CHECK(s.level == Level::Distribution);
        CHECK(as_map(pointwise->combo) == as_map(s.combo));
        ++twins;
    }
    CHECK(twins == 5);
}

TEST_CASE("statement ids are frozen in the checked-in manifest") {
    std::ifstream manifest(std::string(MEANINEQ_SOURCE_DIR) + "/data/registry.json", std::ios::binary);
    REQUIRE(manifest.good());
    std::stringstream on_disk;
    on_disk << manifest.rdbuf();
    std::ostringstream current;
    export_json(current);
    CHECK(on_disk.str() == current.str());
}

TEST_CASE("JSON export round trip is deterministic and faithful") {
    std::ostringstream a, b;
    export_json(a);
    export_json(b);
    CHECK(a.str() == b.str());
    CHECK(a.str().back() == '\n');

    std::istringstream in(a.str());
    auto imported = import_json(in);
    const auto& original = all_statements();
    REQUIRE(imported.size() == original.size());
    for (size_t i = 0; i < imported.size(); ++i) {
        CHECK(imported[i].id == original[i].id);
        CHECK(imported[i].kind == original[i].kind);
        CHECK(imported[i].level == original[i].level);
        CHECK(imported[i].source == original[i].source);
        CHECK(as_map(imported[i].combo) == as_map(original[i].combo));
        CHECK((i == 0 || imported[i - 1].id < imported[i].id)); // sorted by id
    }
}
