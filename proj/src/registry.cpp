#include "meanineq/registry.hpp"

#include "meanineq/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>

namespace meanineq::registry {

using kernels::Combination;
using kernels::DivKernel;
using kernels::KernelKind;
using kernels::NamedMean;
using algebra::Rat;

bool Statement::mean_only() const {
    return std::all_of(combo.terms.begin(), combo.terms.end(), [](const auto& t) { return t.second.is_mean(); });
}

namespace {

// Tiny linear-expression helper so statements read like the displayed relations.
struct Expr {
    std::vector<std::pair<Rat, KernelKind>> terms;
};

Expr E(KernelKind k) { return Expr{{{Rat(1), k}}}; }

Expr operator*(const Rat& c, Expr e) {
    for (auto& t : e.terms) t.first *= c;
    return e;
}
Expr operator*(int c, Expr e) { return Rat(c) * std::move(e); }
Expr operator/(Expr e, int d) { return Rat(1, d) * std::move(e); }
Expr operator+(Expr a, const Expr& b) {
    a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
    return a;
}
Expr operator-(Expr a, const Expr& b) { return std::move(a) + (Rat(-1) * b); }

// D_{tp} = t - p, optionally scaled.
Expr D(KernelKind t, KernelKind p) { return E(t) - E(p); }

Combination to_combo(const Expr& e) {
    Combination c;
    for (const auto& [coeff, kind] : e.terms) {
        auto it = std::find_if(c.terms.begin(), c.terms.end(), [&](const auto& t) { return t.second == kind; });
        if (it == c.terms.end()) {
            c.terms.emplace_back(coeff, kind);
        } else {
            it->first += coeff;
        }
    }
    std::erase_if(c.terms, [](const auto& t) { return t.first == 0; });
    return c;
}

struct Builder {
    std::vector<Statement> out;

    void ge(const std::string& id, Level level, const Expr& lhs, const Expr& rhs, const std::string& source) {
        out.push_back(Statement{id, ClaimKind::Nonneg, level, to_combo(rhs - lhs), source});
    }
    void nonneg(const std::string& id, Level level, const Expr& e, const std::string& source) {
        out.push_back(Statement{id, ClaimKind::Nonneg, level, to_combo(e), source});
    }
    void identity(const std::string& id, Level level, const Expr& e, const std::string& source) {
        out.push_back(Statement{id, ClaimKind::Identity, level, to_combo(e), source});
    }
};

std::vector<Statement> build_all() {
    using enum NamedMean;
    constexpr auto I = DivKernel::I;
    constexpr auto J = DivKernel::J;
    constexpr auto T = DivKernel::T;
    constexpr Level K = Level::Kernel;
    constexpr Level Dist = Level::Distribution;

    Builder b;

    // ---- Eq. (8): the combined chain, adjacent pairs only; P5 and S are
    // mutually unordered and get no statement.
    {
        const NamedMean chain[] = {P1, P2, P3, H, P4, G, N1, N3, N2, A};
        const char* names[] = {"P1", "P2", "P3", "H", "P4", "G", "N1", "N3", "N2", "A"};
        for (int i = 0; i + 1 < 10; ++i) {
            char id[16];
            std::snprintf(id, sizeof id, "eq8.%02d", i + 1);
            b.ge(id, K, E(chain[i]), E(chain[i + 1]),
                 std::string("Eq. (8): ") + names[i] + " <= " + names[i + 1]);
        }
        b.ge("eq8.10", K, E(A), E(P5), "Eq. (8): A <= P5");
        b.ge("eq8.11", K, E(A), E(S), "Eq. (8): A <= S");
        b.ge("eq8.12", K, E(P5), E(P6), "Eq. (8): P5 <= P6");
        b.ge("eq8.13", K, E(S), E(P6), "Eq. (8): S <= P6");
    }

    // ---- Eq. (11) adjacency, branch by branch.
    b.ge("eq11.01", K, D(P6, P1) / 8, D(P6, P2) / 6, "Eq. (11): (1/8)D_P6P1 <= (1/6)D_P6P2");
    b.ge("eq11.02", K, D(P6, P2) / 6, D(S, A), "Eq. (11): (1/6)D_P6P2 <= D_SA");
    b.ge("eq11.03", K, D(S, A), D(S, H) / 3, "Eq. (11): D_SA <= (1/3)D_SH");
    b.ge("eq11.04", K, D(S, H) / 3, D(A, H) / 2, "Eq. (11): (1/3)D_SH <= (1/2)D_AH");
    b.ge("eq11.05", K, D(A, H) / 2, Rat(4, 9) * D(P6, N2), "Eq. (11): (1/2)D_AH <= (4/9)D_P6N2");
    b.ge("eq11.06", K, D(A, H) / 2, Rat(3, 7) * D(P6, N3), "Eq. (11): (1/2)D_AH <= (3/7)D_P6N3");
    b.ge("eq11.07", K, D(A, H) / 2, Rat(2, 5) * D(S, P4), "Eq. (11): (1/2)D_AH <= (2/5)D_SP4");
    b.ge("eq11.08", K, Rat(3, 7) * D(P6, N3), Rat(2, 5) * D(P6, N1), "Eq. (11): (3/7)D_P6N3 <= (2/5)D_P6N1");
    b.ge("eq11.09", K, Rat(3, 7) * D(P6, N3), Rat(2, 7) * D(P6, P4), "Eq. (11): (3/7)D_P6N3 <= (2/7)D_P6P4");
    b.ge("eq11.10", K, Rat(2, 5) * D(S, P4), Rat(2, 5) * D(P6, N1), "Eq. (11): (2/5)D_SP4 <= (2/5)D_P6N1");
    b.ge("eq11.11", K, Rat(2, 5) * D(S, P4), Rat(2, 7) * D(P6, P4), "Eq. (11): (2/5)D_SP4 <= (2/7)D_P6P4");
    b.ge("eq11.12", K, Rat(4, 9) * D(P6, N2), D(P6, G) / 3, "Eq. (11): (4/9)D_P6N2 <= (1/3)D_P6G");
    b.ge("eq11.13", K, Rat(2, 5) * D(P6, N1), D(P6, G) / 3, "Eq. (11): (2/5)D_P6N1 <= (1/3)D_P6G");
    b.ge("eq11.14", K, Rat(2, 7) * D(P6, P4), D(P6, G) / 3, "Eq. (11): (2/7)D_P6P4 <= (1/3)D_P6G");
    b.ge("eq11.15", K, D(P6, G) / 3, Rat(2, 5) * D(P5, H), "Eq. (11): (1/3)D_P6G <= (2/5)D_P5H");
    b.ge("eq11.16", K, D(P6, G) / 3, Rat(2, 3) * D(A, P4), "Eq. (11): (1/3)D_P6G <= (2/3)D_AP4");
    b.ge("eq11.17", K, Rat(2, 5) * D(P5, H), 4 * D(N2, N1), "Eq. (11): (2/5)D_P5H <= 4D_N2N1");
    b.ge("eq11.18", K, Rat(2, 3) * D(A, P4), 4 * D(N2, N1), "Eq. (11): (2/3)D_AP4 <= 4D_N2N1");
    b.ge("eq11.19", K, 4 * D(N2, N1), Rat(4, 3) * D(N2, G), "Eq. (11): 4D_N2N1 <= (4/3)D_N2G");
    b.ge("eq11.20", K, Rat(4, 3) * D(N2, G), D(A, G), "Eq. (11): (4/3)D_N2G <= D_AG");
    b.ge("eq11.21", K, D(A, G), 4 * D(A, N2), "Eq. (11): D_AG <= 4D_AN2");
    b.ge("eq11.22", K, 4 * D(A, N2), Rat(2, 3) * D(P5, G), "Eq. (11): 4D_AN2 <= (2/3)D_P5G");
    b.ge("eq11.23", K, Rat(2, 3) * D(P5, G), D(P5, N1), "Eq. (11): (2/3)D_P5G <= D_P5N1");
    b.ge("eq11.24", K, D(P5, N1), Rat(6, 5) * D(P5, N3), "Eq. (11): D_P5N1 <= (6/5)D_P5N3");
    b.ge("eq11.25", K, Rat(6, 5) * D(P5, N3), Rat(4, 3) * D(P5, N2), "Eq. (11): (6/5)D_P5N3 <= (4/3)D_P5N2");
    b.ge("eq11.26", K, Rat(4, 3) * D(P5, N2), 2 * D(P5, A), "Eq. (11): (4/3)D_P5N2 <= 2D_P5A");

    // ---- Eq. (12) adjacency.
    b.ge("eq12.01", K, D(S, A), Rat(4, 5) * D(S, N2), "Eq. (12): D_SA <= (4/5)D_SN2");
    b.ge("eq12.02", K, D(S, A), Rat(3, 4) * D(S, N3), "Eq. (12): D_SA <= (3/4)D_SN3");
    b.ge("eq12.03", K, Rat(4, 5) * D(S, N2), Rat(2, 3) * D(S, N1), "Eq. (12): (4/5)D_SN2 <= (2/3)D_SN1");
    b.ge("eq12.04", K, Rat(3, 4) * D(S, N3), Rat(2, 3) * D(S, N1), "Eq. (12): (3/4)D_SN3 <= (2/3)D_SN1");
    b.ge("eq12.05", K, Rat(2, 3) * D(S, N1), D(P6, G) / 3, "Eq. (12): (2/3)D_SN1 <= (1/3)D_P6G");
    b.ge("eq12.06", K, Rat(2, 3) * D(S, N1), D(S, G) / 2, "Eq. (12): (2/3)D_SN1 <= (1/2)D_SG");
    b.ge("eq12.07", K, D(P6, G) / 3, Rat(2, 5) * D(P5, H), "Eq. (12): (1/3)D_P6G <= (2/5)D_P5H");
    b.ge("eq12.08", K, D(S, G) / 2, Rat(2, 5) * D(P5, H), "Eq. (12): (1/2)D_SG <= (2/5)D_P5H");

    // ---- Eq. (13) adjacency.
    b.ge("eq13.01", K, D(P6, P1) / 8, D(P6, P2) / 6, "Eq. (13): (1/8)D_P6P1 <= (1/6)D_P6P2");
    b.ge("eq13.02", K, D(P6, P1) / 8, Rat(2, 9) * D(P5, P2), "Eq. (13): (1/8)D_P6P1 <= (2/9)D_P5P2");
    b.ge("eq13.03", K, Rat(2, 13) * D(P5, P1), D(P6, P2) / 6, "Eq. (13): (2/13)D_P5P1 <= (1/6)D_P6P2");
    b.ge("eq13.04", K, Rat(2, 13) * D(P5, P1), Rat(2, 9) * D(P5, P2), "Eq. (13): (2/13)D_P5P1 <= (2/9)D_P5P2");
    b.ge("eq13.05", K, D(P6, P2) / 6, Rat(2, 7) * D(P5, P3), "Eq. (13): (1/6)D_P6P2 <= (2/7)D_P5P3");
    b.ge("eq13.06", K, Rat(2, 9) * D(P5, P2), Rat(2, 7) * D(P5, P3), "Eq. (13): (2/9)D_P5P2 <= (2/7)D_P5P3");
    b.ge("eq13.07", K, Rat(2, 7) * D(P5, P3), Rat(4, 9) * D(P6, N2), "Eq. (13): (2/7)D_P5P3 <= (4/9)D_P6N2");
    b.ge("eq13.08", K, Rat(4, 9) * D(P6, N2), D(P6, S), "Eq. (13): (4/9)D_P6N2 <= D_P6S");
    b.ge("eq13.09", K, D(P6, S), D(A, G), "Eq. (13): D_P6S <= D_AG");

    // ---- Group 1 (22 items).
    b.ge("g1.01", K, E(P2), (E(P6) + 3 * E(P1)) / 4, "Group 1 item 1: P2 <= (P6+3P1)/4");
    b.ge("g1.02", K, (2 * E(S) + E(H)) / 3, E(A), "Group 1 item 2: (2S+H)/3 <= A");
    b.ge("g1.03", K, (E(P6) + 14 * E(N1)) / 15, E(N3), "Group 1 item 3: (P6+14N1)/15 <= N3");
    b.ge("g1.04", K, (E(P6) + 2 * E(P4)) / 3, E(N3), "Group 1 item 4: (P6+2P4)/3 <= N3");
    b.ge("g1.05", K, E(S), (5 * E(P6) + 2 * E(P4)) / 7, "Group 1 item 5: S <= (5P6+2P4)/7");
    b.ge("g1.06", K, (E(P6) + 3 * E(G)) / 4, E(N2), "Group 1 item 6: (P6+3G)/4 <= N2");
    b.ge("g1.07", K, (E(P6) + 5 * E(G)) / 6, E(N1), "Group 1 item 7: (P6+5G)/6 <= N1");
    b.ge("g1.08", K, E(G), (E(P6) + 6 * E(P4)) / 7, "Group 1 item 8: G <= (P6+6P4)/7");
    b.ge("g1.09", K, (2 * E(N2) + E(G)) / 3, E(N1), "Group 1 item 9: (2N2+G)/3 <= N1");
    b.ge("g1.10", K, E(N2), (3 * E(A) + E(G)) / 4, "Group 1 item 10: N2 <= (3A+G)/4");
    b.ge("g1.11", K, E(N1), (E(P5) + 2 * E(G)) / 3, "Group 1 item 11: N1 <= (P5+2G)/3");
    b.ge("g1.12", K, E(N3), (E(P5) + 5 * E(N1)) / 6, "Group 1 item 12: N3 <= (P5+5N1)/6");
    b.ge("g1.13", K, E(N2), (E(P5) + 9 * E(N3)) / 10, "Group 1 item 13: N2 <= (P5+9N3)/10");
    b.ge("g1.14", K, E(A), (E(P5) + 2 * E(N2)) / 3, "Group 1 item 14: A <= (P5+2N2)/3");
    b.ge("g1.15", K, (E(S) + 4 * E(N2)) / 5, E(A), "Group 1 item 15: (S+4N2)/5 <= A");
    b.ge("g1.16", K, (E(S) + 3 * E(N3)) / 4, E(A), "Group 1 item 16: (S+3N3)/4 <= A");
    b.ge("g1.17", K, (E(S) + 5 * E(N1)) / 6, E(N2), "Group 1 item 17: (S+5N1)/6 <= N2");
    b.ge("g1.18", K, (E(S) + 8 * E(N1)) / 9, E(N3), "Group 1 item 18: (S+8N1)/9 <= N3");
    b.ge("g1.19", K, (E(S) + 3 * E(G)) / 4, E(N1), "Group 1 item 19: (S+3G)/4 <= N1");
    b.ge("g1.20", K, E(P2), (9 * E(P1) + 4 * E(P5)) / 13, "Group 1 item 20: P2 <= (9P1+4P5)/13");
    b.ge("g1.21", K, E(P3), (2 * E(P5) + 7 * E(P2)) / 9, "Group 1 item 21: P3 <= (2P5+7P2)/9");
    b.ge("g1.22", K, E(S), (5 * E(P6) + 4 * E(N2)) / 9, "Group 1 item 22: S <= (5P6+4N2)/9");

    // ---- Group 2 (17 items; the list prints two consecutive items
    // numbered 6, assigned here in listed order).
    b.ge("g2.01", K, 6 * E(A) + E(P6), 6 * E(S) + E(P2), "Group 2 item 1: 6A+P6 <= 6S+P2");
    b.ge("g2.02", K, 9 * E(A) + 8 * E(N2), 9 * E(H) + 8 * E(P6), "Group 2 item 2: 9A+8N2 <= 9H+8P6");
    b.ge("g2.03", K, 7 * E(A) + 6 * E(N3), 7 * E(H) + 6 * E(P6), "Group 2 item 3: 7A+6N3 <= 7H+6P6");
    b.ge("g2.04", K, 5 * E(A) + 4 * E(P4), 5 * E(H) + 4 * E(S), "Group 2 item 4: 5A+4P4 <= 5H+4S");
    b.ge("g2.05", K, E(S) + E(N1), E(P4) + E(P6), "Group 2 item 5 (printed '6.'): S+N1 <= P4+P6");
    b.ge("g2.06", K, 6 * E(H) + 5 * E(P6), 6 * E(P5) + 5 * E(G), "Group 2 item 6 (printed '6.'): 6H+5P6 <= 6P5+5G");
    b.ge("g2.07", K, 2 * E(P4) + E(P6), 2 * E(A) + E(G), "Group 2 item 7: 2P4+P6 <= 2A+G");
    b.ge("g2.08", K, 10 * E(N1) + E(P5), 10 * E(N2) + E(H), "Group 2 item 8: 10N1+P5 <= 10N2+H");
    b.ge("g2.09", K, E(A) + 6 * E(N1), E(P4) + 6 * E(N2), "Group 2 item 9: A+6N1 <= P4+6N2");
    b.ge("g2.10", K, E(G) + 6 * E(A), E(P5) + 6 * E(N2), "Group 2 item 10: G+6A <= P5+6N2");
    b.ge("g2.11", K, E(G) + 2 * E(S), E(P6) + 2 * E(N1), "Group 2 item 11: G+2S <= P6+2N1");
    b.ge("g2.12", K, 4 * E(H) + 5 * E(S), 4 * E(P5) + 5 * E(G), "Group 2 item 12: 4H+5S <= 4P5+5G");
    b.ge("g2.13", K, 16 * E(P2) + 9 * E(P6), 16 * E(P5) + 9 * E(P1), "Group 2 item 13: 16P2+9P6 <= 16P5+9P1");
    b.ge("g2.14", K, 13 * E(P2) + 12 * E(P5), 13 * E(P6) + 12 * E(P1), "Group 2 item 14: 13P2+12P5 <= 13P6+12P1");
    b.ge("g2.15", K, 12 * E(P3) + 7 * E(P6), 12 * E(P5) + 7 * E(P2), "Group 2 item 15: 12P3+7P6 <= 12P5+7P2");
    b.ge("g2.16", K, 14 * E(N2) + 9 * E(P5), 14 * E(P6) + 9 * E(P3), "Group 2 item 16: 14N2+9P5 <= 14P6+9P3");
    b.ge("g2.17", K, E(P6) + E(G), E(A) + E(S), "Group 2 item 17: P6+G <= A+S");

    // ---- Theorem 2.1 proof parts, in the normal form of each heading.
    // These are the statements the built-in certificates replay.
    auto part = [&](int n, const Expr& lhs, const Expr& rhs, const std::string& what) {
        char id[16];
        std::snprintf(id, sizeof id, "thm21.p%02d", n);
        b.ge(id, K, lhs, rhs, "Theorem 2.1 Part " + std::to_string(n) + ": " + what);
    };
    part(1, (E(P6) + 6 * E(P4)) / 7, (E(S) + 3 * E(G)) / 4, "(P6+6P4)/7 <= (S+3G)/4");
    part(2, (E(S) + 3 * E(G)) / 4, (2 * E(N2) + E(G)) / 3, "(S+3G)/4 <= (2N2+G)/3");
    part(3, (E(P6) + 5 * E(G)) / 6, (2 * E(N2) + E(G)) / 3, "(P6+5G)/6 <= (2N2+G)/3");
    part(4, (10 * E(N2) + E(H) - E(P5)) / 10, E(P4) + E(P6) - E(S), "(10N2+H-P5)/10 <= P4+P6-S");
    part(5, (E(P4) + 6 * E(N2) - E(A)) / 6, E(P4) + E(P6) - E(S), "(P4+6N2-A)/6 <= P4+P6-S");
    part(6, (10 * E(N2) + E(H) - E(P5)) / 10, (E(P5) + 2 * E(G)) / 3, "(10N2+H-P5)/10 <= (P5+2G)/3");
    part(7, (E(P4) + 6 * E(N2) - E(A)) / 6, (E(P5) + 2 * E(G)) / 3, "(P4+6N2-A)/6 <= (P5+2G)/3");
    part(8, E(P4) + E(P6) - E(S), (E(P6) + 2 * E(P4)) / 3, "P4+P6-S <= (P6+2P4)/3");
    part(9, E(P4) + E(P6) - E(S), (E(P6) + 14 * E(N1)) / 15, "P4+P6-S <= (P6+14N1)/15");
    part(10, E(P4) + E(P6) - E(S), (E(S) + 8 * E(N1)) / 9, "P4+P6-S <= (S+8N1)/9");
    part(11, (E(P5) + 2 * E(G)) / 3, (E(P6) + 2 * E(P4)) / 3, "(P5+2G)/3 <= (P6+2P4)/3");
    part(12, (3 * E(A) + E(G)) / 4, (E(P5) + 9 * E(N3)) / 10, "(3A+G)/4 <= (P5+9N3)/10");
    part(13, (E(P5) + 9 * E(N3)) / 10, (E(S) + 4 * E(N2)) / 5, "(P5+9N3)/10 <= (S+4N2)/5");
    part(14, (E(P5) + 9 * E(N3)) / 10, (E(S) + 3 * E(N3)) / 4, "(P5+9N3)/10 <= (S+3N3)/4");
    part(15, (E(P5) + 9 * E(N3)) / 10, (2 * E(S) + E(H)) / 3,
         "(P5+9N3)/10 <= (2S+H)/3 (proof line prints 27N for 27N3)");
    part(16, (E(P5) + 9 * E(N3)) / 10, (8 * E(P6) + 9 * E(H) - 9 * E(A)) / 8, "(P5+9N3)/10 <= (8P6+9H-9A)/8");
    part(17, (8 * E(P6) + 9 * E(H) - 9 * E(A)) / 8, E(A), "(8P6+9H-9A)/8 <= A");
    part(18, (14 * E(P6) + 9 * E(P3) - 9 * E(P5)) / 14, (5 * E(H) + 4 * E(S) - 4 * E(P4)) / 5,
         "(14P6+9P3-9P5)/14 <= (5H+4S-4P4)/5");
    part(19, (14 * E(P6) + 9 * E(P3) - 9 * E(P5)) / 14, (E(P5) + 6 * E(N2) - E(G)) / 6,
         "(14P6+9P3-9P5)/14 <= (P5+6N2-G)/6");
    part(20, (E(P5) + 6 * E(N2) - E(G)) / 6, (E(P5) + 2 * E(N2)) / 3, "(P5+6N2-G)/6 <= (P5+2N2)/3");
    part(21, (E(P5) + 2 * E(N2)) / 3, (7 * E(H) + 6 * E(P6) - 6 * E(N3)) / 7,
         "(P5+2N2)/3 <= (7H+6P6-6N3)/7 (heading prints 6N2 for 6N3)");
    part(22, (5 * E(H) + 4 * E(S) - 4 * E(P4)) / 5, (12 * E(P5) + 13 * E(P2) - 12 * E(P1)) / 13,
         "(5H+4S-4P4)/5 <= (12P5+13P2-12P1)/13");
    part(23, (5 * E(H) + 4 * E(S) - 4 * E(P4)) / 5, (4 * E(H) + 5 * E(S) - 5 * E(G)) / 4,
         "(5H+4S-4P4)/5 <= (4H+5S-5G)/4");
    part(24, (7 * E(H) + 6 * E(P6) - 6 * E(N3)) / 7, (12 * E(P5) + 13 * E(P2) - 12 * E(P1)) / 13,
         "(7H+6P6-6N3)/7 <= (12P5+13P2-12P1)/13");
    part(25, (7 * E(H) + 6 * E(P6) - 6 * E(N3)) / 7, (4 * E(H) + 5 * E(S) - 5 * E(G)) / 4,
         "(7H+6P6-6N3)/7 <= (4H+5S-5G)/4");
    part(26, (7 * E(H) + 6 * E(P6) - 6 * E(N3)) / 7, E(S), "(7H+6P6-6N3)/7 <= S");
    part(27, (E(P6) + 2 * E(N1) - E(G)) / 2, (2 * E(P5) + 5 * E(P6)) / 7,
         "(P6+2N1-G)/2 <= (2P5+5P6)/7 (heading prints 2P4; the proven combination uses P5)");
    part(28, (4 * E(N2) + 5 * E(P6)) / 9, (E(P6) + 2 * E(N1) - E(G)) / 2,
         "(4N2+5P6)/9 <= (P6+2N1-G)/2 (heading prints the reverse; proof establishes this direction)");
    part(29, E(A) + E(S) - E(G), (12 * E(P5) + 7 * E(P2) - 12 * E(P3)) / 7, "A+S-G <= (12P5+7P2-12P3)/7");
    part(30, (6 * E(P5) + 5 * E(G) - 6 * E(H)) / 5, (12 * E(P5) + 7 * E(P2) - 12 * E(P3)) / 7,
         "(6P5+5G-6H)/5 <= (12P5+7P2-12P3)/7");
    part(31, 2 * E(A) + E(G) - 2 * E(P4), (12 * E(P5) + 7 * E(P2) - 12 * E(P3)) / 7,
         "2A+G-2P4 <= (12P5+7P2-12P3)/7");
    part(32, E(A) + E(S) - E(G), 6 * E(S) + E(P2) - 6 * E(A), "A+S-G <= 6S+P2-6A");
    part(33, (6 * E(P5) + 5 * E(G) - 6 * E(H)) / 5, 6 * E(S) + E(P2) - 6 * E(A), "(6P5+5G-6H)/5 <= 6S+P2-6A");
    part(34, 2 * E(A) + E(G) - 2 * E(P4), 6 * E(S) + E(P2) - 6 * E(A), "2A+G-2P4 <= 6S+P2-6A");
    part(35, 6 * E(S) + E(P2) - 6 * E(A), (16 * E(P5) + 9 * E(P1) - 16 * E(P2)) / 9,
         "6S+P2-6A <= (16P5+9P1-16P2)/9");
    part(36, (12 * E(P5) + 7 * E(P2) - 12 * E(P3)) / 7, (16 * E(P5) + 9 * E(P1) - 16 * E(P2)) / 9,
         "(12P5+7P2-12P3)/7 <= (16P5+9P1-16P2)/9");
    part(37, (E(P6) + 3 * E(P1)) / 4, E(N1), "(P6+3P1)/4 <= N1");
    part(38, E(N1), (E(P6) + 3 * E(G)) / 4, "N1 <= (P6+3G)/4");
    part(39, (E(P6) + 3 * E(G)) / 4, (E(S) + 5 * E(N1)) / 6, "(P6+3G)/4 <= (S+5N1)/6");
    part(40, (4 * E(P5) + 9 * E(P1)) / 13, E(N3), "(4P5+9P1)/13 <= N3");
    part(41, (E(P5) + 5 * E(N1)) / 6, E(A), "(P5+5N1)/6 <= A");
    part(42, (2 * E(P5) + 7 * E(P2)) / 9, E(N1), "(2P5+7P2)/9 <= N1");

    // ---- Remark 2.1: the same 42 facts rewritten with gap functionals.
    auto rem = [&](int n, const Expr& lhs, const Expr& rhs, const std::string& what) {
        char id[16];
        std::snprintf(id, sizeof id, "r21.%02d", n);
        b.ge(id, K, lhs, rhs, "Remark 2.1 item " + std::to_string(n) + ": " + what);
    };
    rem(1, D(P6, S), (3 * D(S, P4) + 21 * D(G, P4)) / 4, "D_P6S <= (1/4)(3D_SP4+21D_GP4)");
    rem(2, D(S, N2), Rat(5, 3) * D(N2, G), "D_SN2 <= (5/3)D_N2G");
    rem(3, D(P6, N2), 3 * D(N2, G), "D_P6N2 <= 3D_N2G");
    rem(4, D(N2, P4), (10 * D(P6, S) + D(P5, H)) / 10, "D_N2P4 <= (1/10)(10D_P6S+D_P5H)");
    rem(5, D(N2, P4), (6 * D(P6, S) + D(A, N2)) / 5, "D_N2P4 <= (1/5)(6D_P6S+D_AN2)");
    rem(6, D(N2, G), (10 * D(P5, N2) + 3 * D(P5, H)) / 20, "D_N2G <= (1/20)(10D_P5N2+3D_P5H)");
    rem(7, D(N2, G), (2 * D(P5, N2) + D(A, P4)) / 4, "D_N2G <= (1/4)(2D_P5N2+D_AP4)");
    rem(8, D(P6, S), D(S, P4) / 2, "D_P6S <= (1/2)D_SP4");
    rem(9, D(P6, N1), Rat(15, 14) * D(S, P4), "D_P6N1 <= (15/14)D_SP4");
    rem(10, D(P6, S), (D(S, P4) + 8 * D(N1, P4)) / 9, "D_P6S <= (1/9)(D_SP4+8D_N1P4)");
    rem(11, D(G, P4), D(P6, P5) / 2, "D_GP4 <= (1/2)D_P6P5");
    rem(12, D(A, N3), (2 * D(P5, A) + 5 * D(N3, G)) / 13, "D_AN3 <= (1/13)(2D_P5A+5D_N3G)");
    rem(13, D(P5, N2), 2 * D(S, N3) + 7 * D(N2, N3), "D_P5N2 <= 2D_SN3+7D_N2N3");
    rem(14, D(P5, N3), Rat(5, 2) * D(S, N3), "D_P5N3 <= (5/2)D_SN3");
    rem(15, (7 * D(N3, H) + 3 * D(P5, H)) / 20, D(S, N3), "D_SN3 >= (1/20)(7D_N3H+3D_P5H)");
    rem(16, D(A, H), (36 * D(P6, N3) + 4 * D(P6, P5)) / 45, "D_AH <= (1/45)(36D_P6N3+4D_P6P5)");
    rem(17, D(P6, A), Rat(9, 8) * D(A, H), "D_P6A <= (9/8)D_AH");
    rem(18, D(P6, H), (56 * D(S, P4) + 45 * D(P5, P3)) / 70, "D_P6H <= (1/70)(56D_SP4+45D_P5P3)");
    rem(19, D(P6, N2), (27 * D(P5, P3) + 7 * D(P5, G)) / 42, "D_P6N2 <= (1/42)(27D_P5P3+7D_P5G)");
    rem(20, D(N2, G), D(P5, N2), "D_N2G <= D_P5N2");
    rem(21, (14 * D(N2, H) + 7 * D(P5, H)) / 18, D(P6, N3), "D_P6N3 >= (1/18)(14D_N2H+7D_P5H)");
    rem(22, (65 * D(H, P2) + 52 * D(S, P4)) / 60, D(P5, P1), "D_P5P1 >= (1/60)(65D_HP2+52D_SP4)");
    rem(23, D(S, P4), Rat(25, 16) * D(S, G), "D_SP4 <= (25/16)D_SG");
    rem(24, (91 * D(H, P2) + 78 * D(P6, N3)) / 84, D(P5, P1),
        "D_P5P1 >= (1/84)(91D_HP2+78D_P6N3) (printed <=; direction follows Part 24)");
    rem(25, D(P6, N3), Rat(35, 24) * D(S, G), "D_P6N3 <= (35/24)D_SG");
    rem(26, D(P6, N3), Rat(7, 6) * D(S, H), "D_P6N3 <= (7/6)D_SH");
    rem(27, D(N1, G), (4 * D(P5, N1) + 3 * D(P6, N1)) / 7, "D_N1G <= (1/7)(4D_P5N1+3D_P6N1)");
    rem(28, (D(P6, N1) + 8 * D(N2, N1)) / 9, D(N1, G), "D_N1G >= (1/9)(D_P6N1+8D_N2N1)");
    rem(29, Rat(7, 12) * (D(A, P2) + D(S, G)), D(P5, P3), "D_P5P3 >= (7/12)(D_AP2+D_SG)");
    rem(30, D(G, P2), (18 * D(P5, P3) + 42 * D(H, P3)) / 35, "D_GP2 <= (1/35)(18D_P5P3+42D_HP3)");
    rem(31, (7 * D(G, P2) + 14 * D(A, P4)) / 12, D(P5, P3), "D_P5P3 >= (1/12)(7D_GP2+14D_AP4)");
    rem(32, D(A, G) + D(A, P2), 5 * D(S, A), "D_AG+D_AP2 <= 5D_SA");
    rem(33, (5 * D(G, P2) + 6 * D(P5, H)) / 30, D(S, A), "D_SA >= (1/30)(5D_GP2+6D_P5H)");
    rem(34, (2 * D(A, P4) + D(G, P2)) / 6, D(S, A), "D_SA >= (1/6)(2D_AP4+D_GP2)");
    rem(35, (9 * D(P2, P1) + 54 * D(S, A)) / 16, D(P5, P2), "D_P5P2 >= (1/16)(9D_P2P1+54D_SA)");
    rem(36, D(P2, P1), (4 * D(P5, P2) + 108 * D(P3, P2)) / 63, "D_P2P1 <= (1/63)(4D_P5P2+108D_P3P2)");
    rem(37, D(P6, N1), 3 * D(N1, P1), "D_P6N1 <= 3D_N1P1");
    rem(38, D(N1, G), D(P6, N1) / 3, "D_N1G <= (1/3)D_P6N1");
    rem(39, D(P6, N1), (2 * D(S, G) + 7 * D(N1, G)) / 3, "D_P6N1 <= (1/3)(2D_SG+7D_N1G)");
    rem(40, D(P5, N3), Rat(9, 4) * D(N3, P1), "D_P5N3 <= (9/4)D_N3P1");
    rem(41, D(P5, A), 5 * D(A, N1), "D_P5A <= 5D_AN1");
    rem(42, D(P5, N1), Rat(7, 2) * D(N1, P2), "D_P5N1 <= (7/2)D_N1P2");

    // ---- Eq. (14) adjacency (62 relations, branch by branch).
    {
        int n = 0;
        auto a14 = [&](const Expr& lhs, const Expr& rhs, const std::string& what) {
            char id[24];
            std::snprintf(id, sizeof id, "eq14.%02d", ++n);
            b.ge(id, K, lhs, rhs, "Eq. (14): " + what);
        };
        const Expr p6_6p4 = (E(P6) + 6 * E(P4)) / 7;
        const Expr p6_5g = (E(P6) + 5 * E(G)) / 6;
        const Expr s_3g = (E(S) + 3 * E(G)) / 4;
        const Expr n2n2g = (2 * E(N2) + E(G)) / 3;
        const Expr w1 = (10 * E(N2) + E(H) - E(P5)) / 10;
        const Expr w2 = (E(P4) + 6 * E(N2) - E(A)) / 6;
        const Expr p5_2g = (E(P5) + 2 * E(G)) / 3;
        const Expr ppsm = E(P4) + E(P6) - E(S);
        const Expr p6_2p4 = (E(P6) + 2 * E(P4)) / 3;
        const Expr p6_14n1 = (E(P6) + 14 * E(N1)) / 15;
        const Expr s_8n1 = (E(S) + 8 * E(N1)) / 9;
        const Expr a3_g = (3 * E(A) + E(G)) / 4;
        const Expr p5_9n3 = (E(P5) + 9 * E(N3)) / 10;
        const Expr w3 = (8 * E(P6) + 9 * E(H) - 9 * E(A)) / 8;
        const Expr s_4n2 = (E(S) + 4 * E(N2)) / 5;
        const Expr s_3n3 = (E(S) + 3 * E(N3)) / 4;
        const Expr s2_h = (2 * E(S) + E(H)) / 3;
        const Expr w4 = (14 * E(P6) + 9 * E(P3) - 9 * E(P5)) / 14;
        const Expr w5 = (5 * E(H) + 4 * E(S) - 4 * E(P4)) / 5;
        const Expr w6 = (E(P5) + 6 * E(N2) - E(G)) / 6;
        const Expr p5_2n2 = (E(P5) + 2 * E(N2)) / 3;
        const Expr w7 = (7 * E(H) + 6 * E(P6) - 6 * E(N3)) / 7;
        const Expr w8 = (4 * E(H) + 5 * E(S) - 5 * E(G)) / 4;
        const Expr w9 = (E(P6) + 2 * E(N1) - E(G)) / 2;
        const Expr p5_5p6 = (2 * E(P5) + 5 * E(P6)) / 7;
        const Expr n4_5p6 = (4 * E(N2) + 5 * E(P6)) / 9;
        const Expr w10 = (12 * E(P5) + 13 * E(P2) - 12 * E(P1)) / 13;
        const Expr asg = E(A) + E(S) - E(G);
        const Expr w11 = (6 * E(P5) + 5 * E(G) - 6 * E(H)) / 5;
        const Expr w12 = 2 * E(A) + E(G) - 2 * E(P4);
        const Expr w13 = (12 * E(P5) + 7 * E(P2) - 12 * E(P3)) / 7;
        const Expr w14 = 6 * E(S) + E(P2) - 6 * E(A);
        const Expr w15 = (16 * E(P5) + 9 * E(P1) - 16 * E(P2)) / 9;

        a14(E(G), p6_6p4, "G <= (P6+6P4)/7");
        a14(p6_6p4, p6_5g, "(P6+6P4)/7 <= (P6+5G)/6");
        a14(p6_6p4, s_3g, "(P6+6P4)/7 <= (S+3G)/4 [Part 1]");
        a14(p6_5g, n2n2g, "(P6+5G)/6 <= (2N2+G)/3 [Part 3]");
        a14(s_3g, n2n2g, "(S+3G)/4 <= (2N2+G)/3 [Part 2]");
        a14(n2n2g, E(N1), "(2N2+G)/3 <= N1");
        a14(E(N1), w1, "N1 <= (10N2+H-P5)/10");
        a14(E(N1), w2, "N1 <= (P4+6N2-A)/6");
        a14(w1, p5_2g, "(10N2+H-P5)/10 <= (P5+2G)/3 [Part 6]");
        a14(w1, ppsm, "(10N2+H-P5)/10 <= P4+P6-S [Part 4]");
        a14(w2, p5_2g, "(P4+6N2-A)/6 <= (P5+2G)/3 [Part 7]");
        a14(w2, ppsm, "(P4+6N2-A)/6 <= P4+P6-S [Part 5]");
        a14(p5_2g, p6_2p4, "(P5+2G)/3 <= (P6+2P4)/3 [Part 11]");
        a14(ppsm, p6_2p4, "P4+P6-S <= (P6+2P4)/3 [Part 8]");
        a14(ppsm, p6_14n1, "P4+P6-S <= (P6+14N1)/15 [Part 9]");
        a14(ppsm, s_8n1, "P4+P6-S <= (S+8N1)/9 [Part 10]");
        a14(p6_2p4, E(N3), "(P6+2P4)/3 <= N3");
        a14(p6_14n1, E(N3), "(P6+14N1)/15 <= N3");
        a14(s_8n1, E(N3), "(S+8N1)/9 <= N3");
        a14(E(N3), E(N2), "N3 <= N2");
        a14(E(N2), a3_g, "N2 <= (3A+G)/4");
        a14(E(N2), w4, "N2 <= (14P6+9P3-9P5)/14");
        a14(a3_g, p5_9n3, "(3A+G)/4 <= (P5+9N3)/10 [Part 12]");
        a14(p5_9n3, w3, "(P5+9N3)/10 <= (8P6+9H-9A)/8 [Part 16]");
        a14(p5_9n3, s_4n2, "(P5+9N3)/10 <= (S+4N2)/5 [Part 13]");
        a14(p5_9n3, s_3n3, "(P5+9N3)/10 <= (S+3N3)/4 [Part 14]");
        a14(p5_9n3, s2_h, "(P5+9N3)/10 <= (2S+H)/3 [Part 15]");
        a14(w3, E(A), "(8P6+9H-9A)/8 <= A [Part 17]");
        a14(s_4n2, E(A), "(S+4N2)/5 <= A");
        a14(s_3n3, E(A), "(S+3N3)/4 <= A");
        a14(s2_h, E(A), "(2S+H)/3 <= A");
        a14(E(A), w5, "A <= (5H+4S-4P4)/5");
        a14(E(A), w6, "A <= (P5+6N2-G)/6");
        a14(w4, w5, "(14P6+9P3-9P5)/14 <= (5H+4S-4P4)/5 [Part 18]");
        a14(w4, w6, "(14P6+9P3-9P5)/14 <= (P5+6N2-G)/6 [Part 19]");
        a14(w6, p5_2n2, "(P5+6N2-G)/6 <= (P5+2N2)/3 [Part 20]");
        a14(p5_2n2, w7, "(P5+2N2)/3 <= (7H+6P6-6N3)/7 [Part 21]");
        a14(w5, w8, "(5H+4S-4P4)/5 <= (4H+5S-5G)/4 [Part 23]");
        a14(w5, E(S), "(5H+4S-4P4)/5 <= S");
        a14(w5, w10, "(5H+4S-4P4)/5 <= (12P5+13P2-12P1)/13 [Part 22]");
        a14(w7, w8, "(7H+6P6-6N3)/7 <= (4H+5S-5G)/4 [Part 25]");
        a14(w7, E(S), "(7H+6P6-6N3)/7 <= S [Part 26]");
        a14(w7, w10, "(7H+6P6-6N3)/7 <= (12P5+13P2-12P1)/13 [Part 24]");
        a14(w8, E(P5), "(4H+5S-5G)/4 <= P5");
        a14(E(S), w9, "S <= (P6+2N1-G)/2");
        a14(w9, p5_5p6, "(P6+2N1-G)/2 <= (2P5+5P6)/7 [Part 27; display prints 2P4+5P6]");
        a14(n4_5p6, w9, "(4N2+5P6)/9 <= (P6+2N1-G)/2 [Part 28; display prints the reverse direction]");
        a14(E(P5), E(P6), "P5 <= P6");
        a14(p5_5p6, E(P6), "(2P5+5P6)/7 <= P6");
        a14(n4_5p6, E(P6), "(4N2+5P6)/9 <= P6");
        a14(w10, E(P6), "(12P5+13P2-12P1)/13 <= P6");
        a14(E(P6), asg, "P6 <= A+S-G");
        a14(E(P6), w11, "P6 <= (6P5+5G-6H)/5");
        a14(E(P6), w12, "P6 <= 2A+G-2P4");
        a14(asg, w13, "A+S-G <= (12P5+7P2-12P3)/7 [Part 29]");
        a14(asg, w14, "A+S-G <= 6S+P2-6A [Part 32]");
        a14(w11, w13, "(6P5+5G-6H)/5 <= (12P5+7P2-12P3)/7 [Part 30]");
        a14(w11, w14, "(6P5+5G-6H)/5 <= 6S+P2-6A [Part 33]");
        a14(w12, w13, "2A+G-2P4 <= (12P5+7P2-12P3)/7 [Part 31]");
        a14(w12, w14, "2A+G-2P4 <= 6S+P2-6A [Part 34]");
        a14(w13, w15, "(12P5+7P2-12P3)/7 <= (16P5+9P1-16P2)/9 [Part 36]");
        a14(w14, w15, "6S+P2-6A <= (16P5+9P1-16P2)/9 [Part 35]");
    }

    // ---- Eq. (15) adjacency. The I/T/J-bearing relations are registered
    // pointwise over the divergence kernels and duplicated at distribution
    // level; Section 3 (Eq. 18) proves them.
    {
        const Expr i_tail = (3 * E(I) + 2 * E(P4)) / 2;
        const Expr t_tail = (E(T) + 2 * E(A)) / 2;
        const Expr j_tail = (3 * E(J) + 16 * E(G)) / 16;
        b.ge("eq15.01", K, E(P2), (E(P6) + 3 * E(P1)) / 4, "Eq. (15): P2 <= (P6+3P1)/4");
        b.ge("eq15.02", K, (E(P6) + 3 * E(P1)) / 4, E(N1), "Eq. (15): (P6+3P1)/4 <= N1 [Part 37]");
        b.ge("eq15.03", K, E(N1), (E(P6) + 3 * E(G)) / 4, "Eq. (15): N1 <= (P6+3G)/4 [Part 38]");
        b.ge("eq15.04", K, (E(P6) + 3 * E(G)) / 4, (E(S) + 5 * E(N1)) / 6,
             "Eq. (15): (P6+3G)/4 <= (S+5N1)/6 [Part 39]");
        b.ge("eq15.05", K, (E(S) + 5 * E(N1)) / 6, E(N2), "Eq. (15): (S+5N1)/6 <= N2");
        b.ge("eq15.06", K, E(P2), (4 * E(P5) + 9 * E(P1)) / 13, "Eq. (15): P2 <= (4P5+9P1)/13");
        b.ge("eq15.07", K, (4 * E(P5) + 9 * E(P1)) / 13, E(N3), "Eq. (15): (4P5+9P1)/13 <= N3 [Part 40]");
        b.ge("eq15.08", K, E(N3), (E(P5) + 5 * E(N1)) / 6, "Eq. (15): N3 <= (P5+5N1)/6");
        b.ge("eq15.09", K, (E(P5) + 5 * E(N1)) / 6, E(A), "Eq. (15): (P5+5N1)/6 <= A [Part 41]");
        b.ge("eq15.10", K, E(A), i_tail, "Eq. (15): A <= (3I+2P4)/2, pointwise [proved via Theorem 3.1]");
        b.ge("eq15.11", K, i_tail, E(P5), "Eq. (15): (3I+2P4)/2 <= P5, pointwise [Theorem 3.1 Part 2]");
        b.ge("eq15.12", K, i_tail, E(S), "Eq. (15): (3I+2P4)/2 <= S, pointwise [Theorem 3.1 Part 4]");
        b.ge("eq15.13", K, E(P5), t_tail, "Eq. (15): P5 <= (T+2A)/2, pointwise [Theorem 3.1 Part 3]");
        b.ge("eq15.14", K, t_tail, j_tail, "Eq. (15): (T+2A)/2 <= (3J+16G)/16, pointwise [Theorem 3.1 Part 3]");
        b.ge("eq15.15", K, E(P2), E(P3), "Eq. (15): P2 <= P3");
        b.ge("eq15.16", K, E(P3), (2 * E(P5) + 7 * E(P2)) / 9, "Eq. (15): P3 <= (2P5+7P2)/9");
        b.ge("eq15.17", K, (2 * E(P5) + 7 * E(P2)) / 9, E(N1), "Eq. (15): (2P5+7P2)/9 <= N1 [Part 42]");
        b.ge("eq15.10d", Dist, E(A), i_tail, "Eq. (15): A <= (3I+2P4)/2 over distributions");
        b.ge("eq15.11d", Dist, i_tail, E(P5), "Eq. (15): (3I+2P4)/2 <= P5 over distributions");
        b.ge("eq15.12d", Dist, i_tail, E(S), "Eq. (15): (3I+2P4)/2 <= S over distributions");
        b.ge("eq15.13d", Dist, E(P5), t_tail, "Eq. (15): P5 <= (T+2A)/2 over distributions");
        b.ge("eq15.14d", Dist, t_tail, j_tail, "Eq. (15): (T+2A)/2 <= (3J+16G)/16 over distributions");
    }

    // ---- Eq. (16): seven adjacent relations over distributions.
    b.ge("eq16.1", Dist, D(A, H) / 2, E(I), "Eq. (16): (1/2)D_AH <= I");
    b.ge("eq16.2", Dist, E(I), 4 * D(N2, N1), "Eq. (16): I <= 4D_N2N1");
    b.ge("eq16.3", Dist, 4 * D(N2, N1), Rat(4, 3) * D(N2, G), "Eq. (16): 4D_N2N1 <= (4/3)D_N2G");
    b.ge("eq16.4", Dist, Rat(4, 3) * D(N2, G), D(A, G), "Eq. (16): (4/3)D_N2G <= D_AG");
    b.ge("eq16.5", Dist, D(A, G), 4 * D(A, N2), "Eq. (16): D_AG <= 4D_AN2");
    b.ge("eq16.6", Dist, 4 * D(A, N2), E(J) / 8, "Eq. (16): 4D_AN2 <= (1/8)J");
    b.ge("eq16.7", Dist, E(J) / 8, E(T), "Eq. (16): (1/8)J <= T");

    // ---- Eq. (17): J = 4(I + T), as an identity.
    b.identity("eq17.id", Dist, E(J) - 4 * E(I) - 4 * E(T), "Eq. (17): J = 4(I+T)");

    // ---- Eq. (18) adjacency over distributions.
    {
        const Expr i_n1 = (E(I) + 4 * E(N1)) / 4;
        const Expr i_p4 = (2 * E(P4) + 3 * E(I)) / 2;
        const Expr t_tail = (E(T) + 2 * E(A)) / 2;
        const Expr j_tail = (3 * E(J) + 16 * E(G)) / 16;
        b.ge("eq18.1", Dist, E(N3), i_n1, "Eq. (18): N3 <= (I+4N1)/4 [Theorem 3.1 Part 1]");
        b.ge("eq18.2", Dist, i_n1, E(N2), "Eq. (18): (I+4N1)/4 <= N2");
        b.ge("eq18.3", Dist, E(N2), E(A), "Eq. (18): N2 <= A");
        b.ge("eq18.4", Dist, E(A), i_p4, "Eq. (18): A <= (2P4+3I)/2");
        b.ge("eq18.5", Dist, i_p4, E(P5), "Eq. (18): (2P4+3I)/2 <= P5 [Theorem 3.1 Part 2]");
        b.ge("eq18.6", Dist, i_p4, E(S), "Eq. (18): (2P4+3I)/2 <= S [Theorem 3.1 Part 4]");
        b.ge("eq18.7", Dist, E(P5), t_tail, "Eq. (18): P5 <= (T+2A)/2 [Theorem 3.1 Part 3]");
        b.ge("eq18.8", Dist, t_tail, j_tail, "Eq. (18): (T+2A)/2 <= (3J+16G)/16 [Theorem 3.1 Part 3]");
    }

    // ---- Theorem 3.1 Part 4, mean-only sub-claim: 4D_N2N1 <= (2/3)D_SP4.
    // This is the statement certificate 43 replays.
    b.ge("thm31.p04", K, 4 * D(N2, N1), Rat(2, 3) * D(S, P4),
         "Theorem 3.1 Part 4: 4D_N2N1 <= (2/3)D_SP4 (kernel level)");

    // ---- Remark 3.1, items (i)-(iv); relations already displayed in
    // Eq. (16) are not repeated.
    b.ge("r31.i1", Dist, 4 * D(N3, N1), E(I), "Remark 3.1 (i): 4D_N3N1 <= I");
    b.ge("r31.i2", Dist, E(I), Rat(2, 3) * D(P5, P4), "Remark 3.1 (i): I <= (2/3)D_P5P4");
    b.ge("r31.ii1", Dist, Rat(2, 5) * D(S, P4), E(I), "Remark 3.1 (ii): (2/5)D_SP4 <= I");
    b.ge("r31.ii2", Dist, E(I), Rat(2, 3) * D(S, P4), "Remark 3.1 (ii): I <= (2/3)D_SP4");
    b.ge("r31.iii1", Dist, Rat(2, 3) * D(A, G), E(I), "Remark 3.1 (iii): (2/3)h <= I");
    b.ge("r31.iii2", Dist, E(I), D(A, G), "Remark 3.1 (iii): I <= h");
    b.ge("r31.iv", Dist, E(T), E(J) / 4, "Remark 3.1 (iv): T <= (1/4)J");

    std::sort(b.out.begin(), b.out.end(), [](const Statement& x, const Statement& y) { return x.id < y.id; });
    return b.out;
}

} // namespace

const std::vector<Statement>& all_statements() {
    static const std::vector<Statement> statements = build_all();
    return statements;
}

const Statement* find(const std::string& id) {
    static const std::map<std::string, const Statement*> index = [] {
        std::map<std::string, const Statement*> m;
        for (const auto& s : all_statements()) m[s.id] = &s;
        return m;
    }();
    auto it = index.find(id);
    return it == index.end() ? nullptr : it->second;
}

namespace {

nlohmann::ordered_json statement_to_json(const Statement& s) {
    nlohmann::ordered_json j;
    j["id"] = s.id;
    j["level"] = s.level == Level::Kernel ? "kernel" : "distribution";
    j["kind"] = s.kind == ClaimKind::Nonneg ? "nonneg" : "identity";
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [coeff, kind] : s.combo.terms) {
        terms.push_back({{"coeff", algebra::rat_to_string(coeff)}, {"kernel", kind.name()}});
    }
    j["terms"] = std::move(terms);
    j["source"] = s.source;
    return j;
}

} // namespace

void export_json(std::ostream& out) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& s : all_statements()) arr.push_back(statement_to_json(s));
    out << arr.dump(2) << "\n";
}

void export_json_file(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    export_json(out);
    if (!out.good()) throw Error("write failed: " + path);
}

std::vector<Statement> import_json(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("registry JSON: ") + e.what());
    }
    std::vector<Statement> out;
    for (const auto& j : doc) {
        Statement s;
        s.id = j.at("id").get<std::string>();
        s.level = j.at("level").get<std::string>() == "kernel" ? Level::Kernel : Level::Distribution;
        s.kind = j.at("kind").get<std::string>() == "nonneg" ? ClaimKind::Nonneg : ClaimKind::Identity;
        for (const auto& t : j.at("terms")) {
            s.combo.terms.emplace_back(algebra::rat_from_string(t.at("coeff").get<std::string>()),
                                       KernelKind::parse(t.at("kernel").get<std::string>()));
        }
        s.source = j.at("source").get<std::string>();
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace meanineq::registry
