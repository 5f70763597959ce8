#include "meanineq/expand.hpp"

#include "meanineq/errors.hpp"
#include "meanineq/parse.hpp"

namespace meanineq::algebra {

using kernels::KernelKind;
using kernels::NamedMean;

namespace {

struct Profile {
    RadicalExpr num;
    Poly den;
};

Profile make_profile(const char* num, const char* den) { return {parse_radical(num), parse_poly(den)}; }

const Profile& profile_for(NamedMean m) {
    // Eq.-(10)-style profiles with x = t^2; R1 = sqrt(2t^4+2) carries the S
    // mean, R2 = sqrt(2t^2+2) the N2 mean.
    static const Profile table[] = {
        /* P1 */ make_profile("t^6+t^2", "t^6+1"),
        /* P2 */ make_profile("t^4+t^2", "t^4+1"),
        /* P3 */ make_profile("t^3+t^2", "t^3+1"),
        /* H  */ make_profile("2*t^2", "t^2+1"),
        /* P4 */ make_profile("4*t^2", "(t+1)^2"),
        /* G  */ make_profile("t", "1"),
        /* N1 */ make_profile("(t+1)^2", "4"),
        /* N3 */ make_profile("t^2+t+1", "3"),
        /* N2 */ make_profile("(t+1)*R2", "4"),
        /* A  */ make_profile("t^2+1", "2"),
        /* P5 */ make_profile("(t^2+1)^2", "(t+1)^2"),
        /* S  */ make_profile("R1", "2"),
        /* P6 */ make_profile("t^4+1", "t^2+1"),
    };
    return table[static_cast<int>(m)];
}

// Parametric kinds are accepted only when they coincide with a named mean.
NamedMean resolve_mean(const KernelKind& kind) {
    return std::visit(
        [&](const auto& k) -> NamedMean {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, NamedMean>) {
                return k;
            } else if constexpr (std::is_same_v<T, kernels::DivKernel>) {
                throw UnsupportedKernelError("divergence kernel " + kind.name() +
                                             " has no radical-polynomial profile");
            } else {
                double r = 0, s = 0;
                if constexpr (std::is_same_v<T, kernels::GiniKind>) {
                    r = k.r;
                    s = k.s;
                } else if constexpr (std::is_same_v<T, kernels::PowerKind>) {
                    r = k.r;
                    s = 0;
                } else {
                    r = k.r;
                    s = k.r - 1;
                }
                for (int i = 0; i <= static_cast<int>(NamedMean::P6); ++i) {
                    const auto m = static_cast<NamedMean>(i);
                    double nr = 0, ns = 0;
                    if (!kernels::named_gini_params(m, nr, ns)) continue;
                    if ((r == nr && s == ns) || (r == ns && s == nr)) return m;
                }
                throw UnsupportedParamError("parametric kernel " + kind.name() +
                                            " is outside the named mean set");
            }
        },
        kind.variant());
}

} // namespace

void named_profile(NamedMean m, RadicalExpr& numerator, Poly& denominator) {
    const Profile& p = profile_for(m);
    numerator = p.num;
    denominator = p.den;
}

Expansion expand_combination(const kernels::Combination& combo) {
    // Least common denominator, tracked as numeric content times primitive
    // polynomial so constant denominators combine arithmetically.
    Rat den_content(1);
    Poly den_prim(Rat(1));
    std::vector<std::pair<Rat, const Profile*>> terms;
    for (const auto& [coeff, kind] : combo.terms) {
        const Profile& prof = profile_for(resolve_mean(kind));
        terms.emplace_back(coeff, &prof);
        Rat c = prof.den.content();
        Poly prim = prof.den.primitive_part();
        den_content = rat_num(den_content) * rat_num(c) / boost::multiprecision::gcd(rat_num(den_content), rat_num(c));
        den_prim = poly_lcm(den_prim, prim);
    }
    Poly denominator = den_content * den_prim;
    RadicalExpr numerator;
    for (const auto& [coeff, prof] : terms) {
        Poly cofactor = divide(denominator, prof->den).first;
        numerator += coeff * (cofactor * prof->num);
    }
    if (!numerator.is_zero()) {
        if (!nonneg_coeffs(denominator) || denominator.leading() <= 0) {
            throw Error("internal: expansion denominator is not manifestly positive");
        }
    }
    return Expansion{std::move(numerator), std::move(denominator)};
}

} // namespace meanineq::algebra
