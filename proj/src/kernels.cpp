#include "meanineq/kernels.hpp"

#include "meanineq/errors.hpp"

#include <cmath>
#include <cstdio>

namespace meanineq::kernels {

PositivePair PositivePair::checked(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b) || a <= 0.0 || b <= 0.0) {
        throw DomainError("arguments must be positive finite reals, got (" + std::to_string(a) + ", " +
                          std::to_string(b) + ")");
    }
    return PositivePair{a, b};
}

namespace {

void check_pair(const PositivePair& p) { PositivePair::checked(p.a, p.b); }

void check_param(double r, const char* what) {
    if (!std::isfinite(r)) throw DomainError(std::string(what) + " parameter must be finite");
}

// log of (a^r + b^r) computed as r*log(m) + log((a/m)^r + (b/m)^r) with m
// chosen so both ratios-to-the-r lie in (0, 1]; the bracket is in [1, 2].
double log_power_sum(double r, double a, double b) {
    const double m = (r >= 0.0) ? std::fmax(a, b) : std::fmin(a, b);
    const double x = std::pow(a / m, r);
    const double y = std::pow(b / m, r);
    return r * std::log(m) + std::log(x + y);
}

} // namespace

bool named_gini_params(NamedMean m, double& r, double& s) {
    switch (m) {
    case NamedMean::P1: r = -3; s = -2; return true;
    case NamedMean::P2: r = -2; s = -1; return true;
    case NamedMean::P3: r = -1.5; s = -0.5; return true;
    case NamedMean::H: r = -1; s = 0; return true;
    case NamedMean::P4: r = -0.5; s = 0; return true;
    case NamedMean::G: r = -0.5; s = 0.5; return true;
    case NamedMean::N1: r = 0; s = 0.5; return true;
    case NamedMean::A: r = 0; s = 1; return true;
    case NamedMean::P5: r = 0.5; s = 1; return true;
    case NamedMean::S: r = 0; s = 2; return true;
    case NamedMean::P6: r = 1; s = 2; return true;
    case NamedMean::N2:
    case NamedMean::N3: return false;
    }
    return false;
}

double gini_mean(double r, double s, const PositivePair& p) {
    check_pair(p);
    check_param(r, "gini r");
    check_param(s, "gini s");
    const double a = p.a, b = p.b;
    if (r == s) {
        if (r == 0.0) return std::sqrt(a) * std::sqrt(b);
        // exp((a^r ln a + b^r ln b) / (a^r + b^r)), rescaled so the weights
        // stay bounded.
        const double m = (r >= 0.0) ? std::fmax(a, b) : std::fmin(a, b);
        const double wa = std::pow(a / m, r);
        const double wb = std::pow(b / m, r);
        return std::exp((wa * std::log(a) + wb * std::log(b)) / (wa + wb));
    }
    if ((r >= 0.0) == (s >= 0.0)) {
        // Same rescaling point for both sums: the m^r / m^s prefactors
        // collapse to a single exact factor of m outside the root.
        const double m = (r >= 0.0) ? std::fmax(a, b) : std::fmin(a, b);
        const double x1 = std::pow(a / m, r) + std::pow(b / m, r);
        const double x2 = std::pow(a / m, s) + std::pow(b / m, s);
        return m * std::exp(std::log(x1 / x2) / (r - s));
    }
    // Mixed signs: rescale each sum separately; the prefactor exponents
    // alpha, beta are in (0, 1) and alpha + beta = 1, so the combined log
    // stays between ln(min) and ln(max).
    const double mr = (r >= 0.0) ? std::fmax(a, b) : std::fmin(a, b);
    const double ms = (s >= 0.0) ? std::fmax(a, b) : std::fmin(a, b);
    const double x1 = std::pow(a / mr, r) + std::pow(b / mr, r);
    const double x2 = std::pow(a / ms, s) + std::pow(b / ms, s);
    const double alpha = r / (r - s);
    const double beta = -s / (r - s);
    return std::exp(alpha * std::log(mr) + beta * std::log(ms) + std::log(x1 / x2) / (r - s));
}

double power_mean(double r, const PositivePair& p) {
    check_pair(p);
    check_param(r, "power r");
    if (r == 0.0) return std::sqrt(p.a) * std::sqrt(p.b);
    const double m = (r >= 0.0) ? std::fmax(p.a, p.b) : std::fmin(p.a, p.b);
    const double x = std::pow(p.a / m, r);
    const double y = std::pow(p.b / m, r);
    return m * std::pow((x + y) / 2.0, 1.0 / r);
}

double lehmer_mean(double r, const PositivePair& p) {
    check_pair(p);
    check_param(r, "lehmer r");
    return std::exp(log_power_sum(r, p.a, p.b) - log_power_sum(r - 1.0, p.a, p.b));
}

namespace {

double eval_named(NamedMean m, const PositivePair& p) {
    const double a = p.a, b = p.b;
    switch (m) {
    case NamedMean::N2: {
        const double mx = std::fmax(a, b);
        const double ra = a / mx, rb = b / mx;
        return mx * ((std::sqrt(ra) + std::sqrt(rb)) / 2.0) * std::sqrt((ra + rb) / 2.0);
    }
    case NamedMean::N3: {
        const double mx = std::fmax(a, b);
        const double ra = a / mx, rb = b / mx;
        return mx * (ra + std::sqrt(ra * rb) + rb) / 3.0;
    }
    default: {
        double r = 0, s = 0;
        named_gini_params(m, r, s);
        return gini_mean(r, s, p);
    }
    }
}

double eval_div(DivKernel k, const PositivePair& p) {
    const double a = p.a, b = p.b;
    switch (k) {
    case DivKernel::I:
        return 0.5 * (a * std::log(2.0 * a / (a + b)) + b * std::log(2.0 * b / (a + b)));
    case DivKernel::J:
        // The (a-b) factor short-circuits the log on the diagonal.
        return a == b ? 0.0 : (a - b) * std::log(a / b);
    case DivKernel::T:
        if (a == b) return 0.0;
        return ((a + b) / 2.0) * std::log((a + b) / (2.0 * std::sqrt(a) * std::sqrt(b)));
    case DivKernel::Delta: {
        const double d = a - b;
        return d * d / (a + b);
    }
    case DivKernel::Hellinger: {
        const double d = std::sqrt(a) - std::sqrt(b);
        return d * d / 2.0;
    }
    }
    return 0.0;
}

} // namespace

double eval_kernel(const KernelKind& kind, const PositivePair& p) {
    check_pair(p);
    return std::visit(
        [&](const auto& k) -> double {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, NamedMean>) {
                return eval_named(k, p);
            } else if constexpr (std::is_same_v<T, GiniKind>) {
                return gini_mean(k.r, k.s, p);
            } else if constexpr (std::is_same_v<T, PowerKind>) {
                return power_mean(k.r, p);
            } else if constexpr (std::is_same_v<T, LehmerKind>) {
                return lehmer_mean(k.r, p);
            } else {
                return eval_div(k, p);
            }
        },
        kind.variant());
}

double ratio_profile(const KernelKind& kind, double x) {
    if (!std::isfinite(x) || x <= 0.0) throw DomainError("ratio_profile requires x > 0");
    return eval_kernel(kind, PositivePair{x, 1.0});
}

double eval_combination(const Combination& combo, const PositivePair& p) {
    check_pair(p);
    // Neumaier summation; several registry gaps are tiny differences of
    // O(max(a,b)) terms.
    double sum = 0.0, comp = 0.0;
    for (const auto& [coeff, kind] : combo.terms) {
        const double term = algebra::rat_to_double(coeff) * eval_kernel(kind, p);
        const double t = sum + term;
        if (std::fabs(sum) >= std::fabs(term)) {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
    }
    return sum + comp;
}

std::string KernelKind::name() const {
    return std::visit(
        [](const auto& k) -> std::string {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, NamedMean>) {
                switch (k) {
                case NamedMean::P1: return "P1";
                case NamedMean::P2: return "P2";
                case NamedMean::P3: return "P3";
                case NamedMean::H: return "H";
                case NamedMean::P4: return "P4";
                case NamedMean::G: return "G";
                case NamedMean::N1: return "N1";
                case NamedMean::N3: return "N3";
                case NamedMean::N2: return "N2";
                case NamedMean::A: return "A";
                case NamedMean::P5: return "P5";
                case NamedMean::S: return "S";
                case NamedMean::P6: return "P6";
                }
                return "?";
            } else if constexpr (std::is_same_v<T, GiniKind>) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "gini:%.17g,%.17g", k.r, k.s);
                return buf;
            } else if constexpr (std::is_same_v<T, PowerKind>) {
                char buf[48];
                std::snprintf(buf, sizeof buf, "power:%.17g", k.r);
                return buf;
            } else if constexpr (std::is_same_v<T, LehmerKind>) {
                char buf[48];
                std::snprintf(buf, sizeof buf, "lehmer:%.17g", k.r);
                return buf;
            } else {
                switch (k) {
                case DivKernel::I: return "I";
                case DivKernel::J: return "J";
                case DivKernel::T: return "T";
                case DivKernel::Delta: return "Delta";
                case DivKernel::Hellinger: return "Hellinger";
                }
                return "?";
            }
        },
        v_);
}

KernelKind KernelKind::parse(const std::string& text) {
    static const std::pair<const char*, NamedMean> named[] = {
        {"P1", NamedMean::P1}, {"P2", NamedMean::P2}, {"P3", NamedMean::P3}, {"H", NamedMean::H},
        {"P4", NamedMean::P4}, {"G", NamedMean::G},   {"N1", NamedMean::N1}, {"N3", NamedMean::N3},
        {"N2", NamedMean::N2}, {"A", NamedMean::A},   {"P5", NamedMean::P5}, {"S", NamedMean::S},
        {"P6", NamedMean::P6},
    };
    for (const auto& [n, m] : named) {
        if (text == n) return KernelKind(m);
    }
    static const std::pair<const char*, DivKernel> divs[] = {
        {"I", DivKernel::I},         {"J", DivKernel::J},
        {"T", DivKernel::T},         {"Delta", DivKernel::Delta},
        {"Hellinger", DivKernel::Hellinger},
    };
    for (const auto& [n, d] : divs) {
        if (text == n) return KernelKind(d);
    }
    auto parse_reals = [&](const std::string& body, double* out, int n) {
        size_t pos = 0;
        for (int i = 0; i < n; ++i) {
            size_t end = (i + 1 == n) ? body.size() : body.find(',', pos);
            if (end == std::string::npos) throw ParseError("bad kernel parameters in \"" + text + "\"");
            size_t used = 0;
            try {
                out[i] = std::stod(body.substr(pos, end - pos), &used);
            } catch (const std::exception&) {
                throw ParseError("bad kernel parameter in \"" + text + "\"");
            }
            if (used != end - pos) throw ParseError("bad kernel parameter in \"" + text + "\"");
            pos = end + 1;
        }
    };
    if (text.rfind("gini:", 0) == 0) {
        double rs[2];
        parse_reals(text.substr(5), rs, 2);
        return KernelKind(GiniKind{rs[0], rs[1]});
    }
    if (text.rfind("power:", 0) == 0) {
        double r;
        parse_reals(text.substr(6), &r, 1);
        return KernelKind(PowerKind{r});
    }
    if (text.rfind("lehmer:", 0) == 0) {
        double r;
        parse_reals(text.substr(7), &r, 1);
        return KernelKind(LehmerKind{r});
    }
    throw ParseError("unknown kernel \"" + text + "\"");
}

} // namespace meanineq::kernels
