#ifndef MEANINEQ_KERNELS_HPP
#define MEANINEQ_KERNELS_HPP

#include "meanineq/rational.hpp"

#include <string>
#include <variant>
#include <vector>

namespace meanineq::kernels {

using algebra::Rat;

// Pair of positive finite reals; the two arguments of every mean.
struct PositivePair {
    double a;
    double b;

    // Throws DomainError unless both entries are positive and finite.
    static PositivePair checked(double a, double b);
};

// The named means of the chain P1 <= P2 <= P3 <= H <= P4 <= G <= N1 <= N3 <=
// N2 <= A <= {P5, S} <= P6.
enum class NamedMean { P1, P2, P3, H, P4, G, N1, N3, N2, A, P5, S, P6 };

// Per-coordinate summands of the distribution divergences.
enum class DivKernel { I, J, T, Delta, Hellinger };

struct GiniKind {
    double r, s;
    bool operator==(const GiniKind&) const = default;
};
struct PowerKind {
    double r;
    bool operator==(const PowerKind&) const = default;
};
struct LehmerKind {
    double r;
    bool operator==(const LehmerKind&) const = default;
};

// Tagged identifier of a degree-1 homogeneous symmetric binary function.
class KernelKind {
public:
    using Variant = std::variant<NamedMean, GiniKind, PowerKind, LehmerKind, DivKernel>;

    KernelKind(NamedMean m) : v_(m) {}
    KernelKind(GiniKind g) : v_(g) {}
    KernelKind(PowerKind p) : v_(p) {}
    KernelKind(LehmerKind l) : v_(l) {}
    KernelKind(DivKernel d) : v_(d) {}

    const Variant& variant() const { return v_; }
    bool is_mean() const { return !std::holds_alternative<DivKernel>(v_); }
    bool operator==(const KernelKind&) const = default;

    std::string name() const;
    // Inverse of name(); also accepts "gini:r,s", "power:r", "lehmer:r".
    // Throws ParseError.
    static KernelKind parse(const std::string& text);

private:
    Variant v_;
};

// Gini parameters (r, s) that each named mean resolves to; N2 and N3 are not
// Gini means and have no entry here.
bool named_gini_params(NamedMean m, double& r, double& s);

// Eq.-style closed forms. All of them rescale so no intermediate overflows
// for |r|, |s| <= 64 and a/b anywhere in [1e-15, 1e15].
double gini_mean(double r, double s, const PositivePair& p);
double power_mean(double r, const PositivePair& p);
double lehmer_mean(double r, const PositivePair& p);

double eval_kernel(const KernelKind& kind, const PositivePair& p);

// f(x) = F(x, 1); throws DomainError for x <= 0 or non-finite.
double ratio_profile(const KernelKind& kind, double x);

// Rational-weighted sum of kernels; the universal shape of an inequality
// side. Empty combination evaluates to 0.
struct Combination {
    std::vector<std::pair<Rat, KernelKind>> terms;
};

double eval_combination(const Combination& combo, const PositivePair& p);

} // namespace meanineq::kernels

#endif
