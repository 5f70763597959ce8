#ifndef MEANINEQ_RADICAL_HPP
#define MEANINEQ_RADICAL_HPP

#include "meanineq/polynomial.hpp"

#include <array>
#include <string>

namespace meanineq::algebra {

// Element of the ring Q[t][R1, R2] / (R1^2 - (2t^4+2), R2^2 - (2t^2+2)),
// i.e. P00 + P10*R1 + P01*R2 + P11*R1*R2 with polynomial parts. R1 and R2
// stand for sqrt(2t^4+2) and sqrt(2t^2+2); both are real and positive for
// every real t, so evaluation is well-defined on the whole line.
//
// Signature index: bit 0 set = R1 present, bit 1 set = R2 present.
class RadicalExpr {
public:
    RadicalExpr() = default;
    explicit RadicalExpr(Poly polynomial_part);
    static RadicalExpr radical(int signature, Poly coefficient);
    static RadicalExpr r1() { return radical(1, Poly(Rat(1))); }
    static RadicalExpr r2() { return radical(2, Poly(Rat(1))); }

    const Poly& part(int signature) const { return parts_[signature]; }
    bool is_zero() const;
    bool is_polynomial() const;
    // Number of nonzero parts among the three radical signatures.
    int radical_term_count() const;

    RadicalExpr operator-() const;
    RadicalExpr& operator+=(const RadicalExpr& rhs);
    RadicalExpr& operator-=(const RadicalExpr& rhs);
    friend RadicalExpr operator+(RadicalExpr lhs, const RadicalExpr& rhs) { return lhs += rhs; }
    friend RadicalExpr operator-(RadicalExpr lhs, const RadicalExpr& rhs) { return lhs -= rhs; }
    friend RadicalExpr operator*(const RadicalExpr& lhs, const RadicalExpr& rhs);
    friend RadicalExpr operator*(const Rat& c, const RadicalExpr& e);
    friend RadicalExpr operator*(const Poly& p, const RadicalExpr& e);
    bool operator==(const RadicalExpr& rhs) const = default;

    double eval_double(double t) const;
    long double eval_long_double(long double t) const;

    // Positive gcd of the contents of all parts (0 if the expression is 0).
    Rat content() const;
    RadicalExpr primitive_part() const;

    std::string to_string() const;

private:
    std::array<Poly, 4> parts_{};
};

// Squaring argument: given S manifestly nonnegative, S - T >= 0
// follows from S^2 - T^2 >= 0. Returns S^2 - T^2 with radical exponents
// reduced. Throws NoProgressError when S - T carries radicals and the result
// does not have strictly fewer nonzero radical signatures; squaring a pure
// polynomial split (sign reorganization) is allowed.
RadicalExpr square_compare(const RadicalExpr& s, const RadicalExpr& t);

} // namespace meanineq::algebra

#endif
