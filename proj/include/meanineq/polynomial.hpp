#ifndef MEANINEQ_POLYNOMIAL_HPP
#define MEANINEQ_POLYNOMIAL_HPP

#include "meanineq/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace meanineq::algebra {

// Dense univariate polynomial over Q in the variable t (t = sqrt(x)
// throughout this library). Coefficient i is the coefficient of t^i.
// The zero polynomial has an empty coefficient vector; otherwise the
// leading coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    explicit Poly(Rat constant);
    // Coefficients in ascending degree order.
    explicit Poly(std::vector<Rat> coeffs);
    Poly(std::initializer_list<Rat> coeffs);

    static Poly monomial(int degree, Rat coeff = Rat(1));
    static Poly variable() { return monomial(1); }

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rat coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat leading() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend Poly operator*(const Rat& c, const Poly& p);
    bool operator==(const Poly& rhs) const = default;

    Rat eval(const Rat& t) const;
    double eval_double(double t) const;
    long double eval_long_double(long double t) const;
    Poly derivative() const;

    // Positive gcd of all coefficients (0 for the zero polynomial).
    Rat content() const;
    // p / content(p); preserves the sign of the leading coefficient.
    Poly primitive_part() const;

    std::string to_string() const;

private:
    void normalize();
    std::vector<Rat> coeffs_;
};

Poly pow(const Poly& base, int exponent);

// Euclidean division; throws ZeroPolynomialError on zero divisor.
// Returns {quotient, remainder} with deg(remainder) < deg(divisor).
std::pair<Poly, Poly> divide(const Poly& p, const Poly& q);

// Primitive gcd with positive leading coefficient; gcd(0, p) = primitive(p).
Poly poly_gcd(const Poly& a, const Poly& b);
Poly poly_lcm(const Poly& a, const Poly& b);

// Exact quotient p / (t-1)^k; throws NotDivisibleError naming the first
// nonzero remainder coefficient.
Poly factor_unit_root(const Poly& p, int k);

// Exact quotient p / t^k; throws NotDivisibleError if any of the k lowest
// coefficients is nonzero.
Poly deflate_zero(const Poly& p, int k);

// True iff p is nonzero and every coefficient is >= 0.
bool nonneg_coeffs(const Poly& p);

} // namespace meanineq::algebra

#endif
