#include "meanineq/polynomial.hpp"

#include "meanineq/errors.hpp"

#include <sstream>

namespace meanineq::algebra {

Poly::Poly(Rat constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly::Poly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { normalize(); }

Poly Poly::monomial(int degree, Rat coeff) {
    Poly p;
    if (coeff != 0) {
        p.coeffs_.assign(degree + 1, Rat(0));
        p.coeffs_[degree] = std::move(coeff);
    }
    return p;
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[i];
}

Rat Poly::leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rat(0));
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rat(0));
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return Poly();
    Poly r;
    r.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            r.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    r.normalize();
    return r;
}

Poly operator*(const Rat& c, const Poly& p) {
    if (c == 0) return Poly();
    Poly r = p;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

Rat Poly::eval(const Rat& t) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

double Poly::eval_double(double t) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * t + rat_to_double(*it);
    }
    return acc;
}

long double Poly::eval_long_double(long double t) const {
    long double acc = 0.0L;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * t + static_cast<long double>(rat_to_double(*it));
    }
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    Poly r;
    r.coeffs_.resize(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) r.coeffs_[i - 1] = Rat(i) * coeffs_[i];
    r.normalize();
    return r;
}

Rat Poly::content() const {
    Rat g(0);
    for (const auto& c : coeffs_) g = rat_gcd(g, c);
    return g;
}

Poly Poly::primitive_part() const {
    Rat g = content();
    if (g == 0 || g == 1) return *this;
    Poly r = *this;
    for (auto& c : r.coeffs_) c /= g;
    return r;
}

Poly pow(const Poly& base, int exponent) {
    Poly acc(Rat(1));
    for (int i = 0; i < exponent; ++i) acc = acc * base;
    return acc;
}

std::pair<Poly, Poly> divide(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw ZeroPolynomialError("polynomial division by zero");
    if (p.degree() < q.degree()) return {Poly(), p};
    std::vector<Rat> rem(p.coeffs().begin(), p.coeffs().end());
    const int dq = q.degree();
    const Rat lead = q.leading();
    std::vector<Rat> quot(p.degree() - dq + 1, Rat(0));
    for (int i = p.degree(); i >= dq; --i) {
        if (rem[i] == 0) continue;
        Rat f = rem[i] / lead;
        quot[i - dq] = f;
        for (int j = 0; j <= dq; ++j) rem[i - dq + j] -= f * q.coeff(j);
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divide(x, y).second;
        x = std::move(y);
        y = r.primitive_part();
    }
    if (x.is_zero()) return x;
    x = x.primitive_part();
    if (x.leading() < 0) x = -x;
    return x;
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly g = poly_gcd(a, b);
    return divide(a * b, g).first;
}

Poly factor_unit_root(const Poly& p, int k) {
    Poly q = p;
    for (int round = 0; round < k; ++round) {
        if (q.is_zero()) throw NotDivisibleError("cannot factor (t-1) out of zero polynomial");
        // Synthetic division by (t - 1): remainder is q(1).
        Rat r = q.eval(Rat(1));
        if (r != 0) {
            throw NotDivisibleError("(t-1)^" + std::to_string(k) + " does not divide polynomial; remainder after " +
                                    std::to_string(round) + " factors evaluates to " + rat_to_string(r) + " at t=1");
        }
        std::vector<Rat> out(q.degree(), Rat(0));
        Rat carry(0);
        for (int i = q.degree(); i >= 1; --i) {
            carry = q.coeff(i) + carry;
            out[i - 1] = carry;
        }
        q = Poly(std::move(out));
    }
    return q;
}

Poly deflate_zero(const Poly& p, int k) {
    for (int i = 0; i < k; ++i) {
        if (p.coeff(i) != 0) {
            throw NotDivisibleError("t^" + std::to_string(k) + " does not divide polynomial; coefficient of t^" +
                                    std::to_string(i) + " is " + rat_to_string(p.coeff(i)));
        }
    }
    if (p.is_zero()) return p;
    std::vector<Rat> out(p.coeffs().begin() + std::min<size_t>(k, p.coeffs().size()), p.coeffs().end());
    return Poly(std::move(out));
}

bool nonneg_coeffs(const Poly& p) {
    if (p.is_zero()) return false;
    for (const auto& c : p.coeffs()) {
        if (c < 0) return false;
    }
    return true;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rat c = coeff(i);
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? "-" : "+");
        }
        first = false;
        Rat a = rat_abs(c);
        const bool unit = (a == 1);
        if (i == 0) {
            out << rat_to_string(a);
        } else {
            if (!unit) out << rat_to_string(a) << "*";
            out << "t";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

} // namespace meanineq::algebra
