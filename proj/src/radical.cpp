#include "meanineq/radical.hpp"

#include "meanineq/errors.hpp"

#include <cmath>
#include <sstream>

namespace meanineq::algebra {

namespace {
const Poly& r1_square() {
    static const Poly p{Rat(2), Rat(0), Rat(0), Rat(0), Rat(2)}; // 2t^4 + 2
    return p;
}
const Poly& r2_square() {
    static const Poly p{Rat(2), Rat(0), Rat(2)}; // 2t^2 + 2
    return p;
}
} // namespace

RadicalExpr::RadicalExpr(Poly polynomial_part) { parts_[0] = std::move(polynomial_part); }

RadicalExpr RadicalExpr::radical(int signature, Poly coefficient) {
    RadicalExpr e;
    e.parts_[signature] = std::move(coefficient);
    return e;
}

bool RadicalExpr::is_zero() const {
    for (const auto& p : parts_) {
        if (!p.is_zero()) return false;
    }
    return true;
}

bool RadicalExpr::is_polynomial() const {
    return parts_[1].is_zero() && parts_[2].is_zero() && parts_[3].is_zero();
}

int RadicalExpr::radical_term_count() const {
    int n = 0;
    for (int s = 1; s < 4; ++s) {
        if (!parts_[s].is_zero()) ++n;
    }
    return n;
}

RadicalExpr RadicalExpr::operator-() const {
    RadicalExpr r;
    for (int s = 0; s < 4; ++s) r.parts_[s] = -parts_[s];
    return r;
}

RadicalExpr& RadicalExpr::operator+=(const RadicalExpr& rhs) {
    for (int s = 0; s < 4; ++s) parts_[s] += rhs.parts_[s];
    return *this;
}

RadicalExpr& RadicalExpr::operator-=(const RadicalExpr& rhs) {
    for (int s = 0; s < 4; ++s) parts_[s] -= rhs.parts_[s];
    return *this;
}

RadicalExpr operator*(const RadicalExpr& lhs, const RadicalExpr& rhs) {
    RadicalExpr out;
    for (int a = 0; a < 4; ++a) {
        if (lhs.parts_[a].is_zero()) continue;
        for (int b = 0; b < 4; ++b) {
            if (rhs.parts_[b].is_zero()) continue;
            Poly prod = lhs.parts_[a] * rhs.parts_[b];
            // Shared radicals square down to polynomials.
            int shared = a & b;
            if (shared & 1) prod = prod * r1_square();
            if (shared & 2) prod = prod * r2_square();
            out.parts_[a ^ b] += prod;
        }
    }
    return out;
}

RadicalExpr operator*(const Rat& c, const RadicalExpr& e) {
    RadicalExpr r;
    for (int s = 0; s < 4; ++s) r.parts_[s] = c * e.parts_[s];
    return r;
}

RadicalExpr operator*(const Poly& p, const RadicalExpr& e) {
    RadicalExpr r;
    for (int s = 0; s < 4; ++s) r.parts_[s] = p * e.parts_[s];
    return r;
}

double RadicalExpr::eval_double(double t) const {
    const double r1 = std::sqrt(r1_square().eval_double(t));
    const double r2 = std::sqrt(r2_square().eval_double(t));
    return parts_[0].eval_double(t) + parts_[1].eval_double(t) * r1 + parts_[2].eval_double(t) * r2 +
           parts_[3].eval_double(t) * r1 * r2;
}

long double RadicalExpr::eval_long_double(long double t) const {
    const long double r1 = std::sqrt(r1_square().eval_long_double(t));
    const long double r2 = std::sqrt(r2_square().eval_long_double(t));
    return parts_[0].eval_long_double(t) + parts_[1].eval_long_double(t) * r1 +
           parts_[2].eval_long_double(t) * r2 + parts_[3].eval_long_double(t) * r1 * r2;
}

Rat RadicalExpr::content() const {
    Rat g(0);
    for (const auto& p : parts_) g = rat_gcd(g, p.content());
    return g;
}

RadicalExpr RadicalExpr::primitive_part() const {
    Rat g = content();
    if (g == 0 || g == 1) return *this;
    return Rat(Rat(1) / g) * *this;
}

std::string RadicalExpr::to_string() const {
    if (is_zero()) return "0";
    static const char* suffix[4] = {"", "*R1", "*R2", "*R1*R2"};
    std::ostringstream out;
    bool first = true;
    for (int s = 0; s < 4; ++s) {
        if (parts_[s].is_zero()) continue;
        if (!first) out << "+";
        first = false;
        out << "(" << parts_[s].to_string() << ")" << suffix[s];
    }
    return out.str();
}

RadicalExpr square_compare(const RadicalExpr& s, const RadicalExpr& t) {
    const int before = (s - t).radical_term_count();
    RadicalExpr result = s * s - t * t;
    const int after = result.radical_term_count();
    if (before > 0 && after >= before) {
        throw NoProgressError("square_compare eliminated no radical signature (" + std::to_string(before) + " -> " +
                              std::to_string(after) + ")");
    }
    return result;
}

} // namespace meanineq::algebra
