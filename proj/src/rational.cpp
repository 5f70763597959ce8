#include "meanineq/rational.hpp"

#include "meanineq/errors.hpp"

#include <boost/multiprecision/integer.hpp>

namespace meanineq::algebra {

double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

std::string rat_to_string(const Rat& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) {
        s += "/";
        s += rat_den(r).str();
    }
    return s;
}

namespace {

// Decimal integer literal; leading zeros are stripped so the bigint
// constructor cannot read them as an octal prefix.
Int parse_decimal(std::string text) {
    if (text.empty()) throw ParseError("empty integer literal");
    const bool negative = text[0] == '-';
    size_t start = negative ? 1 : 0;
    while (start + 1 < text.size() && text[start] == '0') ++start;
    Int value(text.substr(start));
    return negative ? Int(-value) : value;
}

} // namespace

Rat rat_from_string(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(parse_decimal(text));
        }
        Int num = parse_decimal(text.substr(0, slash));
        Int den = parse_decimal(text.substr(slash + 1));
        if (den <= 0) {
            throw ParseError("rational denominator must be positive: " + text);
        }
        return Rat(num, den);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("invalid rational literal: " + text);
    }
}

Rat rat_gcd(const Rat& a, const Rat& b) {
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    if (a == 0) return rat_abs(b);
    if (b == 0) return rat_abs(a);
    Int num = gcd(rat_num(rat_abs(a)), rat_num(rat_abs(b)));
    Int den = lcm(rat_den(a), rat_den(b));
    return Rat(num, den);
}

} // namespace meanineq::algebra
