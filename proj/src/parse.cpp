#include "meanineq/parse.hpp"

#include "meanineq/errors.hpp"

#include <cctype>

namespace meanineq::algebra {

namespace {

class ExprParser {
public:
    explicit ExprParser(const std::string& text) : text_(text) {}

    RadicalExpr parse() {
        RadicalExpr e = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return e;
    }

private:
    RadicalExpr expr() {
        skip_ws();
        bool negate = false;
        if (peek() == '-') {
            ++pos_;
            negate = true;
        } else if (peek() == '+') {
            ++pos_;
        }
        RadicalExpr acc = term();
        if (negate) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc += term();
            } else if (c == '-') {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    RadicalExpr term() {
        RadicalExpr acc = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    RadicalExpr factor() {
        RadicalExpr base = atom();
        skip_ws();
        if (peek() != '^') return base;
        ++pos_;
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected exponent");
        int exp = std::stoi(text_.substr(start, pos_ - start));
        RadicalExpr acc{Poly(Rat(1))};
        for (int i = 0; i < exp; ++i) acc = acc * base;
        return acc;
    }

    RadicalExpr atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            RadicalExpr inner = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == 't') {
            ++pos_;
            return RadicalExpr{Poly::variable()};
        }
        if (c == 'R') {
            ++pos_;
            char d = peek();
            ++pos_;
            if (d == '1') return RadicalExpr::r1();
            if (d == '2') return RadicalExpr::r2();
            fail("unknown radical symbol");
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            // Integers are decimal; drop leading zeros so the bigint
            // constructor cannot read them as an octal prefix.
            while (start + 1 < pos_ && text_[start] == '0') ++start;
            return RadicalExpr{Poly(Rat(Int(text_.substr(start, pos_ - start))))};
        }
        fail("expected integer, 't', 'R1', 'R2' or '('");
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("expression parse error at offset " + std::to_string(pos_) + ": " + why + " in \"" + text_ +
                         "\"");
    }

    const std::string& text_;
    size_t pos_ = 0;
};

} // namespace

RadicalExpr parse_radical(const std::string& text) { return ExprParser(text).parse(); }

Poly parse_poly(const std::string& text) {
    RadicalExpr e = parse_radical(text);
    if (!e.is_polynomial()) throw ParseError("radicals not allowed here: \"" + text + "\"");
    return e.part(0);
}

} // namespace meanineq::algebra
