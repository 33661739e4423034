#include "bidisc/parse.hpp"

#include <cctype>
#include <cstdlib>

#include "bidisc/errors.hpp"

namespace bidisc {

namespace {

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1, col = 1;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            if (text[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++pos;
        }
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    char get() {
        skip_ws();
        char c = text[pos++];
        ++col;
        return c;
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }
};

class Parser {
public:
    explicit Parser(std::string_view text) { lex.text = text; }

    BivariatePoly parse() {
        BivariatePoly p = expr();
        if (!lex.eof()) lex.fail(std::string("unexpected character '") + lex.peek() + "'");
        return p;
    }

private:
    Lexer lex;

    BivariatePoly expr() {
        BivariatePoly acc;
        bool neg = false;
        char c = lex.peek();
        if (c == '+' || c == '-') {
            neg = (c == '-');
            lex.get();
        }
        acc = term();
        if (neg) acc = -acc;
        while (!lex.eof()) {
            c = lex.peek();
            if (c != '+' && c != '-') break;
            lex.get();
            BivariatePoly t = term();
            if (c == '+')
                acc += t;
            else
                acc -= t;
        }
        return acc;
    }

    BivariatePoly term() {
        BivariatePoly acc = factor();
        while (!lex.eof()) {
            char c = lex.peek();
            if (c == '*') {
                lex.get();
                acc *= factor();
            } else if (c == '/') {
                lex.get();
                BivariatePoly d = factor();
                if (!d.is_constant()) lex.fail("division by a non-constant polynomial");
                GaussianRational dc = d.constant_term();
                if (dc.is_zero()) lex.fail("division by zero");
                acc = acc.scaled(dc.inverse());
            } else {
                break;
            }
        }
        return acc;
    }

    BivariatePoly factor() {
        BivariatePoly b = base();
        if (!lex.eof() && lex.peek() == '^') {
            lex.get();
            long k = read_uint();
            b = b.pow(k);
        }
        return b;
    }

    BivariatePoly base() {
        if (lex.eof()) lex.fail("unexpected end of input");
        char c = lex.peek();
        if (c == '(') {
            lex.get();
            BivariatePoly p = expr();
            if (lex.eof() || lex.peek() != ')') lex.fail("expected ')'");
            lex.get();
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (c == 'i') {
            lex.get();
            return BivariatePoly(GaussianRational::i());
        }
        if (c == 'z') return variable();
        lex.fail(std::string("unexpected character '") + c + "'");
    }

    BivariatePoly variable() {
        lex.get();  // 'z'
        if (lex.eof()) lex.fail("expected variable index after 'z'");
        char idx = lex.get();
        if (idx == '1') return BivariatePoly::variable(Var::z1);
        if (idx == '2') return BivariatePoly::variable(Var::z2);
        lex.fail("unknown variable (only z1 and z2 are available)");
    }

    long read_uint() {
        if (lex.eof()) lex.fail("expected a non-negative integer");
        char c = lex.peek();
        if (c == '-') lex.fail("exponent must be a non-negative integer");
        if (!std::isdigit(static_cast<unsigned char>(c))) lex.fail("expected a non-negative integer");
        long v = 0;
        while (!lex.eof() && std::isdigit(static_cast<unsigned char>(lex.peek()))) {
            v = v * 10 + (lex.get() - '0');
            if (v > 1000000) lex.fail("exponent too large");
        }
        return v;
    }

    BivariatePoly number() {
        // integer or decimal literal; decimals snap to rationals (1e-12)
        std::string digits;
        bool is_decimal = false;
        while (!lex.eof()) {
            char c = lex.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                digits += lex.get();
            } else if (c == '.') {
                is_decimal = true;
                digits += lex.get();
            } else if (c == 'e' || c == 'E') {
                // exponent part only when followed by digits or sign+digits
                std::size_t save = lex.pos;
                int sl = lex.line, sc = lex.col;
                std::string ex;
                ex += lex.get();
                if (!lex.eof() && (lex.peek() == '+' || lex.peek() == '-')) ex += lex.get();
                if (!lex.eof() && std::isdigit(static_cast<unsigned char>(lex.peek()))) {
                    is_decimal = true;
                    while (!lex.eof() && std::isdigit(static_cast<unsigned char>(lex.peek()))) ex += lex.get();
                    digits += ex;
                } else {
                    lex.pos = save;
                    lex.line = sl;
                    lex.col = sc;
                    break;
                }
            } else {
                break;
            }
        }
        if (digits.empty() || digits == ".") lex.fail("malformed number");
        if (!is_decimal) {
            mpz_class n(digits);
            return BivariatePoly(GaussianRational(mpq_class(n)));
        }
        double v = std::strtod(digits.c_str(), nullptr);
        return BivariatePoly(GaussianRational(rationalize(v)));
    }
};

} // namespace

BivariatePoly parse_poly(std::string_view text) { return Parser(text).parse(); }

std::vector<BivariatePoly> parse_ideal_text(std::string_view text) {
    std::vector<BivariatePoly> polys;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t semi = text.find(';', start);
        std::string_view piece = text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
        bool blank = piece.find_first_not_of(" \t\r\n") == std::string_view::npos;
        if (!blank) polys.push_back(parse_poly(piece));
        if (semi == std::string_view::npos) break;
        start = semi + 1;
    }
    if (polys.empty()) throw ParseError("no polynomials in ideal text", 1, 1);
    return polys;
}

GaussianRational parse_coefficient(std::string_view text) {
    BivariatePoly p = parse_poly(text);
    if (!p.is_constant()) throw ParseError("expected a constant", 1, 1);
    return p.constant_term();
}

} // namespace bidisc
