#pragma once

#include "tracech/ring.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace tracech {

/// Syntax or range error, carrying the byte offset where it was detected.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}

    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

namespace detail {

class ExprParser {
public:
    ExprParser(std::string_view text, int n) : s_(text), n_(n) {}

    RingElement parse() {
        RingElement v = parse_sum();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        return v;
    }

private:
    std::string_view s_;
    int n_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    // Accepts ASCII '-' and the UTF-8 minus sign U+2212.
    bool consume_minus() {
        if (at_end()) return false;
        if (peek() == '-') {
            ++pos_;
            return true;
        }
        if (pos_ + 2 < s_.size() && static_cast<unsigned char>(s_[pos_]) == 0xE2 &&
            static_cast<unsigned char>(s_[pos_ + 1]) == 0x88 &&
            static_cast<unsigned char>(s_[pos_ + 2]) == 0x92) {
            pos_ += 3;
            return true;
        }
        return false;
    }

    bool consume_char(char c) {
        if (!at_end() && peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RingElement parse_sum() {
        skip_ws();
        bool neg = consume_minus();
        if (!neg) consume_char('+');
        RingElement acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            if (consume_minus()) {
                acc -= parse_term();
            } else if (consume_char('+')) {
                acc += parse_term();
            } else {
                break;
            }
        }
        return acc;
    }

    RingElement parse_term() {
        RingElement acc = parse_factor();
        for (;;) {
            skip_ws();
            if (consume_char('*')) {
                acc *= parse_factor();
            } else if (starts_factor()) {  // juxtaposition, e.g. "3abc" or "2(a+d)"
                acc *= parse_factor();
            } else {
                break;
            }
        }
        return acc;
    }

    bool starts_factor() const {
        if (at_end()) return false;
        const char c = peek();
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
               (c >= 'a' && c <= 'z');
    }

    RingElement parse_factor() {
        RingElement base = parse_primary();
        for (;;) {
            skip_ws();
            if (!consume_char('^')) break;
            skip_ws();
            base = pow(base, parse_exponent());
        }
        return base;
    }

    RingElement parse_primary() {
        skip_ws();
        if (at_end()) throw ParseError("unexpected end of input", pos_);
        const char c = peek();
        if (c == '(') {
            ++pos_;
            RingElement v = parse_sum();
            skip_ws();
            if (!consume_char(')')) throw ParseError("expected ')'", pos_);
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return RingElement(parse_integer());
        if (c >= 'a' && c <= 'z') return parse_variable();
        throw ParseError("expected number, variable, or '('", pos_);
    }

    Int parse_integer() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return Int(std::string(s_.substr(start, pos_ - start)));
    }

    unsigned parse_exponent() {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected a nonnegative integer exponent", pos_);
        std::size_t start = pos_;
        Int e = parse_integer();
        if (e > 1000000) throw ParseError("exponent too large", start);
        return static_cast<unsigned>(e);
    }

    int parse_index() {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected a variable index", pos_);
        std::size_t start = pos_;
        Int v = parse_integer();
        if (v < 1 || v > 1000) throw ParseError("variable index out of range", start);
        return static_cast<int>(v);
    }

    RingElement parse_variable() {
        const std::size_t start = pos_;
        const char c = peek();
        if (c == 'a' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '_') {
            pos_ += 2;
            const int i = parse_index();
            if (!consume_char('_')) throw ParseError("expected '_' in variable name", pos_);
            const int j = parse_index();
            if (i < 1 || i > n_ || j < 1 || j > n_)
                throw ParseError("variable index out of range for order " + std::to_string(n_), start);
            return RingElement::variable({i, j});
        }
        if (n_ > 3)
            throw ParseError("single-letter aliases are only defined for order <= 3", start);
        const int idx = c - 'a';
        if (idx < 0 || idx >= n_ * n_)
            throw ParseError(std::string("unknown variable '") + c + "' for order " + std::to_string(n_), start);
        ++pos_;
        return RingElement::variable({idx / n_ + 1, idx % n_ + 1});
    }
};

}  // namespace detail

/// Parses an integer literal or a polynomial expression over the entries of
/// an n x n matrix. Variables are written a_<i>_<j>; for n <= 3 the
/// row-major single letters (a, b, c, ... ) are accepted as well.
/// Juxtaposition multiplies, so "ad - bc" and "3abc" parse as expected.
inline RingElement parse_expr(std::string_view text, int n) {
    if (n < 1) throw std::invalid_argument("matrix order must be >= 1");
    return detail::ExprParser(text, n).parse();
}

}  // namespace tracech
