#ifndef CF_PARSE_HPP
#define CF_PARSE_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "cf/polynomial.hpp"

namespace cf {

// Grammar:
//   expr     := ['-'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ['^' natural]
//   base     := rational | ident | '(' expr ')'
//   rational := integer ['/' positive_integer]
// Whitespace insignificant. `i` and `r6` are reserved idents (ExtIR6 only).
namespace detail {

template <class C>
class PolyParser {
public:
    PolyParser(std::string_view text, RingPtr ring)
        : text_(text), ring_(std::move(ring)) {}

    Polynomial<C> run() {
        skip_ws();
        Polynomial<C> p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    Polynomial<C> parse_expr() {
        bool neg = false;
        skip_ws();
        if (peek() == '-') { neg = true; ++pos_; }
        Polynomial<C> acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                Polynomial<C> t = parse_term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    Polynomial<C> parse_term() {
        Polynomial<C> acc = parse_factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc = acc * parse_factor();
            } else {
                return acc;
            }
        }
    }

    Polynomial<C> parse_factor() {
        Polynomial<C> base = parse_base();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
            long e = parse_natural();
            Polynomial<C> acc = Polynomial<C>::from_rational(ring_, Rational(1));
            for (long k = 0; k < e; ++k) acc = acc * base;
            return acc;
        }
        return base;
    }

    Polynomial<C> parse_base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial<C> inner = parse_expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = parse_integer();
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                std::size_t at = pos_;
                if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
                Integer den = parse_integer();
                if (den == 0) { pos_ = at; fail("zero denominator"); }
                return Polynomial<C>::from_rational(ring_, make_rational(num, den));
            }
            return Polynomial<C>::from_rational(ring_, Rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t at = pos_;
            std::string name = parse_ident();
            if (name == "i" || name == "r6") {
                if constexpr (std::is_same_v<C, QI6>) {
                    return Polynomial<C>::constant(ring_, name == "i" ? QI6::i() : QI6::r6());
                } else {
                    pos_ = at;
                    fail("'" + name + "' is only available over the i,r6 extension");
                }
            }
            auto idx = ring_->index_of(name);
            if (!idx) { pos_ = at; fail("unknown identifier '" + name + "'"); }
            return Polynomial<C>::variable(ring_, *idx);
        }
        fail(pos_ == text_.size() ? "unexpected end of input" : "unexpected character");
    }

    Integer parse_integer() {
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        return Integer(digits);
    }
    long parse_natural() {
        std::size_t at = pos_;
        Integer n = parse_integer();
        if (n > 1000000) { pos_ = at; fail("exponent too large"); }
        return n.get_si();
    }
    std::string parse_ident() {
        std::string s;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') { s += c; ++pos_; }
            else break;
        }
        return s;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    std::string_view text_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

} // namespace detail

template <class C>
Polynomial<C> parse_poly(std::string_view text, RingPtr ring) {
    return detail::PolyParser<C>(text, std::move(ring)).run();
}

inline Polynomial<Rational> parse_q(std::string_view text, RingPtr ring) {
    return parse_poly<Rational>(text, std::move(ring));
}

} // namespace cf

#endif
