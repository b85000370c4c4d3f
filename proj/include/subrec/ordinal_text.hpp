#pragma once

// ASCII text form of ordinal terms.
//
//   term := "0" | mono ("+" mono)*
//   mono := "w" ("^" atom)? ("*" nat)? | nat
//   atom := nat | "w" | "(" term ")"
//   nat  := [1-9][0-9]* | "0"
//
// Parsing is strict: only the canonical spelling produced by
// render_ordinal is accepted, so text and terms are in bijection.

#include "subrec/errors.hpp"
#include "subrec/ordinal.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace subrec {

namespace detail {

inline bool is_simple_exponent(const Ordinal& e) {
    return e.is_finite() || e == Ordinal::omega();
}

inline void render_into(std::string& out, const Ordinal& a) {
    if (a.is_zero()) {
        out += '0';
        return;
    }
    bool first = true;
    for (const Monomial& m : a.monomials()) {
        if (!first) out += '+';
        first = false;
        if (m.exponent.is_zero()) {
            out += m.coefficient.str();
            continue;
        }
        out += 'w';
        if (m.exponent != Ordinal::finite(1)) {
            out += '^';
            if (is_simple_exponent(m.exponent)) {
                render_into(out, m.exponent);
            } else {
                out += '(';
                render_into(out, m.exponent);
                out += ')';
            }
        }
        if (m.coefficient != Nat(1)) {
            out += '*';
            out += m.coefficient.str();
        }
    }
}

class OrdinalParser {
public:
    explicit OrdinalParser(std::string_view text) : text_(text) {}

    Ordinal parse_all() {
        Ordinal t = term();
        if (pos_ != text_.size()) throw SyntaxError(pos_, "unexpected character");
        return t;
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void expect(char c) {
        if (peek() != c) throw SyntaxError(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }

    Nat nat() {
        std::size_t start = pos_;
        if (peek() == '0') {
            ++pos_;
            return Nat(0);
        }
        if (peek() < '1' || peek() > '9') throw SyntaxError(pos_, "expected a number");
        while (peek() >= '0' && peek() <= '9') ++pos_;
        return Nat::parse(text_.substr(start, pos_ - start));
    }

    Ordinal term() {
        if (peek() == '0') {
            std::size_t start = pos_;
            ++pos_;
            if (peek() >= '0' && peek() <= '9') throw SyntaxError(start, "leading zero");
            if (peek() == '+') throw NotCanonical(start, "zero summand");
            return {};
        }
        std::vector<Monomial> monos;
        for (;;) {
            std::size_t start = pos_;
            Monomial m = mono();
            if (!monos.empty() && !(m.exponent < monos.back().exponent))
                throw NotCanonical(start, "summand exponents must strictly decrease");
            monos.push_back(std::move(m));
            if (peek() != '+') break;
            ++pos_;
            if (peek() == '0') throw NotCanonical(pos_, "zero summand");
        }
        return Ordinal::from_monomials(std::move(monos));
    }

    Monomial mono() {
        if (peek() != 'w') {
            std::size_t start = pos_;
            Nat n = nat();
            if (n.is_zero()) throw NotCanonical(start, "zero summand");
            return Monomial{Ordinal{}, n};
        }
        ++pos_;
        Ordinal exponent = Ordinal::finite(1);
        if (peek() == '^') {
            ++pos_;
            exponent = atom();
        }
        Nat coefficient = 1;
        if (peek() == '*') {
            ++pos_;
            std::size_t start = pos_;
            coefficient = nat();
            if (coefficient.is_zero()) throw NotCanonical(start, "zero coefficient");
            if (coefficient == Nat(1)) throw NotCanonical(start, "coefficient 1 is implicit");
        }
        return Monomial{std::move(exponent), std::move(coefficient)};
    }

    Ordinal atom() {
        std::size_t start = pos_;
        if (peek() == 'w') {
            ++pos_;
            return Ordinal::omega();
        }
        if (peek() == '(') {
            ++pos_;
            Ordinal inner = term();
            expect(')');
            if (is_simple_exponent(inner)) throw NotCanonical(start, "redundant parentheses");
            return inner;
        }
        Nat n = nat();
        if (n <= Nat(1)) throw NotCanonical(start, n.is_zero() ? "exponent 0 is not canonical" : "exponent 1 is implicit");
        return Ordinal::finite(n);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline std::string render_ordinal(const Ordinal& a) {
    std::string out;
    detail::render_into(out, a);
    return out;
}

/// Throws SyntaxError or NotCanonical with the offending offset.
inline Ordinal parse_ordinal(std::string_view text) { return detail::OrdinalParser(text).parse_all(); }

inline std::ostream& operator<<(std::ostream& os, const Ordinal& a) { return os << render_ordinal(a); }

}  // namespace subrec
