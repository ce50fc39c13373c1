#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "rigidity/errors.hpp"
#include "rigidity/polynomial.hpp"

namespace rigidity {

/// `y1^4*y4`; variables appear in declaration order. The empty monomial prints as "".
inline std::string format_monomial(const VariableContext& ctx, const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.arity(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += ctx.name(i);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out;
}

/// Canonical polynomial text: terms in descending order, e.g. `y1^8 - 12*y1^4*y4 + 24*y4^2`.
inline std::string format_polynomial(const ScalarPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        bool negative = sgn(t.coeff) < 0;
        if (first) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        first = false;
        Rational mag = abs(t.coeff);
        std::string mono = p.ring() ? format_monomial(p.ring()->ctx, t.mono) : std::string();
        if (mono.empty()) {
            out += to_string(mag);
        } else {
            if (mag != 1) out += to_string(mag) + "*";
            out += mono;
        }
    }
    return out;
}

/// Polynomial with parametric coefficients; each coefficient is parenthesized.
inline std::string format_polynomial(const ParamPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        if (!first) out += " + ";
        first = false;
        std::string mono = p.ring() ? format_monomial(p.ring()->ctx, t.mono) : std::string();
        out += "(" + format_polynomial(t.coeff) + ")";
        if (!mono.empty()) out += "*" + mono;
    }
    return out;
}

namespace detail {

/// Tokenizer and recursive-descent parser for sums of monomials.
class PolyParser {
public:
    PolyParser(std::string_view text, const RingPtr& ring, std::size_t line, std::size_t column_offset)
        : text_(text), ring_(ring), line_(line), col0_(column_offset) {}

    ScalarPoly parse() {
        std::vector<Term<Rational>> terms;
        skip_ws();
        if (at_end()) fail("empty polynomial");
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos_;
        }
        terms.push_back(parse_term(negative));
        for (skip_ws(); !at_end(); skip_ws()) {
            char c = peek();
            if (c != '+' && c != '-') fail(std::string("expected '+' or '-', found '") + c + "'");
            ++pos_;
            terms.push_back(parse_term(c == '-'));
        }
        return ScalarPoly::from_terms(ring_, std::move(terms));
    }

private:
    Term<Rational> parse_term(bool negative) {
        Rational coeff(negative ? -1 : 1);
        Monomial mono(ring_->size());
        skip_ws();
        if (at_end()) fail("expected a term");
        bool first = true;
        while (true) {
            skip_ws();
            if (at_end()) fail("expected a factor");
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                if (!first) fail("coefficient must come first in a term");
                coeff *= parse_number();
            } else if (is_ident_start(peek())) {
                std::size_t start = pos_;
                std::string name = parse_ident();
                auto idx = ring_->ctx.index_of(name);
                if (!idx) fail_at(start, "unknown variable '" + name + "'");
                unsigned e = 1;
                skip_ws();
                if (!at_end() && peek() == '^') {
                    ++pos_;
                    skip_ws();
                    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
                    e = parse_uint();
                }
                mono.set(*idx, unsigned(mono[*idx]) + e);
            } else {
                fail(std::string("unexpected character '") + peek() + "'");
            }
            first = false;
            skip_ws();
            if (at_end() || peek() != '*') break;
            ++pos_;
        }
        return {std::move(mono), std::move(coeff)};
    }

    Rational parse_number() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (!at_end() && peek() == '/') {
            ++pos_;
            std::size_t dstart = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (dstart == pos_) fail("expected denominator");
        }
        try {
            return parse_rational(text_.substr(start, pos_ - start));
        } catch (const InvalidArgument& e) {
            fail_at(start, e.what());
        }
    }

    unsigned parse_uint() {
        std::size_t start = pos_;
        unsigned long v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + unsigned(peek() - '0');
            if (v > 65535) fail_at(start, "exponent too large");
            ++pos_;
        }
        return unsigned(v);
    }

    std::string parse_ident() {
        std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
        while (!at_end() && peek() == '[') {
            while (!at_end() && peek() != ']') ++pos_;
            if (at_end()) fail_at(start, "unterminated '['");
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    static bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
    [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const {
        throw ParseError(msg, line_, col0_ + pos + 1);
    }

    std::string_view text_;
    const RingPtr& ring_;
    std::size_t line_;
    std::size_t col0_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses canonical polynomial text in `ring`. `line`/`column_offset` position errors
/// when the text is embedded in a larger file.
inline ScalarPoly parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t line = 1,
                                   std::size_t column_offset = 0) {
    return detail::PolyParser(text, ring, line, column_offset).parse();
}

}  // namespace rigidity
