// Recursive-descent parser for polynomial expressions.
//
// Grammar (whitespace ignored between tokens):
//   expr     := '-'? term (('+' | '-') term)*
//   term     := factor ('*' factor | parenthesized-factor)*
//   factor   := base ('^' uint)?
//   base     := rational | var | '(' expr ')'
//   rational := uint ('/' uint)?
//
// Multiplication must be written explicitly with '*'; juxtaposition is
// accepted only when the next factor starts with '(' (so "2*(x+y)" and
// "2(x+y)" both parse, "2x" and "x y" do not).
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qhsing/errors.hpp"
#include "qhsing/polynomial.hpp"

namespace qhsing {

namespace detail {

class ExprParser {
public:
    ExprParser(const std::string& text, const std::vector<std::string>& variables)
        : text_(text), nvars_(variables.size()) {
        for (std::size_t i = 0; i < variables.size(); ++i) {
            if (variables[i].empty() || !var_index_.emplace(variables[i], i).second)
                throw std::invalid_argument("variable names must be nonempty and distinct");
        }
    }

    Polynomial parse() {
        Polynomial p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    static constexpr unsigned kMaxExponent = 1u << 20;

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                       text_[pos_] == '\n' || text_[pos_] == '\r'))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool consume(char c) {
        if (!peek_is(c)) return false;
        ++pos_;
        return true;
    }

    Polynomial parse_expr() {
        bool negate = consume('-');
        Polynomial acc = parse_term();
        if (negate) acc = -acc;
        for (;;) {
            if (consume('+')) {
                acc = acc + parse_term();
            } else if (consume('-')) {
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        for (;;) {
            if (consume('*')) {
                acc = acc * parse_factor();
            } else if (peek_is('(')) {
                acc = acc * parse_factor();
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_factor() {
        Polynomial base = parse_base();
        if (consume('^')) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent");
            if (pos_ >= text_.size() || !is_digit(text_[pos_])) fail("expected exponent");
            unsigned long long e = 0;
            while (pos_ < text_.size() && is_digit(text_[pos_])) {
                e = e * 10 + static_cast<unsigned>(text_[pos_] - '0');
                if (e > kMaxExponent) fail("exponent too large");
                ++pos_;
            }
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Polynomial parse_base() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = parse_expr();
            if (!consume(')')) fail("expected ')'");
            return inner;
        }
        if (is_digit(c)) return parse_rational_literal();
        if (is_ident_start(c)) return parse_variable();
        fail(std::string("unexpected character '") + c + "'");
    }

    Polynomial parse_rational_literal() {
        Integer num(read_digits());
        Integer den(1);
        if (consume('/')) {
            skip_ws();
            if (pos_ >= text_.size() || !is_digit(text_[pos_])) fail("expected denominator");
            den = Integer(read_digits());
            if (den == 0) fail("division by zero literal");
        }
        return Polynomial::constant(nvars_, make_rational(num, den));
    }

    std::string read_digits() {
        std::size_t begin = pos_;
        while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
        return text_.substr(begin, pos_ - begin);
    }

    Polynomial parse_variable() {
        const std::size_t begin = pos_;
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
        const std::string name = text_.substr(begin, pos_ - begin);
        auto it = var_index_.find(name);
        if (it == var_index_.end()) {
            pos_ = begin;
            fail("unknown variable '" + name + "'");
        }
        return Polynomial::variable(it->second, nvars_);
    }

    static bool is_digit(char c) { return c >= '0' && c <= '9'; }
    static bool is_ident_start(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    }
    static bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

    const std::string& text_;
    std::size_t nvars_;
    std::size_t pos_ = 0;
    std::map<std::string, std::size_t> var_index_;
};

}  // namespace detail

inline Polynomial parse_polynomial(const std::string& text,
                                   const std::vector<std::string>& variables) {
    return detail::ExprParser(text, variables).parse();
}

// Identifiers occurring in the text, sorted and deduplicated; used by the
// CLI when --vars is not given.
inline std::vector<std::string> scan_identifiers(const std::string& text) {
    std::vector<std::string> found;
    std::size_t i = 0;
    auto is_start = [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    };
    auto is_char = [&](char c) { return is_start(c) || (c >= '0' && c <= '9'); };
    while (i < text.size()) {
        if (is_start(text[i])) {
            std::size_t begin = i;
            while (i < text.size() && is_char(text[i])) ++i;
            found.push_back(text.substr(begin, i - begin));
        } else {
            ++i;
        }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

}  // namespace qhsing
